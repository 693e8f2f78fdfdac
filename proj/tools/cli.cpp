#include "cli.hpp"

#include "qm/graded_ideal.hpp"
#include "qm/qmatrix.hpp"
#include "qm/strata.hpp"
#include "qm/text.hpp"
#include "qm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qm::cli {

namespace {

using nlohmann::json;

struct Config {
    int n = 0;  // 0: command default
    bool json = false;
    int t = -1;
    std::string pair;
    std::string expr;
    std::string gens_file;
    bool certificate = false;
    bool oracle = false;
    std::string suite;
    std::uint64_t seed = RunOptions{}.seed;
    int degree_bound = 4;
    int words = RunOptions{}.words;
    bool serial = false;
};

int size_or(const Config& c, int fallback) {
    const int n = c.n > 0 ? c.n : fallback;
    if (n < 1) throw QmError(ErrorCode::InvalidArgument, "n must be at least 1");
    return n;
}

void print(std::ostream& out, const Config& c, const json& j, const std::string& text) {
    if (c.json)
        out << j.dump(2) << '\n';
    else
        out << text << '\n';
}

json degree_json(const Presentation& p, const Element& x) {
    const auto d = p.multidegree(x);
    return d ? json(*d) : json(nullptr);
}

void element_command(std::ostream& out, const Config& c, const Presentation& p, const Element& x) {
    const std::string text = format_element(p, x);
    print(out, c, {{"element", text}, {"degree", degree_json(p, x)}}, text);
}

std::vector<Element> read_generators(const Presentation& p, const std::string& file) {
    std::ifstream in(file);
    if (!in) throw QmError(ErrorCode::InvalidArgument, "cannot read generator file '" + file + "'");
    std::vector<Element> gens;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        gens.push_back(parse_element(p, line));
    }
    return gens;
}

std::string report_text(const SuiteReport& r) {
    std::ostringstream s;
    s << r.id << ' ' << r.name << " n=" << r.n << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.cases
      << " cases, " << r.failures.size() << " failures, " << std::fixed << std::setprecision(3) << r.elapsed_seconds
      << " s)";
    for (const auto& f : r.failures) {
        s << "\n  " << f.description << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs;
        if (!f.replay.empty()) s << "\n    replay: " << f.replay;
        for (const auto& g : f.ideal) s << "\n    ideal: " << g;
    }
    return s.str();
}

int cmd_verify(std::ostream& out, const Config& c) {
    RunOptions o;
    o.n = c.n;
    o.seed = c.seed;
    o.degree_bound = c.degree_bound;
    o.words = c.words;
    o.parallel = !c.serial;
    std::string key = c.suite;
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (key == "conjecture") {
        const ConjectureEvidence e = conjecture_evidence(size_or(c, 2), c.degree_bound, o.parallel);
        if (c.json) {
            out << evidence_json(e) << '\n';
        } else {
            out << "ker(beta) vs K_rc, n=" << e.n << ", total degree <= " << e.max_degree << ": " << e.equal << "/"
                << e.components << " components agree (evidence only)\n";
            for (const auto& m : e.mismatches) out << "  " << m << '\n';
        }
        return kOk;
    }
    std::vector<SuiteReport> reports;
    if (key == "all") {
        reports = run_all(o);
    } else {
        reports.push_back(run_suite(c.suite, o));
    }
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass();
    if (c.json) {
        out << (key == "all" ? reports_json(reports) : report_json(reports.front())) << '\n';
    } else {
        for (const auto& r : reports) out << report_text(r) << '\n';
    }
    return pass ? kOk : kVerifyFailed;
}

int dispatch(const std::string& cmd, std::ostream& out, const Config& c) {
    if (cmd == "nf" || cmd == "delta" || cmd == "tau") {
        const int n = size_or(c, 2);
        const Presentation A = oqm_presentation(n);
        const Element x = parse_element(A, c.expr);
        if (cmd == "nf") element_command(out, c, A, x);
        if (cmd == "delta") element_command(out, c, oqm_tensor_square(n), comultiply(n, x));
        if (cmd == "tau") element_command(out, c, A, transpose_tau(n, x));
        return kOk;
    }
    if (cmd == "counit") {
        const int n = size_or(c, 2);
        const LaurentInt v = counit(n, parse_element(oqm_presentation(n), c.expr));
        print(out, c, {{"value", v.to_string()}}, v.to_string());
        return kOk;
    }
    if (cmd == "minor") {
        const int n = size_or(c, 2);
        const MinorKey k = parse_minor_key(c.expr, n);
        const Element m = c.oracle ? quantum_minor_perm(n, k.rows, k.cols) : quantum_minor(n, k);
        const Presentation A = oqm_presentation(n);
        const std::string text = format_element(A, m);
        print(out, c, {{"key", format_minor_key(k)}, {"element", text}, {"method", c.oracle ? "permutation" : "laplace"}},
              text);
        return kOk;
    }
    if (cmd == "strata list") {
        const int n = size_or(c, 2);
        json a = json::array();
        std::string text;
        for (int t = 0; t <= n; ++t) {
            if (c.t >= 0 && t != c.t) continue;
            for (const auto& p : enumerate_rc(n, t)) {
                a.push_back({{"t", t}, {"pair", format_step_pair(p)}});
                text += (text.empty() ? "" : "\n") + format_step_pair(p);
            }
        }
        print(out, c, a, text);
        return kOk;
    }
    if (cmd == "strata kgens") {
        const int n = size_or(c, 2);
        const StepPair p = parse_step_pair(c.pair, n);
        check_step_pair(n, p);
        const Presentation A = oqm_presentation(n);
        json a = json::array();
        std::string text;
        for (const auto& k : krc_keys(n, p)) {
            const std::string e = format_element(A, quantum_minor(n, k));
            a.push_back({{"key", format_minor_key(k)}, {"element", e}});
            text += (text.empty() ? "" : "\n") + format_minor_key(k) + " = " + e;
        }
        print(out, c, a, text.empty() ? "(none)" : text);
        return kOk;
    }
    if (cmd == "strata beta") {
        const int n = size_or(c, 2);
        const StepPair p = parse_step_pair(c.pair, n);
        const Homomorphism& beta = beta_map(n, p);
        element_command(out, c, beta.target(), beta.apply(parse_element(beta.source(), c.expr)));
        return kOk;
    }
    if (cmd == "member") {
        const int n = size_or(c, 2);
        const Presentation A = oqm_presentation(n);
        const GradedIdeal ideal(A, read_generators(A, c.gens_file));
        const Element f = parse_element(A, c.expr);
        const MembershipResult r = ideal.contains(f, c.certificate);
        json j = {{"member", r.member}, {"rows", r.rows}, {"columns", r.columns}};
        std::string text = r.member ? "true" : "false";
        if (r.member && r.certificate) {
            const Certificate& cert = *r.certificate;
            json terms = json::array();
            text += "\nscale: " + cert.scale.to_string();
            for (const auto& t : cert.terms) {
                const std::string l = format_monomial(A, t.left), rr = format_monomial(A, t.right);
                terms.push_back({{"generator", t.generator}, {"coef", t.coef.to_string()}, {"left", l}, {"right", rr}});
                text += "\n(" + t.coef.to_string() + ") * " + l + " * g" + std::to_string(t.generator + 1) + " * " + rr;
            }
            const bool ok = verify_certificate(ideal, f, cert);
            j["certificate"] = {{"scale", cert.scale.to_string()}, {"terms", terms}, {"verified", ok}};
            text += std::string("\nverified: ") + (ok ? "yes" : "no");
        }
        print(out, c, j, text);
        return kOk;
    }
    if (cmd == "hspec count") {
        const int n = size_or(c, 2);
        if (c.t < 0 || c.t > n) throw QmError(ErrorCode::InvalidArgument, "-t must lie in 0..n");
        const auto v = hspec_count(n, c.t);
        const std::string text = v ? std::to_string(*v) : "Unknown";
        print(out, c, {{"n", n}, {"t", c.t}, {"count", v ? json(*v) : json("Unknown")}}, text);
        return kOk;
    }
    if (cmd == "hspec m2") {
        const Presentation A = oqm_presentation(2);
        json a = json::array();
        std::string text;
        auto pos = [](const std::vector<Position>& ps, const char* sym) {
            std::vector<std::string> v;
            for (const auto& [i, j] : ps) v.push_back(std::string(sym) + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
            return v;
        };
        for (const auto& e : hspec_m2_catalog()) {
            std::vector<std::string> gens;
            for (const auto& g : e.known_generators) gens.push_back(format_element(A, g));
            const Homomorphism k = kappa_map(2, e);
            const StepPair stratum =
                stratum_of(2, [&](const MinorKey& key) { return k.apply(quantum_minor(2, key)).is_zero(); });
            a.push_back({{"t", e.pair.t()},
                         {"pair", format_step_pair(e.pair)},
                         {"qPlus", pos(e.q_plus, "Y")},
                         {"qMinus", pos(e.q_minus, "Z")},
                         {"generators", gens},
                         {"stratum", format_step_pair(stratum)}});
            std::string line = format_step_pair(e.pair) + "  kill{";
            const auto qp = pos(e.q_plus, "Y"), qm = pos(e.q_minus, "Z");
            for (std::size_t k = 0; k < qp.size() + qm.size(); ++k)
                line += (k ? "," : "") + (k < qp.size() ? qp[k] : qm[k - qp.size()]);
            line += "}  <";
            for (std::size_t k = 0; k < gens.size(); ++k) line += (k ? ", " : "") + gens[k];
            line += ">";
            text += (text.empty() ? "" : "\n") + line;
        }
        print(out, c, a, text);
        return kOk;
    }
    if (cmd == "verify") return cmd_verify(out, c);
    throw QmError(ErrorCode::InvalidArgument, "unknown command");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Exact computations in quantum matrices O_q(M_n) and their H-strata", "qmcli"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-n,--size", c.n, "matrix size n")->check(CLI::Range(1, 8));
    app.add_flag("--json", c.json, "JSON output");

    auto expr_cmd = [&](const char* name, const char* help, const char* what) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("expr", c.expr, what)->required();
        return s;
    };
    expr_cmd("nf", "normal form of an expression in X[i,j]", "expression");
    CLI::App* minor = expr_cmd("minor", "quantum minor [I|J]", "minor key, e.g. \"[1 2|1 3]\"");
    minor->add_flag("--oracle", c.oracle, "use the permutation-sum formula");
    expr_cmd("delta", "comultiplication", "expression");
    expr_cmd("tau", "transpose anti-automorphism", "expression");
    expr_cmd("counit", "counit", "expression");

    CLI::App* strata = app.add_subcommand("strata", "step pairs, K_rc and beta_rc");
    strata->require_subcommand(1);
    strata->add_subcommand("list", "list step pairs")->add_option("-t", c.t, "pivot count")->check(CLI::Range(0, 8));
    strata->add_subcommand("kgens", "generators of K_rc")->add_option("--pair", c.pair, "r=(..);c=(..)")->required();
    CLI::App* beta = strata->add_subcommand("beta", "apply beta_rc");
    beta->add_option("--pair", c.pair, "r=(..);c=(..)")->required();
    beta->add_option("expr", c.expr, "expression in X")->required();

    CLI::App* member = app.add_subcommand("member", "graded ideal membership");
    member->add_option("--gens", c.gens_file, "file with one generator per line")->required();
    member->add_flag("--certificate", c.certificate, "print a verified certificate");
    member->add_option("expr", c.expr, "homogeneous element")->required();

    CLI::App* hspec = app.add_subcommand("hspec", "H-prime data");
    hspec->require_subcommand(1);
    hspec->add_subcommand("m2", "the n=2 catalog");
    hspec->add_subcommand("count", "H-prime count of a stratum family")
        ->add_option("-t", c.t, "pivot count")
        ->required()
        ->check(CLI::Range(0, 8));

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", c.suite, "S1..S16, a suite name, all, or conjecture")->required();
    verify->add_option("--seed", c.seed, "seed for random words");
    verify->add_option("--degree-bound", c.degree_bound, "degree bound for generation checks")->check(CLI::Range(1, 12));
    verify->add_option("--words", c.words, "random words in S1")->check(CLI::NonNegativeNumber);
    verify->add_flag("--serial", c.serial, "run cases serially");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    std::string cmd;
    for (CLI::App* s = &app; !s->get_subcommands().empty();) {
        s = s->get_subcommands().front();
        cmd += (cmd.empty() ? "" : " ") + s->get_name();
    }
    try {
        return dispatch(cmd, out, c);
    } catch (const ParseError& e) {
        err << "error [ParseError]: " << e.what() << '\n';
        return kUsage;
    } catch (const QmError& e) {
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
        return e.code() == ErrorCode::UnknownSuite ? kUsage : kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
}

}  // namespace qm::cli
