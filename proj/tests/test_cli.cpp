#include "cli.hpp"
#include "qm/qmatrix.hpp"
#include "qm/text.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace qm;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    std::string s = out.str();
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return {code, s, err.str()};
}

}  // namespace

TEST(Cli, Examples) {
    EXPECT_EQ(run({"nf", "-n", "2", "X[2,2]*X[1,1]"}).out, "X[1,1]*X[2,2] - (q - q^-1)*X[1,2]*X[2,1]");
    EXPECT_EQ(run({"minor", "-n", "2", "[1 2|1 2]"}).out, "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]");
    EXPECT_EQ(run({"minor", "-n", "2", "--oracle", "[1 2|1 2]"}).out, "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]");
    EXPECT_EQ(run({"hspec", "count", "-n", "2", "-t", "1"}).out, "9");
    EXPECT_EQ(run({"hspec", "count", "-n", "3", "-t", "2"}).out, "Unknown");
    EXPECT_EQ(run({"delta", "-n", "2", "X[1,1]"}).out, "X[1,1]@X[1,1] + X[1,2]@X[2,1]");
    EXPECT_EQ(run({"counit", "-n", "2", "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]"}).out, "1");
    EXPECT_EQ(run({"tau", "-n", "2", "X[1,2]"}).out, "X[2,1]");
    EXPECT_EQ(run({"strata", "beta", "-n", "2", "--pair", "r=(1);c=(1)", "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]"}).out, "0");
}

TEST(Cli, StrataListing) {
    const Result r = run({"strata", "list", "-n", "2", "-t", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "r=(1);c=(1)\nr=(1);c=(2)\nr=(2);c=(1)\nr=(2);c=(2)");
    const Result k = run({"strata", "kgens", "-n", "2", "--pair", "r=(2);c=(1)"});
    EXPECT_NE(k.out.find("[1|1] = X[1,1]"), std::string::npos);
    EXPECT_NE(k.out.find("[1 2|1 2]"), std::string::npos);
}

TEST(Cli, MembershipWithCertificate) {
    const std::string file = ::testing::TempDir() + "qm_gens.txt";
    {
        std::ofstream f(file);
        f << "# generators\nX[2,1]\n\nX[2,2]\n";
    }
    const Result r = run({"--json", "member", "-n", "2", "--gens", file, "--certificate", "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["member"], true);
    EXPECT_EQ(j["certificate"]["verified"], true);
    EXPECT_EQ(run({"member", "-n", "2", "--gens", file, "X[1,1]"}).out, "false");
    std::remove(file.c_str());
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"nf", "-n", "2", "X[1,1"}).code, 2);
    EXPECT_EQ(run({"nf", "-n", "2", "Y[1,1]"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"verify", "S99"}).code, 2);
    EXPECT_EQ(run({"minor", "-n", "2", "[1 2|1]"}).code, 3);
    EXPECT_EQ(run({"hspec", "count", "-n", "2", "-t", "3"}).code, 3);
    EXPECT_EQ(run({"strata", "kgens", "-n", "2", "--pair", "r=(1);c=(1,2)"}).code, 3);
    EXPECT_EQ(run({"member", "-n", "2", "--gens", "/nonexistent/file", "X[1,1]"}).code, 3);
    EXPECT_EQ(run({"verify", "S8", "-n", "3"}).code, 0);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ParseErrorsNamePosition) {
    const Result r = run({"nf", "-n", "2", "X[1,1] * )"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("ParseError"), std::string::npos);
    EXPECT_NE(r.err.find("position 9"), std::string::npos);
}

TEST(Cli, OutputsRoundTrip) {
    const Presentation A = oqm_presentation(3);
    for (const char* e : {"X[3,3]*X[1,1]*X[2,2]", "X[3,1]*X[1,3] - q^-2*X[2,2]", "(X[2,1] + X[1,2])^3"}) {
        const Result r = run({"nf", "-n", "3", e});
        ASSERT_EQ(r.code, 0);
        EXPECT_EQ(run({"nf", "-n", "3", r.out}).out, r.out);
        EXPECT_EQ(parse_element(A, r.out), parse_element(A, e));
    }
    const Presentation T = oqm_tensor_square(2);
    const Result d = run({"delta", "-n", "2", "X[2,2]*X[1,1]"});
    EXPECT_EQ(format_element(T, parse_element(T, d.out)), d.out);
}

TEST(Cli, JsonIsCanonical) {
    for (std::vector<std::string> args : {std::vector<std::string>{"--json", "hspec", "m2"},
                                          std::vector<std::string>{"--json", "verify", "S8", "-n", "2"},
                                          std::vector<std::string>{"--json", "nf", "-n", "2", "X[2,1]*X[1,1]"}}) {
        const Result r = run(args);
        ASSERT_EQ(r.code, 0) << r.err;
        const auto j = nlohmann::json::parse(r.out);
        EXPECT_EQ(j.dump(2), r.out);
    }
}

TEST(Cli, CatalogExportCarriesStrata) {
    const auto j = nlohmann::json::parse(run({"--json", "hspec", "m2"}).out);
    ASSERT_EQ(j.size(), 14u);
    for (const auto& e : j) EXPECT_EQ(e["pair"], e["stratum"]);
}
