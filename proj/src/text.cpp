#include "qm/text.hpp"

#include <cctype>
#include <sstream>

namespace qm {

std::string format_monomial(const Presentation& p, const Monomial& m) {
    const int slots = p.slot_count();
    std::vector<std::string> parts(static_cast<std::size_t>(slots));
    for (const auto& [g, e] : m.entries()) {
        const auto& info = p.generator(g);
        std::string& part = parts[static_cast<std::size_t>(info.slot)];
        if (!part.empty()) part += '*';
        part += info.name();
        if (e != 1) part += "^" + std::to_string(e);
    }
    if (slots == 1) return parts[0].empty() ? "1" : parts[0];
    std::string out;
    for (int s = 0; s < slots; ++s) {
        if (s > 0) out += '@';
        out += parts[static_cast<std::size_t>(s)].empty() ? "1" : parts[static_cast<std::size_t>(s)];
    }
    return out;
}

std::string format_element(const Presentation& p, const Element& x) {
    if (x.is_zero()) return "0";
    if (auto s = x.as_scalar()) return s->to_string();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        const bool negative = c.leading_coefficient() < 0;
        const LaurentInt mag = negative ? -c : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            if (mag.term_count() > 1)
                os << '(' << mag.to_string() << ')';
            else
                os << mag.to_string();
            continue;
        }
        if (!mag.is_one()) {
            if (mag.term_count() > 1)
                os << '(' << mag.to_string() << ")*";
            else
                os << mag.to_string() << '*';
        }
        os << format_monomial(p, m);
    }
    return os.str();
}

namespace {

enum class Tok { Int, Q, Gen, Plus, Minus, Star, Caret, LParen, RParen, At, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;  // digits for Int, symbol for Gen
    int row = 0;
    int col = 0;
    int value = 0;  // exponent for Caret
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip();
            if (i_ >= s_.size()) {
                out.push_back({Tok::End, i_, {}});
                return out;
            }
            const std::size_t start = i_;
            const char ch = s_[i_];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                out.push_back({Tok::Int, start, digits()});
            } else if (ch == 'q') {
                ++i_;
                out.push_back({Tok::Q, start, {}});
            } else if (ch == 'X' || ch == 'Y' || ch == 'Z') {
                ++i_;
                expect('[');
                const int row = integer();
                expect(',');
                const int col = integer();
                expect(']');
                Token t{Tok::Gen, start, std::string(1, ch)};
                t.row = row;
                t.col = col;
                out.push_back(t);
            } else if (ch == '^') {
                ++i_;
                skip();
                bool neg = false;
                if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
                    neg = s_[i_] == '-';
                    ++i_;
                    skip();
                }
                Token t{Tok::Caret, start, {}};
                t.value = integer() * (neg ? -1 : 1);
                out.push_back(t);
            } else {
                Tok kind;
                switch (ch) {
                    case '+': kind = Tok::Plus; break;
                    case '-': kind = Tok::Minus; break;
                    case '*': kind = Tok::Star; break;
                    case '(': kind = Tok::LParen; break;
                    case ')': kind = Tok::RParen; break;
                    case '@': kind = Tok::At; break;
                    default: throw ParseError(start, std::string("unexpected character '") + ch + "'");
                }
                ++i_;
                out.push_back({kind, start, {}});
            }
        }
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    void expect(char c) {
        skip();
        if (i_ >= s_.size() || s_[i_] != c) throw ParseError(i_, std::string("expected '") + c + "'");
        ++i_;
    }
    std::string digits() {
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ParseError(i_, "expected digits");
        return std::string(s_.substr(start, i_ - start));
    }
    int integer() {
        skip();
        const std::size_t start = i_;
        const std::string d = digits();
        if (d.size() > 6) throw ParseError(start, "integer too large");
        return std::stoi(d);
    }
};

class Parser {
public:
    Parser(const Presentation& p, std::vector<Token> toks) : p_(p), t_(std::move(toks)) {}

    Element parse() {
        Element e = expr(-1);
        if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected trailing input");
        return e;
    }

private:
    const Presentation& p_;
    std::vector<Token> t_;
    std::size_t k_ = 0;

    const Token& peek() const { return t_[k_]; }
    const Token& next() { return t_[k_++]; }

    Element expr(int slot) {
        bool neg = false;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) neg = next().kind == Tok::Minus;
        Element e = tterm(slot);
        if (neg) e = -e;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = next().kind == Tok::Minus;
            Element rhs = tterm(slot);
            if (minus)
                e -= rhs;
            else
                e += rhs;
        }
        return e;
    }

    bool tensor_ahead() const {
        int depth = 0;
        for (std::size_t j = k_; j < t_.size(); ++j) {
            switch (t_[j].kind) {
                case Tok::LParen: ++depth; break;
                case Tok::RParen:
                    if (depth == 0) return false;
                    --depth;
                    break;
                case Tok::Plus:
                case Tok::Minus:
                    if (depth == 0) return false;
                    break;
                case Tok::At:
                    if (depth == 0) return true;
                    break;
                case Tok::End: return false;
                default: break;
            }
        }
        return false;
    }

    Element tterm(int slot) {
        if (slot < 0 && tensor_ahead()) {
            if (p_.slot_count() < 2) throw ParseError(peek().pos, "'@' used outside a tensor product");
            int s = 0;
            Element e = product(0);
            while (peek().kind == Tok::At) {
                const std::size_t pos = next().pos;
                if (++s >= p_.slot_count()) throw ParseError(pos, "too many tensor slots");
                e = p_.multiply(e, product(s));
            }
            return e;
        }
        Element e = product(slot);
        if (peek().kind == Tok::At) throw ParseError(peek().pos, "'@' is not allowed here");
        return e;
    }

    Element product(int slot) {
        Element e = factor(slot);
        while (peek().kind == Tok::Star) {
            next();
            e = p_.multiply(e, factor(slot));
        }
        return e;
    }

    Element factor(int slot) {
        const Token& tok = next();
        Element base;
        int exponent = 1;
        std::size_t caret_pos = 0;
        auto read_caret = [&] {
            if (peek().kind == Tok::Caret) {
                caret_pos = peek().pos;
                exponent = next().value;
            }
        };
        switch (tok.kind) {
            case Tok::Int: {
                read_caret();
                if (exponent < 0) throw ParseError(caret_pos, "negative power of an integer");
                BigInt v(tok.text);
                BigInt r = 1;
                for (int i = 0; i < exponent; ++i) r *= v;
                return Element::scalar(LaurentInt(r, 0));
            }
            case Tok::Q:
                read_caret();
                return Element::scalar(LaurentInt::q(exponent));
            case Tok::Gen: {
                read_caret();
                std::optional<int> g;
                try {
                    g = p_.find(tok.text, tok.row, tok.col, slot);
                } catch (const QmError& e) {
                    throw ParseError(tok.pos, e.what());
                }
                if (!g)
                    throw ParseError(tok.pos, "unknown generator " + tok.text + "[" + std::to_string(tok.row) + "," +
                                                  std::to_string(tok.col) + "]");
                if (exponent < 0 && !p_.generator(*g).invertible)
                    throw ParseError(caret_pos, "negative power of non-invertible " + p_.generator(*g).name());
                return p_.gen(*g, exponent);
            }
            case Tok::LParen: {
                base = expr(slot);
                if (peek().kind != Tok::RParen) throw ParseError(peek().pos, "expected ')'");
                next();
                read_caret();
                if (exponent == 1) return base;
                try {
                    return p_.power(base, exponent);
                } catch (const QmError& e) {
                    throw ParseError(caret_pos, e.what());
                }
            }
            default: break;
        }
        throw ParseError(tok.pos, "expected a number, q, a generator or '('");
    }
};

}  // namespace

Element parse_element(const Presentation& p, std::string_view text) {
    Parser parser(p, Lexer(text).run());
    return parser.parse();
}

LaurentInt parse_laurent(std::string_view text) {
    static const Presentation scalars({}, {}, 0);
    Element e = parse_element(scalars, text);
    return *e.as_scalar();
}

}  // namespace qm
