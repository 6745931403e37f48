#include "rado/text.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace rado {
namespace {

struct RawFactor {
    std::size_t var;  // 0-based
    std::uint32_t power;
};

struct RawTerm {
    mpz_class coeff;
    std::vector<RawFactor> factors;
};

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        terms.push_back(term(sign));
        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            terms.push_back(term(c == '-' ? -1 : 1));
        }
        return terms;
    }

    bool used_alias() const { return alias_; }
    bool used_indexed() const { return indexed_; }

private:
    RawTerm term(int sign) {
        skip_ws();
        RawTerm t;
        t.coeff = sign;
        if (at_end()) throw ParseError("expected a term", pos_);
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff *= integer();
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                t.factors.push_back(factor());
                have_factor = true;
            } else if (!at_end() && is_var_start(peek())) {
                t.factors.push_back(factor());
                have_factor = true;
            }
        } else {
            t.factors.push_back(factor());
            have_factor = true;
        }
        while (have_factor) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            t.factors.push_back(factor());
        }
        return t;
    }

    RawFactor factor() {
        skip_ws();
        if (at_end()) throw ParseError("expected a variable", pos_);
        const std::size_t start = pos_;
        char c = peek();
        if (!is_var_start(c)) throw ParseError("expected a variable", pos_);
        ++pos_;
        std::size_t var = 0;
        if (c == 'x' && !at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t digits_start = pos_;
            unsigned long idx = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                idx = idx * 10 + static_cast<unsigned long>(peek() - '0');
                if (idx > 1000) throw ParseError("variable index too large", digits_start);
                ++pos_;
            }
            if (idx == 0) throw ParseError("variable indices start at 1", digits_start);
            if (idx > kMaxArity) throw ParseError("arity above " + std::to_string(kMaxArity) + " is not supported", start);
            var = idx - 1;
            indexed_ = true;
        } else {
            switch (c) {
            case 'x': var = 0; break;
            case 'y': var = 1; break;
            case 'z': var = 2; break;
            case 'w': var = 3; break;
            default: break;
            }
            alias_ = true;
        }
        if (alias_ && indexed_) throw ParseError("mixing x,y,z,w with x1..xn is ambiguous", start);
        std::uint32_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected an exponent", pos_);
            const std::size_t exp_start = pos_;
            unsigned long e = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<unsigned long>(peek() - '0');
                if (e > kMaxExponent) throw ParseError("exponent overflow", exp_start);
                ++pos_;
            }
            power = static_cast<std::uint32_t>(e);
        }
        return {var, power};
    }

    mpz_class integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(s_.substr(start, pos_ - start));
    }

    static bool is_var_start(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    const std::string& s_;
    std::size_t pos_ = 0;
    bool alias_ = false;
    bool indexed_ = false;
};

}  // namespace

ParsedInput parse_polynomial(const std::string& text, std::size_t min_arity) {
    Parser parser(text);
    const auto raw = parser.parse();
    std::size_t arity = min_arity;
    for (const auto& t : raw)
        for (const auto& f : t.factors) arity = std::max(arity, f.var + 1);
    if (arity == 0) arity = 1;
    if (arity > kMaxArity) throw ParseError("arity above " + std::to_string(kMaxArity) + " is not supported", 0);

    ParsedInput out{IntPolynomial(arity), {}, text};
    for (const auto& t : raw) {
        MultiIndex alpha(arity);
        for (const auto& f : t.factors) alpha[f.var] += f.power;
        out.polynomial.add_term(alpha, t.coeff);
    }
    static const char* aliases[] = {"x", "y", "z", "w"};
    for (std::size_t i = 0; i < arity; ++i) {
        if (parser.used_alias() && i < 4)
            out.variable_names.emplace_back(aliases[i]);
        else
            out.variable_names.push_back("x" + std::to_string(i + 1));
    }
    return out;
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, c] : p.terms()) {
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (mag != 1 || alpha.degree() == 0) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < alpha.arity(); ++i) {
            if (alpha[i] == 0) continue;
            if (wrote) os << '*';
            os << 'x' << (i + 1);
            if (alpha[i] > 1) os << '^' << alpha[i];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace rado
