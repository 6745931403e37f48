#include "rado/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rado {

MultiIndex MultiIndex::unit(std::size_t arity, std::size_t i) {
    MultiIndex e(arity);
    e.exps_.at(i) = 1;
    return e;
}

std::uint64_t MultiIndex::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::size_t MultiIndex::length() const {
    return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(),
                                                  [](std::uint32_t e) { return e > 0; }));
}

bool MultiIndex::divides(const MultiIndex& other) const {
    if (arity() != other.arity()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    if (arity() != other.arity()) throw std::invalid_argument("multi-index arity mismatch");
    MultiIndex out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
    return out;
}

std::pair<std::uint64_t, std::size_t> degree_length(const MultiIndex& alpha) {
    return {alpha.degree(), alpha.length()};
}

bool GrlexDescending::operator()(const MultiIndex& a, const MultiIndex& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a > b;
}

std::string to_string(const MultiIndex& alpha) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < alpha.arity(); ++i) {
        if (i) os << ',';
        os << alpha[i];
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// MonovariatePoly

MonovariatePoly::MonovariatePoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

MonovariatePoly::MonovariatePoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

MonovariatePoly MonovariatePoly::monomial(const mpz_class& c, std::size_t power) {
    std::vector<mpz_class> v(power + 1, 0);
    v[power] = c;
    return MonovariatePoly(std::move(v));
}

void MonovariatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class MonovariatePoly::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class MonovariatePoly::evaluate(const mpz_class& w) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
    return acc;
}

mpq_class MonovariatePoly::evaluate(const mpq_class& w) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + mpq_class(*it);
    return acc;
}

MonovariatePoly MonovariatePoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return MonovariatePoly(std::move(d));
}

MonovariatePoly MonovariatePoly::compose_shift(const mpz_class& r) const {
    // Horner with (w + r) as the variable.
    MonovariatePoly acc;
    const MonovariatePoly lin(std::vector<mpz_class>{r, 1});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + MonovariatePoly(std::vector<mpz_class>{*it});
    return acc;
}

mpz_class MonovariatePoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

MonovariatePoly MonovariatePoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return MonovariatePoly(std::move(out));
}

MonovariatePoly MonovariatePoly::operator+(const MonovariatePoly& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return MonovariatePoly(std::move(out));
}

MonovariatePoly MonovariatePoly::operator-(const MonovariatePoly& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return MonovariatePoly(std::move(out));
}

MonovariatePoly MonovariatePoly::operator*(const MonovariatePoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return MonovariatePoly(std::move(out));
}

MonovariatePoly MonovariatePoly::operator*(const mpz_class& c) const {
    std::vector<mpz_class> out(coeffs_);
    for (auto& x : out) x *= c;
    return MonovariatePoly(std::move(out));
}

bool MonovariatePoly::divide_by_root(const mpz_class& r, MonovariatePoly& quotient) const {
    if (is_zero()) {
        quotient = {};
        return true;
    }
    // Synthetic division from the top.
    std::vector<mpz_class> q(coeffs_.size() - 1);
    mpz_class carry = 0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
        carry = carry * r + coeffs_[k];
        q[k - 1] = carry;
    }
    mpz_class rem = carry * r + coeffs_[0];
    if (rem != 0) return false;
    quotient = MonovariatePoly(std::move(q));
    return true;
}

std::string MonovariatePoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::size_t arity) : arity_(arity) {}

IntPolynomial IntPolynomial::variable(std::size_t arity, std::size_t i) {
    IntPolynomial p(arity);
    p.add_term(MultiIndex::unit(arity, i), 1);
    return p;
}

IntPolynomial IntPolynomial::constant(std::size_t arity, const mpz_class& c) {
    IntPolynomial p(arity);
    p.add_term(MultiIndex(arity), c);
    return p;
}

IntPolynomial IntPolynomial::from_terms(std::size_t arity,
                                        const std::vector<std::pair<MultiIndex, mpz_class>>& terms) {
    IntPolynomial p(arity);
    for (const auto& [alpha, c] : terms) p.add_term(alpha, c);
    return p;
}

mpz_class IntPolynomial::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class IntPolynomial::constant_term() const { return coefficient(MultiIndex(arity_)); }

std::uint64_t IntPolynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t IntPolynomial::degree_in(std::size_t i) const {
    std::uint32_t d = 0;
    for (const auto& [alpha, c] : terms_) d = std::max(d, alpha[i]);
    return d;
}

void IntPolynomial::add_term(const MultiIndex& alpha, const mpz_class& c) {
    if (alpha.arity() != arity_) throw std::invalid_argument("term arity does not match polynomial arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    IntPolynomial out(*this);
    for (const auto& [alpha, c] : o.terms_) out.add_term(alpha, c);
    return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    IntPolynomial out(*this);
    for (const auto& [alpha, c] : o.terms_) out.add_term(alpha, -c);
    return out;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out(arity_);
    for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, -c);
    return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    IntPolynomial out(arity_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) out.add_term(a + b, ca * cb);
    return out;
}

IntPolynomial IntPolynomial::operator*(const mpz_class& c) const {
    IntPolynomial out(arity_);
    if (c == 0) return out;
    for (const auto& [alpha, x] : terms_) out.terms_.emplace(alpha, x * c);
    return out;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result = constant(arity_, 1);
    IntPolynomial base(*this);
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

mpz_class IntPolynomial::evaluate(std::span<const mpz_class> point) const {
    if (point.size() != arity_) throw std::invalid_argument("evaluation point has wrong arity");
    mpz_class acc = 0, term, pw;
    for (const auto& [alpha, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < arity_; ++i) {
            if (alpha[i] == 0) continue;
            mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), alpha[i]);
            term *= pw;
        }
        acc += term;
    }
    return acc;
}

mpz_class IntPolynomial::evaluate(std::span<const long long> point) const {
    std::vector<mpz_class> big;
    big.reserve(point.size());
    for (long long v : point) big.emplace_back(static_cast<long>(v));
    return evaluate(std::span<const mpz_class>(big));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& [alpha, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (terms_.begin()->second < 0) g = -g;
    IntPolynomial out(arity_);
    for (const auto& [alpha, c] : terms_) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        out.terms_.emplace(alpha, q);
    }
    return out;
}

IntPolynomial IntPolynomial::widen(std::size_t arity) const {
    if (arity < arity_) throw std::invalid_argument("cannot narrow a polynomial");
    IntPolynomial out(arity);
    for (const auto& [alpha, c] : terms_) {
        auto e = alpha.exponents();
        e.resize(arity, 0);
        out.terms_.emplace(MultiIndex(std::move(e)), c);
    }
    return out;
}

IntPolynomial IntPolynomial::permute(std::span<const std::size_t> perm) const {
    if (perm.size() != arity_) throw std::invalid_argument("permutation has wrong size");
    IntPolynomial out(arity_);
    for (const auto& [alpha, c] : terms_) {
        MultiIndex beta(arity_);
        for (std::size_t i = 0; i < arity_; ++i) beta[perm[i]] = alpha[i];
        out.add_term(beta, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Free operations

Support support(const IntPolynomial& p) {
    Support s;
    for (const auto& [alpha, c] : p.terms()) s.insert(alpha);
    return s;
}

mpz_class multi_binomial(const MultiIndex& alpha, const MultiIndex& beta) {
    mpz_class out = 1, b;
    for (std::size_t i = 0; i < alpha.arity(); ++i) {
        if (beta[i] > alpha[i]) return 0;
        mpz_bin_uiui(b.get_mpz_t(), alpha[i], beta[i]);
        out *= b;
    }
    return out;
}

namespace {

// Visit every beta <= alpha.
template <class F>
void for_each_below(const MultiIndex& alpha, F&& f) {
    MultiIndex beta(alpha.arity());
    const std::size_t n = alpha.arity();
    while (true) {
        f(beta);
        std::size_t i = 0;
        while (i < n && beta[i] == alpha[i]) {
            beta[i] = 0;
            ++i;
        }
        if (i == n) return;
        ++beta[i];
    }
}

}  // namespace

IntPolynomial shift(const IntPolynomial& p, const mpz_class& r) {
    if (r == 0) return p;
    IntPolynomial out(p.arity());
    mpz_class pw;
    for (const auto& [alpha, c] : p.terms()) {
        const auto da = alpha.degree();
        for_each_below(alpha, [&](const MultiIndex& beta) {
            mpz_pow_ui(pw.get_mpz_t(), r.get_mpz_t(), da - beta.degree());
            out.add_term(beta, c * multi_binomial(alpha, beta) * pw);
        });
    }
    return out;
}

mpz_class taylor_coefficient(const IntPolynomial& p, const MultiIndex& beta, const mpz_class& r) {
    if (beta.arity() != p.arity()) throw std::invalid_argument("index arity does not match polynomial");
    mpz_class acc = 0, pw;
    const auto db = beta.degree();
    for (const auto& [alpha, c] : p.terms()) {
        if (!beta.divides(alpha)) continue;
        mpz_pow_ui(pw.get_mpz_t(), r.get_mpz_t(), alpha.degree() - db);
        acc += c * multi_binomial(alpha, beta) * pw;
    }
    return acc;
}

MonovariatePoly diagonal(const IntPolynomial& p) {
    std::vector<mpz_class> coeffs(p.total_degree() + 1, 0);
    for (const auto& [alpha, c] : p.terms()) coeffs[alpha.degree()] += c;
    return MonovariatePoly(std::move(coeffs));
}

ExtremalIndices extremal_indices(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("extremal indices of the zero polynomial");
    const Support s = support(p);
    ExtremalIndices out;
    for (const auto& a : s) {
        bool is_min = true, is_max = true;
        for (const auto& b : s) {
            if (a == b) continue;
            if (b.divides(a)) is_min = false;
            if (a.divides(b)) is_max = false;
        }
        if (is_min) out.minimal.insert(a);
        if (is_max) out.maximal.insert(a);
    }
    return out;
}

TransformResult transform(const IntPolynomial& p, TransformKind kind, const mpz_class& r) {
    switch (kind) {
    case TransformKind::Shift:
        return {shift(p, r), 1};
    case TransformKind::Scale: {
        if (r == 0) throw std::invalid_argument("scale factor must be nonzero");
        IntPolynomial out(p.arity());
        mpz_class pw;
        for (const auto& [alpha, c] : p.terms()) {
            mpz_pow_ui(pw.get_mpz_t(), r.get_mpz_t(), alpha.degree());
            out.add_term(alpha, c * pw);
        }
        return {out, 1};
    }
    case TransformKind::ScaleInverse: {
        if (r == 0) throw std::invalid_argument("scale factor must be nonzero");
        // Least k with r^k * c_alpha / r^|alpha| integral for every alpha.
        const std::uint64_t top = p.total_degree();
        for (std::uint64_t k = 0; k <= top; ++k) {
            IntPolynomial out(p.arity());
            bool integral = true;
            mpz_class pw, q;
            for (const auto& [alpha, c] : p.terms()) {
                const auto d = alpha.degree();
                if (k >= d) {
                    mpz_pow_ui(pw.get_mpz_t(), r.get_mpz_t(), k - d);
                    out.add_term(alpha, c * pw);
                } else {
                    mpz_pow_ui(pw.get_mpz_t(), r.get_mpz_t(), d - k);
                    if (!mpz_divisible_p(c.get_mpz_t(), pw.get_mpz_t())) {
                        integral = false;
                        break;
                    }
                    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), pw.get_mpz_t());
                    out.add_term(alpha, q);
                }
            }
            if (integral) {
                mpz_class mult;
                mpz_pow_ui(mult.get_mpz_t(), r.get_mpz_t(), k);
                return {out, mult};
            }
        }
        throw std::logic_error("unreachable: k = total degree always clears denominators");
    }
    }
    throw std::invalid_argument("unknown transform kind");
}

}  // namespace rado
