#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rado {

/// Exponent tuple alpha = (alpha_1, ..., alpha_n).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t arity) : exps_(arity, 0) {}
    explicit MultiIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
    MultiIndex(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

    static MultiIndex unit(std::size_t arity, std::size_t i);

    std::size_t arity() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    /// |alpha|, the sum of the entries.
    std::uint64_t degree() const;
    /// l(alpha), the number of strictly positive entries.
    std::size_t length() const;

    /// Entrywise partial order.
    bool divides(const MultiIndex& other) const;

    MultiIndex operator+(const MultiIndex& other) const;

    bool operator==(const MultiIndex&) const = default;
    /// Plain lexicographic order on the exponent vector.
    auto operator<=>(const MultiIndex& other) const { return exps_ <=> other.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

/// (|alpha|, l(alpha))
std::pair<std::uint64_t, std::size_t> degree_length(const MultiIndex& alpha);

/// Graded lexicographic order, largest first: higher degree first, ties broken
/// lexicographically with x1 dominating.
struct GrlexDescending {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

using Support = std::set<MultiIndex, GrlexDescending>;

/// Univariate polynomial over Z, coefficient i multiplies w^i.
class MonovariatePoly {
public:
    MonovariatePoly() = default;
    explicit MonovariatePoly(std::vector<mpz_class> coeffs);
    MonovariatePoly(std::initializer_list<long> coeffs);

    static MonovariatePoly monomial(const mpz_class& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    mpz_class coefficient(std::size_t i) const;
    const mpz_class& leading() const { return coeffs_.back(); }

    mpz_class evaluate(const mpz_class& w) const;
    mpq_class evaluate(const mpq_class& w) const;
    MonovariatePoly derivative() const;
    /// Q(w + r)
    MonovariatePoly compose_shift(const mpz_class& r) const;
    mpz_class content() const;
    MonovariatePoly primitive_part() const;

    MonovariatePoly operator+(const MonovariatePoly& o) const;
    MonovariatePoly operator-(const MonovariatePoly& o) const;
    MonovariatePoly operator*(const MonovariatePoly& o) const;
    MonovariatePoly operator*(const mpz_class& c) const;
    bool operator==(const MonovariatePoly& o) const { return coeffs_ == o.coeffs_; }

    /// Exact division by (w - r); returns false when r is not a root.
    bool divide_by_root(const mpz_class& r, MonovariatePoly& quotient) const;

    std::string to_string(const std::string& var = "w") const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

enum class TransformKind { Shift, Scale, ScaleInverse };

class IntPolynomial;

struct TransformResult;

/// Multivariate polynomial over Z stored sparsely by multi-index. Stored
/// coefficients are never zero.
class IntPolynomial {
public:
    using TermMap = std::map<MultiIndex, mpz_class, GrlexDescending>;

    IntPolynomial() = default;
    explicit IntPolynomial(std::size_t arity);

    static IntPolynomial variable(std::size_t arity, std::size_t i);
    static IntPolynomial constant(std::size_t arity, const mpz_class& c);
    static IntPolynomial from_terms(std::size_t arity,
                                    const std::vector<std::pair<MultiIndex, mpz_class>>& terms);

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    mpz_class coefficient(const MultiIndex& alpha) const;
    mpz_class constant_term() const;
    std::uint64_t total_degree() const;
    /// Largest exponent of variable i.
    std::uint32_t degree_in(std::size_t i) const;

    void add_term(const MultiIndex& alpha, const mpz_class& c);

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const mpz_class& c) const;
    IntPolynomial pow(unsigned e) const;
    bool operator==(const IntPolynomial& o) const = default;

    mpz_class evaluate(std::span<const mpz_class> point) const;
    mpz_class evaluate(std::span<const long long> point) const;

    mpz_class content() const;
    IntPolynomial primitive_part() const;
    /// Same polynomial viewed in a larger number of variables.
    IntPolynomial widen(std::size_t arity) const;
    /// Variables renamed: variable i becomes variable perm[i].
    IntPolynomial permute(std::span<const std::size_t> perm) const;

private:
    std::size_t arity_ = 0;
    TermMap terms_;
};

Support support(const IntPolynomial& p);

/// P(x1 + r, ..., xn + r), computed from the Taylor expansion at (r, ..., r).
IntPolynomial shift(const IntPolynomial& p, const mpz_class& r);

/// (1/beta!) d^beta P / dx^beta evaluated at (r, ..., r): the coefficient of
/// x^beta in shift(P, r).
mpz_class taylor_coefficient(const IntPolynomial& p, const MultiIndex& beta, const mpz_class& r);

/// P(w, ..., w)
MonovariatePoly diagonal(const IntPolynomial& p);

struct ExtremalIndices {
    Support minimal;
    Support maximal;
};

/// Minimal and maximal elements of Supp(P) under the entrywise order.
/// Throws std::invalid_argument for the zero polynomial.
ExtremalIndices extremal_indices(const IntPolynomial& p);

struct TransformResult {
    IntPolynomial polynomial;
    /// The result equals multiplier * P(transformed variables).
    mpz_class multiplier = 1;
};

/// P(x + r), P(r x) or P(x / r) with denominators cleared by the least power
/// of r. Scale kinds reject r = 0.
TransformResult transform(const IntPolynomial& p, TransformKind kind, const mpz_class& r);

/// Binomial coefficient product prod_i C(alpha_i, beta_i); zero unless beta <= alpha.
mpz_class multi_binomial(const MultiIndex& alpha, const MultiIndex& beta);

std::string to_string(const MultiIndex& alpha);

}  // namespace rado
