#pragma once

#include "rado/polynomial.hpp"

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rado {

/// Finite colouring of the positive integers with colours 1..k.
class Coloring {
public:
    enum class Kind { Explicit, Residue, LastNonzeroDigit, DigitCount, Pullback };
    enum class Inner { Square, Cube, Omega };

    /// colors[v - 1] is the colour of v; defined on [1, colors.size()] only.
    static Coloring explicit_colors(std::vector<int> colors);
    /// (v mod m) + 1; m colours.
    static Coloring residue(long m);
    /// Last nonzero base-q digit (1..q-1); 0 gets colour q. q colours.
    static Coloring last_nonzero_digit(long base);
    /// (number of base-q digits mod k) + 1; k colours.
    static Coloring digit_count(long base, int k);
    /// v -> outer(f(v)) with f = square, cube or the prime-factor count Omega.
    static Coloring pullback(Inner inner, Coloring outer);

    Kind kind() const { return kind_; }
    Inner inner() const { return inner_; }
    long parameter() const { return param_; }
    const std::vector<int>& explicit_table() const { return table_; }
    const Coloring& outer() const { return *outer_; }

    int color_count() const;
    /// Colour of v; throws std::invalid_argument outside the domain.
    int color(const mpz_class& v) const;
    int color(long long v) const { return color(mpz_class(static_cast<long>(v))); }
    /// Colours of 0..n (entry 0 is unused and set to 0).
    std::vector<int> table(long long n) const;

    std::string describe() const;

private:
    Kind kind_ = Kind::Residue;
    long param_ = 1;
    int colors_ = 1;
    Inner inner_ = Inner::Square;
    std::vector<int> table_;
    std::shared_ptr<const Coloring> outer_;
};

const char* to_string(Coloring::Inner inner);

/// Number of prime factors counted with multiplicity; n >= 1.
unsigned omega(const mpz_class& n);

struct SolutionInstance {
    std::vector<long long> assignment;
    std::vector<long long> values;  // distinct entries, ascending
    bool trivial = false;           // all entries equal
};

struct SolutionOptions {
    bool allow_repeats = true;    // keep assignments with repeated entries
    bool exclude_trivial = false;  // drop constant assignments
    bool parallel = true;
};

/// All assignments in [1, N]^n with P = 0, in lexicographic order.
std::vector<SolutionInstance> enumerate_solutions(const IntPolynomial& p, long long n_max,
                                                  const SolutionOptions& opts = {});

struct AvoidingResult {
    std::optional<std::vector<int>> coloring;  // colours of 1..N when found
    unsigned long long nodes = 0;              // search nodes explored
    std::size_t hyperedges = 0;
};

/// Exhaustive backtracking for a k-colouring of [1, N] with no monochromatic
/// solution set. Colours are assigned to 1, 2, ... in order with colour
/// symmetry broken (a new colour is only used after all smaller ones), so
/// the certificate returned is the lexicographically least canonical one.
AvoidingResult find_avoiding_coloring(const IntPolynomial& p, int k, long long n_max,
                                      const SolutionOptions& opts = {});

struct ColoringCheck {
    bool avoids = true;
    std::optional<SolutionInstance> violation;  // least monochromatic solution
};

ColoringCheck check_coloring_avoids(const IntPolynomial& p, const Coloring& c, long long n_max,
                                    const SolutionOptions& opts = {});

/// Shape A: {x, x + p(y), x + q(y), xy}; shape B: {x + p(y), x + q(y), xy + x + d y}.
/// Without q the element x + q(y) is left out.
struct ConfigFamily {
    enum class Shape { A, B };
    Shape shape = Shape::A;
    MonovariatePoly p;
    std::optional<MonovariatePoly> q;
    mpq_class d = 0;  // shape B only
};

struct ConfigWitness {
    mpz_class x, y;
    std::vector<mpz_class> elements;
    int color = 0;
};

/// Searches x, y in [min_value, bound] by increasing x + y, then x. Throws
/// std::invalid_argument if p or q does not vanish at 0. Shape B also needs
/// d y to be an integer.
std::optional<ConfigWitness> find_config_witness(const Coloring& c, const ConfigFamily& family, long bound,
                                                 long min_value = 2);

/// Elements of the configuration at (x, y), or nullopt when some element is
/// not a positive integer.
std::optional<std::vector<mpz_class>> config_elements(const ConfigFamily& family, const mpz_class& x,
                                                      const mpz_class& y);

struct ParametrizedFamily {
    enum class Kind { ExamplePR, Equation2 };
    Kind kind = Kind::ExamplePR;
    std::vector<long> a;  // ExamplePR: a_0..a_d, d >= 1
    long ea = 0, eb = 0, ec = 0;  // Equation2
};

struct ParametrizedResult {
    IntPolynomial polynomial;
    std::vector<SolutionInstance> solutions;
};

/// ExamplePR: P = x^d (x - y) + sum_i a_i x^(d-i) z^i with solutions
/// (r, r + sum_i a_i s^i, r s). Equation2: P = x^2 - y^2 + 4a x + 4b y + 4c z
/// with x = r + s, y = r - s, z = -(rs + (a+b) r + (a-b) s) / c when integral.
/// Only assignments with all entries >= 1 are returned.
ParametrizedResult parametrized_solutions(const ParametrizedFamily& family, long r_lo, long r_hi, long s_lo,
                                          long s_hi);

}  // namespace rado
