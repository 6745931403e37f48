#pragma once

#include "rado/functional.hpp"
#include "rado/polynomial.hpp"

#include <gmpxx.h>

#include <vector>

namespace rado {

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
    mpq_class lo;
    mpq_class hi;
};

/// sum_{i=0}^{m} base^{d_i} sum_{alpha in J_i} c_alpha w^{|alpha|}, taking the
/// coefficients c_alpha from p. Throws std::invalid_argument for base < 2.
MonovariatePoly weighted_polynomial(const IntPolynomial& p, const CandidateFunctional& c, const mpz_class& base);

/// Exact test for a real root in the closed interval (Sturm sequence over Q,
/// endpoints checked directly). The zero polynomial has a root everywhere.
bool has_real_root_in(const MonovariatePoly& q, const Interval& interval);

/// Number of distinct real roots in the half-open interval (lo, hi].
std::size_t sturm_count(const MonovariatePoly& q, const mpq_class& lo, const mpq_class& hi);

struct IntegerRoots {
    std::vector<mpz_class> roots;  // ascending, with multiplicity
    bool splits_linearly = false;
};

/// Integer roots with multiplicity. Throws std::invalid_argument for zero.
IntegerRoots integer_roots(const MonovariatePoly& q);

}  // namespace rado
