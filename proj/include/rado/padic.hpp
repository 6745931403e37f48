#pragma once

#include "rado/polynomial.hpp"

#include <gmpxx.h>

#include <optional>

namespace rado {

/// Element of Z_p known modulo p^k.
struct PadicApprox {
    long p = 2;
    unsigned k = 1;
    mpz_class residue = 0;  // in [0, p^k)

    bool invertible() const;
    bool operator==(const PadicApprox&) const = default;
};

struct UnitRootResult {
    bool exists = false;
    std::optional<PadicApprox> witness;
    /// Branching depth K = 2 v_p(Res(Q0, Q0')) + 1 for the squarefree part Q0
    /// (0 when Q is identically zero or constant).
    unsigned depth_bound = 0;

    bool operator==(const UnitRootResult&) const = default;
};

bool is_prime(long p);

/// v_p(x); x must be nonzero.
unsigned long padic_valuation(const mpz_class& x, long p);

/// Resultant of two integer polynomials (Sylvester determinant).
mpz_class resultant(const MonovariatePoly& a, const MonovariatePoly& b);

/// Q / gcd(Q, Q') made primitive with positive leading coefficient.
MonovariatePoly squarefree_part(const MonovariatePoly& q);

/// Decides whether Q has a root in Z_p that is not divisible by p.
/// Throws std::invalid_argument when p is not prime.
UnitRootResult unit_root_exists(const MonovariatePoly& q, long p);

/// Newton iteration from r0 until Q(r) = 0 mod p^k. Throws
/// std::invalid_argument unless v_p(Q(r0)) > 2 v_p(Q'(r0)).
PadicApprox hensel_lift(const MonovariatePoly& q, const PadicApprox& r0, unsigned k);

}  // namespace rado
