#pragma once

#include "rado/polynomial.hpp"
#include "rado/text.hpp"

#include <cstdlib>
#include <random>
#include <string>

namespace rado::test {

/// Seed for randomized tests; RADO_TEST_SEED overrides the fixed default.
inline unsigned seed() {
    if (const char* s = std::getenv("RADO_TEST_SEED")) return static_cast<unsigned>(std::strtoul(s, nullptr, 10));
    return 20240611u;
}

inline IntPolynomial P(const std::string& text, std::size_t arity = 0) {
    return parse_polynomial(text, arity).polynomial;
}

/// Random polynomial with up to `terms` terms, total degree <= max_degree and
/// coefficients in [-coef, coef].
inline IntPolynomial random_polynomial(std::mt19937& rng, std::size_t arity, unsigned max_degree, int coef,
                                       int terms) {
    std::uniform_int_distribution<int> c(-coef, coef);
    std::uniform_int_distribution<unsigned> e(0, max_degree);
    IntPolynomial p(arity);
    for (int t = 0; t < terms; ++t) {
        MultiIndex a(arity);
        unsigned budget = e(rng);
        for (std::size_t i = 0; i < arity && budget > 0; ++i) {
            std::uniform_int_distribution<unsigned> take(0, budget);
            a[i] = take(rng);
            budget -= a[i];
        }
        p.add_term(a, c(rng));
    }
    return p;
}

}  // namespace rado::test
