#pragma once

// Hot loops with a serial reference implementation and an OpenMP variant.
// Both variants return identical, deterministically ordered results.

#include "rado/functional.hpp"
#include "rado/polynomial.hpp"

#include <optional>
#include <vector>

namespace rado::kernels {

/// All ordered partitions of `elems` realised by a strictly positive
/// functional, sorted by cells. `elems` must be pairwise distinct.
std::vector<OrderedPartition> orderings_serial(const std::vector<MultiIndex>& elems);
std::vector<OrderedPartition> orderings_parallel(const std::vector<MultiIndex>& elems);

using Tuple = std::vector<long long>;

/// Every tuple in [1, N]^n with P = 0, in lexicographic order.
std::vector<Tuple> solutions_serial(const IntPolynomial& p, long long n_max);
std::vector<Tuple> solutions_parallel(const IntPolynomial& p, long long n_max);

/// Lexicographically least solution in [1, N]^n whose entries all share a
/// colour; `colors[v]` is the colour of v for 1 <= v <= N.
std::optional<Tuple> first_monochromatic_serial(const IntPolynomial& p, long long n_max,
                                                const std::vector<int>& colors, bool exclude_trivial);
std::optional<Tuple> first_monochromatic_parallel(const IntPolynomial& p, long long n_max,
                                                  const std::vector<int>& colors, bool exclude_trivial);

}  // namespace rado::kernels
