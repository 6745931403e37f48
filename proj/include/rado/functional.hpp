#pragma once

#include "rado/polynomial.hpp"

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rado {

/// One block of an ordered partition of Supp(P), kept in grlex-descending order.
using Cell = std::vector<MultiIndex>;

/// Ordered partition (J_0, ..., J_l) of Supp(P) in increasing order of the
/// functional phi_t(alpha) = sum t_i alpha_i, with a strictly positive
/// integral witness t.
struct OrderedPartition {
    std::vector<Cell> cells;
    std::vector<mpq_class> witness;

    bool operator==(const OrderedPartition&) const = default;
};

enum class FunctionalKind { Lower, Upper };

const char* to_string(FunctionalKind kind);

/// Linear form  a_coef * a + d_coef * d + constant  in the Brauer parameters.
struct BrauerForm {
    long a = 0;
    long d = 0;
    long constant = 0;

    BrauerForm operator-(const BrauerForm& o) const { return {a - o.a, d - o.d, constant - o.constant}; }
    bool operator==(const BrauerForm&) const = default;
};

struct BrauerSlot {
    enum class Kind { D, A };
    Kind kind = Kind::D;
    unsigned j = 0;  // only meaningful for Kind::A

    bool operator==(const BrauerSlot&) const = default;
};

struct SymbolicCheck {
    std::string fact;  // e.g. "offset J1-J0 = 1", "order J2 > J1", "gap J2 >> J1"
    BrauerForm difference;
};

/// Template t_i = d + e (kind D) or t_i = a + j_i d + e (kind A). Brauer's
/// theorem makes {d, a, a + d, ..., a + j_max d} monochromatic with a and d
/// arbitrarily large, so every functional built from the template is
/// monochromatic after recolouring by x -> c(x + e).
struct BrauerCertificate {
    long shift = 0;
    std::vector<BrauerSlot> slots;
    std::vector<SymbolicCheck> checks;
};

enum class CandidateStatus { Candidate, FilteredOut, Certified };

/// Candidate upper or lower Rado functional. `cells` are listed in the
/// kind's orientation: J_0 is the lowest cell for the lower kind and the
/// highest cell for the upper kind. The finite-offset group is J_0..J_m.
///  - lower: offsets = (d_1, ..., d_m), phi(J_i) - phi(J_0) = d_i
///  - upper: offsets = (d_0, ..., d_{m-1}), phi(J_i) - phi(J_m) = d_i
struct CandidateFunctional {
    FunctionalKind kind = FunctionalKind::Lower;
    std::vector<Cell> cells;
    std::size_t order = 0;
    std::vector<long> offsets;
    std::vector<mpq_class> witness;
    CandidateStatus status = CandidateStatus::Candidate;
    std::string filter_reason;
    std::optional<BrauerCertificate> certificate;

    /// Offset of cell i (0 <= i <= m) in the weighted polynomial, i.e. d_i with
    /// d_0 = 0 (lower) or d_m = 0 (upper).
    long offset_of(std::size_t i) const;
};

struct FilterResult {
    bool pass = true;
    std::vector<int> rules;  // every violated rule (1..4), ascending
    std::string reason;      // explanation of the first violation

    bool failed(int rule) const;
};

/// Every ordered partition of Supp(P) realised by some strictly positive t,
/// sorted deterministically. Results are cached per support.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<OrderedPartition> achievable_orderings(const IntPolynomial& p);
std::shared_ptr<const std::vector<OrderedPartition>> cached_orderings(const Support& s);

/// Candidates passing offset feasibility and (for m < l) unbounded-gap
/// feasibility, with offsets in [1, d_max]. Over-approximates the genuine
/// Rado functionals of the given kind.
std::vector<CandidateFunctional> candidate_functionals(const IntPolynomial& p, FunctionalKind kind, long d_max);

/// Candidates whose structure passes the necessary filter, with offsets in
/// [1, d_max]. The filter is applied before the offset systems are solved.
std::vector<CandidateFunctional> surviving_candidates(const IntPolynomial& p, FunctionalKind kind, long d_max);

/// Necessary conditions for a genuine Rado functional:
///  (i) every cell is affinely convex inside the support;
///  (ii) every p_{alpha-beta} inside a cell is a partition regular linear form;
///  (iii) no alpha in J_i, beta in J_j of the finite group with l(alpha+beta) <= 2
///        unless i = j and |alpha| = |beta|;
///  (iv) no two finite-group cells joined by a one- or two-variable form
///       lambda (z_a - z_b) (or lambda z_a) carrying a nonzero fixed offset.
FilterResult necessary_filter(const CandidateFunctional& c);

/// Same test from the cells alone, `cells` in kind orientation with the
/// finite group J_0..J_m. Offsets never change the outcome.
FilterResult structural_filter(const std::vector<Cell>& cells, std::size_t order);

/// Single-equation Rado test: some nonempty subset of the nonzero
/// coefficients sums to zero.
bool linear_form_partition_regular(const std::vector<long>& coeffs);

/// Whether some candidate with this partition and order, and any offsets,
/// could pass: the structural filter holds and the gap after J_m can grow
/// without bound while J_0..J_m stay at fixed distances.
bool structure_viable(const std::vector<Cell>& cells, std::size_t order, FunctionalKind kind);

/// Searches template assignments with j <= j_max and shift e in [e_lo, e_hi].
std::optional<BrauerCertificate> brauer_certificate(const CandidateFunctional& c, unsigned j_max, long e_lo,
                                                    long e_hi);

struct MinimalCell {
    Cell cell;
    bool homogeneous = false;
    mpz_class coefficient_sum = 0;
};

/// First cells J_0 of all lower candidates surviving the necessary filter.
std::vector<MinimalCell> minimal_cells(const IntPolynomial& p, long d_max);

/// Positive multiple of t with coprime integer entries (t must be nonzero).
std::vector<mpq_class> scale_to_integers(std::vector<mpq_class> t);

/// phi_t(alpha)
mpq_class apply_functional(const std::vector<mpq_class>& t, const MultiIndex& alpha);

/// The ordered partition of `s` determined by t.
std::vector<Cell> partition_determined_by(const Support& s, const std::vector<mpq_class>& t);

}  // namespace rado
