#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace rado {

enum class Relation { LessEq, Less, Equal };

/// coeffs . x  (<= | < | =)  rhs
struct LinearConstraint {
    std::vector<mpq_class> coeffs;
    Relation rel = Relation::LessEq;
    mpq_class rhs = 0;
};

/// A conjunction of linear constraints over Q^n, decided by Fourier-Motzkin
/// elimination. Strict inequalities are tracked exactly.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t vars) : vars_(vars) {}

    std::size_t variables() const { return vars_; }
    const std::vector<LinearConstraint>& constraints() const { return rows_; }

    void add(std::vector<mpq_class> coeffs, Relation rel, mpq_class rhs);
    /// lhs . x  <  rhs . x
    void add_less(const std::vector<mpq_class>& lhs, const std::vector<mpq_class>& rhs);
    /// lhs . x  =  rhs . x + offset
    void add_equal(const std::vector<mpq_class>& lhs, const std::vector<mpq_class>& rhs,
                   const mpq_class& offset = 0);

    /// A point satisfying every constraint, or nullopt when infeasible.
    std::optional<std::vector<mpq_class>> find_point() const;
    bool feasible() const { return find_point().has_value(); }

    /// True iff the system is feasible and `objective . x` is unbounded above
    /// over it (a recession direction with positive objective exists).
    bool unbounded_above(const std::vector<mpq_class>& objective) const;

    /// Whether the recession cone of the closure contains a direction r with
    /// objective . r > 0. Does not check feasibility.
    bool recession_increases(const std::vector<mpq_class>& objective) const;

private:
    std::size_t vars_;
    std::vector<LinearConstraint> rows_;
};

/// Whether `v` lies in the affine hull of `points` (exact rational rank test).
bool in_affine_hull(const std::vector<std::vector<mpq_class>>& points, const std::vector<mpq_class>& v);

}  // namespace rado
