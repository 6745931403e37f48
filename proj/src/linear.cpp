#include "rado/linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rado {
namespace {

struct Row {
    std::vector<mpq_class> c;
    bool strict = false;  // c.x < rhs when strict, c.x <= rhs otherwise
    mpq_class rhs;
};

struct Substitution {
    std::size_t var;
    std::vector<mpq_class> row;  // full equality row, row[var] != 0
    mpq_class rhs;
};

struct Stage {
    std::size_t var;
    std::vector<Row> rows;  // rows mentioning var at elimination time
};

bool all_zero(const std::vector<mpq_class>& v) {
    return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

// Scales so the first nonzero coefficient has magnitude one.
void normalize(Row& r) {
    for (const auto& x : r.c) {
        if (x != 0) {
            mpq_class s = abs(x);
            for (auto& y : r.c) y /= s;
            r.rhs /= s;
            return;
        }
    }
}

// Keeps the tightest row per coefficient vector. Returns false on a
// contradiction among constant rows.
bool compact(std::vector<Row>& rows) {
    std::map<std::vector<mpq_class>, Row> best;
    for (auto& r : rows) {
        if (all_zero(r.c)) {
            if (r.strict ? !(0 < r.rhs) : !(0 <= r.rhs)) return false;
            continue;
        }
        normalize(r);
        auto it = best.find(r.c);
        if (it == best.end()) {
            best.emplace(r.c, std::move(r));
        } else if (r.rhs < it->second.rhs || (r.rhs == it->second.rhs && r.strict)) {
            it->second = std::move(r);
        }
    }
    rows.clear();
    rows.reserve(best.size());
    for (auto& [k, r] : best) rows.push_back(std::move(r));
    return true;
}

mpq_class dot_except(const std::vector<mpq_class>& c, const std::vector<mpq_class>& x, std::size_t skip) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i != skip && c[i] != 0) s += c[i] * x[i];
    return s;
}

mpq_class floor_q(const mpq_class& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return mpq_class(f);
}

mpq_class ceil_q(const mpq_class& q) {
    mpz_class f;
    mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return mpq_class(f);
}

// Picks a value inside the interval, preferring small integers.
mpq_class choose(const std::optional<mpq_class>& lo, bool lo_strict, const std::optional<mpq_class>& hi,
                 bool hi_strict) {
    if (!lo && !hi) return 0;
    if (lo && !hi) {
        if (*lo < 0 || (*lo == 0 && !lo_strict)) return 0;
        mpq_class z = ceil_q(*lo);
        if (lo_strict && z == *lo) z += 1;
        return z;
    }
    if (!lo && hi) {
        if (*hi > 0 || (*hi == 0 && !hi_strict)) return 0;
        mpq_class z = floor_q(*hi);
        if (hi_strict && z == *hi) z -= 1;
        return z;
    }
    mpq_class z = ceil_q(*lo);
    if (lo_strict && z == *lo) z += 1;
    if (z < *hi || (z == *hi && !hi_strict)) return z;
    if (*lo == *hi) return *lo;
    mpq_class mid = (*lo + *hi) / 2;
    return mid;
}

}  // namespace

void LinearSystem::add(std::vector<mpq_class> coeffs, Relation rel, mpq_class rhs) {
    if (coeffs.size() != vars_) throw std::invalid_argument("constraint has wrong number of coefficients");
    rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearSystem::add_less(const std::vector<mpq_class>& lhs, const std::vector<mpq_class>& rhs) {
    std::vector<mpq_class> c(vars_);
    for (std::size_t i = 0; i < vars_; ++i) c[i] = lhs[i] - rhs[i];
    add(std::move(c), Relation::Less, 0);
}

void LinearSystem::add_equal(const std::vector<mpq_class>& lhs, const std::vector<mpq_class>& rhs,
                             const mpq_class& offset) {
    std::vector<mpq_class> c(vars_);
    for (std::size_t i = 0; i < vars_; ++i) c[i] = lhs[i] - rhs[i];
    add(std::move(c), Relation::Equal, offset);
}

std::optional<std::vector<mpq_class>> LinearSystem::find_point() const {
    const std::size_t n = vars_;
    std::vector<LinearConstraint> eqs;
    std::vector<Row> ineqs;
    for (const auto& r : rows_) {
        if (r.rel == Relation::Equal)
            eqs.push_back(r);
        else
            ineqs.push_back({r.coeffs, r.rel == Relation::Less, r.rhs});
    }

    // Gaussian substitution of equalities.
    std::vector<Substitution> subs;
    std::vector<bool> eliminated(n, false);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        auto& row = eqs[e];
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i)
            if (row.coeffs[i] != 0) {
                k = i;
                break;
            }
        if (k == n) {
            if (row.rhs != 0) return std::nullopt;
            continue;
        }
        const mpq_class pivot = row.coeffs[k];
        auto eliminate = [&](std::vector<mpq_class>& c, mpq_class& rhs) {
            if (c[k] == 0) return;
            mpq_class f = c[k] / pivot;
            for (std::size_t i = 0; i < n; ++i) c[i] -= f * row.coeffs[i];
            rhs -= f * row.rhs;
        };
        for (std::size_t o = e + 1; o < eqs.size(); ++o) eliminate(eqs[o].coeffs, eqs[o].rhs);
        for (auto& r : ineqs) eliminate(r.c, r.rhs);
        subs.push_back({k, row.coeffs, row.rhs});
        eliminated[k] = true;
    }

    if (!compact(ineqs)) return std::nullopt;

    // Fourier-Motzkin on the remaining variables.
    std::vector<Stage> stages;
    std::vector<std::size_t> remaining;
    for (std::size_t i = 0; i < n; ++i)
        if (!eliminated[i]) remaining.push_back(i);

    while (!remaining.empty()) {
        std::size_t best_pos = 0;
        long best_cost = -1;
        for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
            const std::size_t v = remaining[idx];
            long pos = 0, neg = 0;
            for (const auto& r : ineqs) {
                if (r.c[v] > 0) ++pos;
                if (r.c[v] < 0) ++neg;
            }
            long cost = pos * neg - pos - neg;
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost < 0 ? 0 : cost;
                best_pos = idx;
                if (cost <= 0) break;
            }
        }
        const std::size_t k = remaining[best_pos];
        remaining.erase(remaining.begin() + static_cast<long>(best_pos));

        Stage stage{k, {}};
        std::vector<Row> upper, lower, rest;
        for (auto& r : ineqs) {
            if (r.c[k] > 0)
                upper.push_back(r);
            else if (r.c[k] < 0)
                lower.push_back(r);
            else
                rest.push_back(std::move(r));
        }
        stage.rows.insert(stage.rows.end(), upper.begin(), upper.end());
        stage.rows.insert(stage.rows.end(), lower.begin(), lower.end());
        for (const auto& u : upper) {
            for (const auto& l : lower) {
                const mpq_class fu = 1 / u.c[k];
                const mpq_class fl = -1 / l.c[k];
                Row combined;
                combined.c.resize(n);
                for (std::size_t i = 0; i < n; ++i) combined.c[i] = u.c[i] * fu + l.c[i] * fl;
                combined.c[k] = 0;
                combined.rhs = u.rhs * fu + l.rhs * fl;
                combined.strict = u.strict || l.strict;
                rest.push_back(std::move(combined));
            }
        }
        ineqs = std::move(rest);
        if (!compact(ineqs)) return std::nullopt;
        stages.push_back(std::move(stage));
    }

    // Back substitution.
    std::vector<mpq_class> x(n, 0);
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const std::size_t k = it->var;
        std::optional<mpq_class> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& r : it->rows) {
            mpq_class bound = (r.rhs - dot_except(r.c, x, k)) / r.c[k];
            if (r.c[k] > 0) {
                if (!hi || bound < *hi || (bound == *hi && r.strict)) {
                    hi = bound;
                    hi_strict = r.strict;
                }
            } else {
                if (!lo || bound > *lo || (bound == *lo && r.strict)) {
                    lo = bound;
                    lo_strict = r.strict;
                }
            }
        }
        x[k] = choose(lo, lo_strict, hi, hi_strict);
    }
    for (auto it = subs.rbegin(); it != subs.rend(); ++it)
        x[it->var] = (it->rhs - dot_except(it->row, x, it->var)) / it->row[it->var];
    return x;
}

bool LinearSystem::unbounded_above(const std::vector<mpq_class>& objective) const {
    return feasible() && recession_increases(objective);
}

bool LinearSystem::recession_increases(const std::vector<mpq_class>& objective) const {
    LinearSystem rec(vars_);
    for (const auto& r : rows_) rec.add(r.coeffs, r.rel == Relation::Equal ? Relation::Equal : Relation::LessEq, 0);
    std::vector<mpq_class> neg(objective.size());
    for (std::size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
    rec.add(std::move(neg), Relation::LessEq, -1);
    return rec.feasible();
}

namespace {

std::size_t rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t r = 0;
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

bool in_affine_hull(const std::vector<std::vector<mpq_class>>& points, const std::vector<mpq_class>& v) {
    if (points.empty()) return false;
    const auto& base = points.front();
    std::vector<std::vector<mpq_class>> m;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<mpq_class> d(base.size());
        for (std::size_t j = 0; j < base.size(); ++j) d[j] = points[i][j] - base[j];
        m.push_back(std::move(d));
    }
    const std::size_t r0 = rank(m);
    std::vector<mpq_class> d(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) d[j] = v[j] - base[j];
    m.push_back(std::move(d));
    return rank(m) == r0;
}

}  // namespace rado
