#include "rado/functional.hpp"

#include "rado/kernels.hpp"
#include "rado/linear.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rado {
namespace {

std::vector<mpq_class> as_row(const MultiIndex& a) {
    std::vector<mpq_class> v(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) v[i] = a[i];
    return v;
}

std::vector<mpq_class> difference(const MultiIndex& hi, const MultiIndex& lo) {
    std::vector<mpq_class> v(hi.arity());
    for (std::size_t i = 0; i < hi.arity(); ++i) v[i] = mpq_class(hi[i]) - mpq_class(lo[i]);
    return v;
}

std::vector<long> signed_difference(const MultiIndex& a, const MultiIndex& b) {
    std::vector<long> v(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) v[i] = static_cast<long>(a[i]) - static_cast<long>(b[i]);
    return v;
}

std::string cell_name(std::size_t i) { return "J" + std::to_string(i); }

// Adds t_i > 0 and equal values inside each cell.
void add_base(LinearSystem& sys, const std::vector<Cell>& cells, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<mpq_class> c(n, 0);
        c[i] = -1;
        sys.add(std::move(c), Relation::Less, 0);
    }
    for (const auto& cell : cells)
        for (std::size_t k = 1; k < cell.size(); ++k) sys.add_equal(as_row(cell[k]), as_row(cell[0]));
}

// System for a candidate in kind orientation with explicit offsets, plus the
// gap objective (empty when m == l).
struct CandidateSystem {
    LinearSystem sys;
    std::vector<mpq_class> gap;
};

CandidateSystem build_candidate_system(const std::vector<Cell>& cells, std::size_t m, FunctionalKind kind,
                                       const std::vector<long>& offsets) {
    const std::size_t n = cells.front().front().arity();
    CandidateSystem out{LinearSystem(n), {}};
    add_base(out.sys, cells, n);
    const std::size_t ref = kind == FunctionalKind::Lower ? 0 : m;
    for (std::size_t i = 0; i <= m; ++i) {
        if (i == ref) continue;
        const long d = kind == FunctionalKind::Lower ? offsets[i - 1] : offsets[i];
        out.sys.add_equal(as_row(cells[i][0]), as_row(cells[ref][0]), d);
    }
    // Strict order between consecutive cells; "higher" depends on orientation.
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        const auto& lo = kind == FunctionalKind::Lower ? cells[i][0] : cells[i + 1][0];
        const auto& hi = kind == FunctionalKind::Lower ? cells[i + 1][0] : cells[i][0];
        out.sys.add_less(as_row(lo), as_row(hi));
    }
    if (m + 1 < cells.size()) {
        const auto& lo = kind == FunctionalKind::Lower ? cells[m][0] : cells[m + 1][0];
        const auto& hi = kind == FunctionalKind::Lower ? cells[m + 1][0] : cells[m][0];
        out.gap = difference(hi, lo);
    }
    return out;
}

bool gap_unbounded(const std::vector<Cell>& cells, std::size_t m, FunctionalKind kind) {
    if (m + 1 >= cells.size()) return true;
    std::vector<long> dummy(m, 0);
    for (std::size_t i = 0; i < m; ++i) dummy[i] = static_cast<long>(kind == FunctionalKind::Lower ? i + 1 : m - i);
    auto cs = build_candidate_system(cells, m, kind, dummy);
    return cs.sys.recession_increases(cs.gap);
}

// All m-subsets of [1, d_max], ascending inside each subset.
void combinations(long d_max, std::size_t m, std::vector<std::vector<long>>& out) {
    std::vector<long> cur;
    auto rec = [&](auto&& self, long next) -> void {
        if (cur.size() == m) {
            out.push_back(cur);
            return;
        }
        for (long v = next; v <= d_max; ++v) {
            if (static_cast<long>(m - cur.size()) > d_max - v + 1) break;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

std::vector<Cell> orient(const std::vector<Cell>& ascending, FunctionalKind kind) {
    if (kind == FunctionalKind::Lower) return ascending;
    return {ascending.rbegin(), ascending.rend()};
}

std::vector<CandidateFunctional> enumerate(const IntPolynomial& p, FunctionalKind kind, long d_max,
                                           bool prefilter) {
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no support");
    const auto orderings = cached_orderings(support(p));
    std::vector<CandidateFunctional> out;
    for (const auto& part : *orderings) {
        const auto cells = orient(part.cells, kind);
        const std::size_t l = cells.size() - 1;
        for (std::size_t m = 0; m <= l; ++m) {
            FilterResult filter;
            if (prefilter) {
                filter = structural_filter(cells, m);
                if (!filter.pass) continue;
            }
            if (!gap_unbounded(cells, m, kind)) continue;
            std::vector<std::vector<long>> combos;
            combinations(d_max, m, combos);
            for (auto& offs : combos) {
                if (kind == FunctionalKind::Upper) std::reverse(offs.begin(), offs.end());
                auto cs = build_candidate_system(cells, m, kind, offs);
                auto point = cs.sys.find_point();
                if (!point) continue;
                CandidateFunctional c;
                c.kind = kind;
                c.cells = cells;
                c.order = m;
                c.offsets = offs;
                c.witness = std::move(*point);
                out.push_back(std::move(c));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CandidateFunctional& a, const CandidateFunctional& b) {
        if (a.cells != b.cells) return a.cells < b.cells;
        if (a.order != b.order) return a.order < b.order;
        return a.offsets < b.offsets;
    });
    return out;
}

struct OrderingCache {
    std::mutex mu;
    std::map<std::vector<MultiIndex>, std::shared_ptr<const std::vector<OrderedPartition>>> entries;
};

OrderingCache& ordering_cache() {
    static OrderingCache cache;
    return cache;
}

struct FirstCellCache {
    std::mutex mu;
    std::map<std::vector<MultiIndex>, std::shared_ptr<const std::vector<Cell>>> entries;
};

FirstCellCache& first_cell_cache() {
    static FirstCellCache cache;
    return cache;
}

// Brauer template search ----------------------------------------------------

enum class CheckKind { Equal, Offset, Order, Gap };

struct TemplateCheck {
    CheckKind kind;
    MultiIndex hi, lo;
    long value = 0;
    long last_var = -1;  // largest variable either index depends on
    std::string fact;
};

long last_variable(const MultiIndex& a, const MultiIndex& b) {
    long v = -1;
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a[i] != 0 || b[i] != 0) v = static_cast<long>(i);
    return v;
}

BrauerForm slot_form(const BrauerSlot& s, long e) {
    if (s.kind == BrauerSlot::Kind::D) return {0, 1, e};
    return {1, static_cast<long>(s.j), e};
}

BrauerForm form_of(const MultiIndex& alpha, const std::vector<BrauerSlot>& slots, long e) {
    BrauerForm f;
    for (std::size_t i = 0; i < alpha.arity(); ++i) {
        if (alpha[i] == 0) continue;
        const long k = alpha[i];
        const BrauerForm s = slot_form(slots[i], e);
        f.a += k * s.a;
        f.d += k * s.d;
        f.constant += k * s.constant;
    }
    return f;
}

bool satisfied(const TemplateCheck& c, const BrauerForm& diff) {
    switch (c.kind) {
    case CheckKind::Equal: return diff == BrauerForm{};
    case CheckKind::Offset: return diff.a == 0 && diff.d == 0 && diff.constant == c.value;
    case CheckKind::Order:
        return diff.a >= 0 && diff.d >= 0 && (diff.a > 0 || diff.d > 0 || diff.constant > 0);
    case CheckKind::Gap: return diff.a >= 0 && diff.d >= 0 && (diff.a > 0 || diff.d > 0);
    }
    return false;
}

std::vector<TemplateCheck> template_checks(const CandidateFunctional& c) {
    std::vector<TemplateCheck> out;
    const auto& cells = c.cells;
    const std::size_t m = c.order;
    const bool lower = c.kind == FunctionalKind::Lower;
    auto push = [&](CheckKind kind, const MultiIndex& hi, const MultiIndex& lo, long value, std::string fact) {
        out.push_back({kind, hi, lo, value, last_variable(hi, lo), std::move(fact)});
    };
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t k = 1; k < cells[i].size(); ++k)
            push(CheckKind::Equal, cells[i][k], cells[i][0], 0,
                 "equal " + to_string(cells[i][k]) + " ~ " + to_string(cells[i][0]) + " in " + cell_name(i));
    const std::size_t ref = lower ? 0 : m;
    for (std::size_t i = 0; i <= m && i < cells.size(); ++i) {
        if (i == ref) continue;
        const long d = c.offset_of(i);
        push(CheckKind::Offset, cells[i][0], cells[ref][0], d,
             "offset " + cell_name(i) + "-" + cell_name(ref) + " = " + std::to_string(d));
    }
    for (std::size_t i = m; i + 1 < cells.size(); ++i) {
        const auto& hi = lower ? cells[i + 1][0] : cells[i][0];
        const auto& lo = lower ? cells[i][0] : cells[i + 1][0];
        const std::string hn = cell_name(lower ? i + 1 : i);
        const std::string ln = cell_name(lower ? i : i + 1);
        if (i == m)
            push(CheckKind::Gap, hi, lo, 0, "gap " + hn + " >> " + ln);
        else
            push(CheckKind::Order, hi, lo, 0, "order " + hn + " > " + ln);
    }
    return out;
}

std::vector<long> shift_order(long lo, long hi) {
    std::vector<long> es;
    for (long e = lo; e <= hi; ++e) es.push_back(e);
    std::sort(es.begin(), es.end(), [](long a, long b) {
        const long aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
        return aa != bb ? aa < bb : a > b;
    });
    return es;
}

}  // namespace

const char* to_string(FunctionalKind kind) { return kind == FunctionalKind::Lower ? "lower" : "upper"; }

long CandidateFunctional::offset_of(std::size_t i) const {
    if (i > order) throw std::out_of_range("cell outside the finite-offset group");
    if (kind == FunctionalKind::Lower) return i == 0 ? 0 : offsets.at(i - 1);
    return i == order ? 0 : offsets.at(i);
}

bool FilterResult::failed(int rule) const { return std::find(rules.begin(), rules.end(), rule) != rules.end(); }

std::vector<mpq_class> scale_to_integers(std::vector<mpq_class> t) {
    mpz_class l = 1;
    for (auto& x : t) {
        x.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    mpz_class g = 0;
    for (auto& x : t) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("cannot scale the zero vector");
    for (auto& x : t) x /= g;
    return t;
}

mpq_class apply_functional(const std::vector<mpq_class>& t, const MultiIndex& alpha) {
    if (t.size() != alpha.arity()) throw std::invalid_argument("functional arity mismatch");
    mpq_class s = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (alpha[i] != 0) s += t[i] * alpha[i];
    return s;
}

std::vector<Cell> partition_determined_by(const Support& s, const std::vector<mpq_class>& t) {
    std::map<mpq_class, Cell> groups;
    for (const auto& a : s) groups[apply_functional(t, a)].push_back(a);
    std::vector<Cell> cells;
    for (auto& [v, cell] : groups) cells.push_back(std::move(cell));
    return cells;
}

std::shared_ptr<const std::vector<OrderedPartition>> cached_orderings(const Support& s) {
    if (s.empty()) throw std::invalid_argument("zero polynomial has no support");
    std::vector<MultiIndex> key(s.begin(), s.end());
    auto& cache = ordering_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end()) return it->second;
    }
    auto value = std::make_shared<const std::vector<OrderedPartition>>(kernels::orderings_parallel(key));
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.entries.emplace(std::move(key), value).first->second;
}

std::vector<OrderedPartition> achievable_orderings(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no support");
    return *cached_orderings(support(p));
}

std::vector<CandidateFunctional> candidate_functionals(const IntPolynomial& p, FunctionalKind kind, long d_max) {
    return enumerate(p, kind, d_max, false);
}

std::vector<CandidateFunctional> surviving_candidates(const IntPolynomial& p, FunctionalKind kind, long d_max) {
    return enumerate(p, kind, d_max, true);
}

bool linear_form_partition_regular(const std::vector<long>& coeffs) {
    std::vector<long> nz;
    for (long c : coeffs)
        if (c != 0) nz.push_back(c);
    if (nz.empty()) return true;
    if (nz.size() > 24) throw std::invalid_argument("linear form too long for the subset test");
    const std::size_t k = nz.size();
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
        long s = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1UL << i)) s += nz[i];
        if (s == 0) return true;
    }
    return false;
}

FilterResult structural_filter(const std::vector<Cell>& cells, std::size_t order) {
    FilterResult r;
    auto fail = [&](int rule, const std::string& why) {
        if (r.pass) r.reason = why;
        r.pass = false;
        if (!r.failed(rule)) r.rules.push_back(rule);
    };
    std::vector<MultiIndex> all;
    for (const auto& cell : cells) all.insert(all.end(), cell.begin(), cell.end());

    // (i) convexity
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() < 2) continue;
        std::vector<std::vector<mpq_class>> pts;
        for (const auto& a : cells[i]) pts.push_back(as_row(a));
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j == i) continue;
            for (const auto& g : cells[j])
                if (in_affine_hull(pts, as_row(g)))
                    fail(1, cell_name(i) + " is not convex: its affine hull contains " + to_string(g));
        }
    }
    // (ii) in-cell difference forms are partition regular
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t a = 0; a < cells[i].size(); ++a)
            for (std::size_t b = a + 1; b < cells[i].size(); ++b)
                if (!linear_form_partition_regular(signed_difference(cells[i][a], cells[i][b])))
                    fail(2, "difference form of " + to_string(cells[i][a]) + " and " + to_string(cells[i][b]) +
                                " in " + cell_name(i) + " is not partition regular");
    // (iii) short pairs in the finite group
    const std::size_t top = std::min(order, cells.size() - 1);
    for (std::size_t i = 0; i <= top; ++i)
        for (std::size_t j = i; j <= top; ++j)
            for (const auto& a : cells[i])
                for (const auto& b : cells[j]) {
                    if (i == j && !(a < b)) continue;
                    if ((a + b).length() > 2) continue;
                    if (i != j || a.degree() != b.degree())
                        fail(3, to_string(a) + " in " + cell_name(i) + " and " + to_string(b) + " in " +
                                    cell_name(j) + " have joint length <= 2");
                }
    // (iv) two finite-group cells linked by lambda z_a or lambda (z_a - z_b)
    for (std::size_t i = 0; i <= top; ++i)
        for (std::size_t j = i + 1; j <= top; ++j)
            for (const auto& a : cells[i])
                for (const auto& b : cells[j]) {
                    std::vector<long> nz;
                    for (long v : signed_difference(a, b))
                        if (v != 0) nz.push_back(v);
                    if (nz.size() == 1 || (nz.size() == 2 && nz[0] == -nz[1]))
                        fail(4, cell_name(i) + " and " + cell_name(j) + " are linked by the form of " +
                                    to_string(a) + " - " + to_string(b) + " with a nonzero offset");
                }
    std::sort(r.rules.begin(), r.rules.end());
    return r;
}

FilterResult necessary_filter(const CandidateFunctional& c) { return structural_filter(c.cells, c.order); }

bool structure_viable(const std::vector<Cell>& cells, std::size_t order, FunctionalKind kind) {
    if (cells.empty() || order >= cells.size()) return false;
    if (!structural_filter(cells, order).pass) return false;
    return gap_unbounded(cells, order, kind);
}

std::optional<BrauerCertificate> brauer_certificate(const CandidateFunctional& c, unsigned j_max, long e_lo,
                                                    long e_hi) {
    if (c.cells.empty()) return std::nullopt;
    const std::size_t n = c.cells.front().front().arity();
    const auto checks = template_checks(c);

    std::vector<BrauerSlot> choices{{BrauerSlot::Kind::D, 0}};
    for (unsigned j = 0; j <= j_max; ++j) choices.push_back({BrauerSlot::Kind::A, j});

    for (long e : shift_order(e_lo, e_hi)) {
        std::vector<BrauerSlot> slots(n);
        auto ok_at = [&](long var) {
            for (const auto& chk : checks)
                if (chk.last_var == var &&
                    !satisfied(chk, form_of(chk.hi, slots, e) - form_of(chk.lo, slots, e)))
                    return false;
            return true;
        };
        if (!ok_at(-1)) continue;
        auto rec = [&](auto&& self, std::size_t v) -> bool {
            if (v == n) return true;
            for (const auto& s : choices) {
                slots[v] = s;
                if (ok_at(static_cast<long>(v)) && self(self, v + 1)) return true;
            }
            return false;
        };
        if (!rec(rec, 0)) continue;
        BrauerCertificate cert;
        cert.shift = e;
        cert.slots = slots;
        for (const auto& chk : checks)
            cert.checks.push_back({chk.fact, form_of(chk.hi, slots, e) - form_of(chk.lo, slots, e)});
        return cert;
    }
    return std::nullopt;
}

std::vector<MinimalCell> minimal_cells(const IntPolynomial& p, long d_max) {
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no support");
    // An order-0 lower candidate only needs an achievable partition, a
    // passing filter and an unbounded first gap; scaling any witness makes
    // that gap grow, so the first cells do not depend on d_max.
    const Support s = support(p);
    std::vector<MultiIndex> key(s.begin(), s.end());
    std::shared_ptr<const std::vector<Cell>> firsts;
    auto& cache = first_cell_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end()) firsts = it->second;
    }
    if (!firsts) {
        std::set<Cell> found;
        for (const auto& part : *cached_orderings(s))
            if (structural_filter(part.cells, 0).pass) found.insert(part.cells.front());
        firsts = std::make_shared<const std::vector<Cell>>(found.begin(), found.end());
        std::lock_guard<std::mutex> lock(cache.mu);
        cache.entries.emplace(std::move(key), firsts);
    }
    std::vector<MinimalCell> out;
    for (const auto& cell : *firsts) {
        MinimalCell mc;
        mc.cell = cell;
        mc.homogeneous = std::all_of(cell.begin(), cell.end(),
                                     [&](const MultiIndex& a) { return a.degree() == cell.front().degree(); });
        for (const auto& a : cell) mc.coefficient_sum += p.coefficient(a);
        out.push_back(std::move(mc));
    }
    return out;
}

}  // namespace rado
