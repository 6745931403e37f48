#include "rado/kernels.hpp"

#include "rado/linear.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <type_traits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rado::kernels {
namespace {

// Orderings ------------------------------------------------------------------

std::vector<mpq_class> as_row(const MultiIndex& a) {
    std::vector<mpq_class> v(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) v[i] = a[i];
    return v;
}

class OrderingSearch {
public:
    explicit OrderingSearch(const std::vector<MultiIndex>& elems) : elems_(elems) {
        if (elems.empty()) throw std::invalid_argument("empty support");
        if (elems.size() > 20) throw std::invalid_argument("support too large to enumerate orderings");
        arity_ = elems.front().arity();
        full_ = (1UL << elems.size()) - 1;
    }

    unsigned long full() const { return full_; }

    // Extends the prefix with `cell` and recurses; results go to `out`.
    void extend(std::vector<unsigned long>& prefix, unsigned long cell, std::vector<OrderedPartition>& out) const {
        unsigned long used = cell;
        for (unsigned long m : prefix) used |= m;
        auto point = feasible(prefix, cell, full_ & ~used);
        if (!point) return;
        prefix.push_back(cell);
        const unsigned long rest = full_ & ~used;
        if (rest == 0) {
            out.push_back(make(prefix, *point));
        } else {
            for (unsigned long sub = rest; sub; sub = (sub - 1) & rest) extend(prefix, sub, out);
        }
        prefix.pop_back();
    }

private:
    // Prefix cells strictly increasing, then every remaining element strictly
    // above the newest cell.
    std::optional<std::vector<mpq_class>> feasible(const std::vector<unsigned long>& prefix, unsigned long cell,
                                                   unsigned long rest) const {
        LinearSystem sys(arity_);
        for (std::size_t i = 0; i < arity_; ++i) {
            std::vector<mpq_class> c(arity_, 0);
            c[i] = -1;
            sys.add(std::move(c), Relation::Less, 0);
        }
        int prev = -1;
        auto add_cell = [&](unsigned long mask) {
            const int rep = lowest(mask);
            for (std::size_t k = 0; k < elems_.size(); ++k)
                if ((mask >> k & 1UL) && static_cast<int>(k) != rep) sys.add_equal(as_row(elems_[k]), as_row(elems_[rep]));
            if (prev >= 0) sys.add_less(as_row(elems_[prev]), as_row(elems_[rep]));
            prev = rep;
        };
        for (unsigned long m : prefix) add_cell(m);
        add_cell(cell);
        for (std::size_t k = 0; k < elems_.size(); ++k)
            if (rest >> k & 1UL) sys.add_less(as_row(elems_[prev]), as_row(elems_[k]));
        return sys.find_point();
    }

    OrderedPartition make(const std::vector<unsigned long>& masks, const std::vector<mpq_class>& point) const {
        OrderedPartition part;
        for (unsigned long m : masks) {
            Cell c;
            for (std::size_t k = 0; k < elems_.size(); ++k)
                if (m >> k & 1UL) c.push_back(elems_[k]);
            part.cells.push_back(std::move(c));
        }
        part.witness = scale_to_integers(point);
        return part;
    }

    static int lowest(unsigned long m) { return __builtin_ctzl(m); }

    const std::vector<MultiIndex>& elems_;
    std::size_t arity_ = 0;
    unsigned long full_ = 0;
};

void sort_partitions(std::vector<OrderedPartition>& v) {
    std::sort(v.begin(), v.end(),
              [](const OrderedPartition& a, const OrderedPartition& b) { return a.cells < b.cells; });
}

// Solutions ------------------------------------------------------------------

using i128 = __int128;

i128 abs_of(i128 v) { return v < 0 ? -v : v; }
mpz_class abs_of(const mpz_class& v) { return abs(v); }

template <class T>
T from_mpz(const mpz_class& z);

template <class T>
T lift(long long v) {
    if constexpr (std::is_same_v<T, mpz_class>)
        return mpz_class(static_cast<long>(v));
    else
        return static_cast<T>(v);
}

long long to_ll(i128 v) { return static_cast<long long>(v); }
long long to_ll(const mpz_class& v) { return v.get_si(); }

template <>
i128 from_mpz<i128>(const mpz_class& z) {
    // Callers guarantee |z| < 2^120.
    mpz_class a = abs(z);
    const mpz_class hi = a >> 64;
    const mpz_class lo = a - (hi << 64);
    i128 v = (static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui());
    return z < 0 ? -v : v;
}

template <>
mpz_class from_mpz<mpz_class>(const mpz_class& z) {
    return z;
}

template <class T>
struct Term {
    T coeff;
    std::vector<std::pair<std::size_t, std::uint32_t>> factors;  // prefix variables only
};

// P viewed as sum_{k, j} s^k L^j * (polynomial in the prefix variables), with
// s the solved variable and L the last outer variable.
template <class T>
struct Compiled {
    std::size_t n = 0;
    std::size_t solve = 0;
    std::vector<std::size_t> outer;  // outer variables in increasing order
    std::size_t deg_s = 0, deg_l = 0;
    std::vector<std::vector<std::vector<Term<T>>>> terms;  // [k][j]
};

std::size_t choose_solved(const IntPolynomial& p) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.arity(); ++i)
        if (p.degree_in(i) != 0 && (p.degree_in(best) == 0 || p.degree_in(i) < p.degree_in(best))) best = i;
    return best;
}

template <class T>
Compiled<T> compile(const IntPolynomial& p) {
    Compiled<T> c;
    c.n = p.arity();
    c.solve = choose_solved(p);
    for (std::size_t i = 0; i < c.n; ++i)
        if (i != c.solve) c.outer.push_back(i);
    c.deg_s = p.degree_in(c.solve);
    const bool has_l = !c.outer.empty();
    const std::size_t l = has_l ? c.outer.back() : 0;
    c.deg_l = has_l ? p.degree_in(l) : 0;
    c.terms.assign(c.deg_s + 1, std::vector<std::vector<Term<T>>>(c.deg_l + 1));
    for (const auto& [alpha, coeff] : p.terms()) {
        Term<T> t{from_mpz<T>(coeff), {}};
        for (std::size_t i = 0; i + 1 < c.outer.size(); ++i)
            if (alpha[c.outer[i]] != 0) t.factors.emplace_back(c.outer[i], alpha[c.outer[i]]);
        c.terms[alpha[c.solve]][has_l ? alpha[l] : 0].push_back(std::move(t));
    }
    return c;
}

bool fits_fast(const IntPolynomial& p, long long n_max) {
    mpz_class bound = 0;
    for (const auto& [alpha, coeff] : p.terms()) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(n_max), alpha.degree());
        bound += abs(coeff) * pw;
    }
    mpz_class limit = 1;
    limit <<= 120;
    return bound < limit;
}

template <class T>
T power(T base, std::uint32_t e) {
    T r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= base;
    return r;
}

// Calls emit(s) for every s in [1, N] with sum r[k] s^k = 0.
template <class T, class Emit>
void solve_residual(const std::vector<T>& r, long long n_max, Emit&& emit) {
    int top = -1, low = -1;
    for (std::size_t k = 0; k < r.size(); ++k)
        if (r[k] != 0) {
            if (low < 0) low = static_cast<int>(k);
            top = static_cast<int>(k);
        }
    if (top < 0) {
        for (long long s = 1; s <= n_max; ++s) emit(s);
        return;
    }
    if (top == 0 || low == top) return;  // nonzero constant, or only s = 0
    if (top == 1) {
        const T num = -r[0];
        if (num % r[1] != 0) return;
        const T s = num / r[1];
        if (s >= 1 && s <= lift<T>(n_max)) emit(to_ll(s));
        return;
    }
    // Roots divide r[low]; Cauchy bound caps the scan.
    T cap = 0;
    for (int k = 0; k < top; ++k) {
        const T q = abs_of(r[k]) / abs_of(r[top]);
        if (q > cap) cap = q;
    }
    cap += 2;
    const long long limit = cap < lift<T>(n_max) ? to_ll(cap) : n_max;
    const T& c = r[low];
    for (long long s = 1; s <= limit; ++s) {
        if (c % lift<T>(s) != 0) continue;
        T acc = 0;
        for (int k = top; k >= 0; --k) acc = acc * lift<T>(s) + r[k];
        if (acc == 0) emit(s);
    }
}

// Enumerates solutions whose first outer variable lies in [lo, hi].
template <class T, class Visit>
void scan(const Compiled<T>& c, long long n_max, long long lo, long long hi, Visit&& visit) {
    std::vector<long long> tuple(c.n, 1);
    const std::size_t outer_count = c.outer.size();
    std::vector<T> r(c.deg_s + 1);
    std::vector<std::vector<T>> layer(c.deg_s + 1, std::vector<T>(c.deg_l + 1));

    auto finish = [&]() {
        // Prefix fixed: collapse to polynomials in L, then sweep L.
        for (std::size_t k = 0; k <= c.deg_s; ++k)
            for (std::size_t j = 0; j <= c.deg_l; ++j) {
                T acc = 0;
                for (const auto& t : c.terms[k][j]) {
                    T v = t.coeff;
                    for (const auto& [var, e] : t.factors) v *= power<T>(lift<T>(tuple[var]), e);
                    acc += v;
                }
                layer[k][j] = acc;
            }
        auto solve_here = [&]() {
            solve_residual(r, n_max, [&](long long s) {
                tuple[c.solve] = s;
                visit(tuple);
            });
        };
        if (outer_count == 0) {
            for (std::size_t k = 0; k <= c.deg_s; ++k) r[k] = layer[k][0];
            solve_here();
            return;
        }
        const std::size_t lvar = c.outer.back();
        const long long l_lo = outer_count == 1 ? lo : 1;
        const long long l_hi = outer_count == 1 ? hi : n_max;
        for (long long L = l_lo; L <= l_hi; ++L) {
            tuple[lvar] = L;
            for (std::size_t k = 0; k <= c.deg_s; ++k) {
                T acc = 0;
                for (std::size_t j = c.deg_l + 1; j-- > 0;) acc = acc * lift<T>(L) + layer[k][j];
                r[k] = acc;
            }
            solve_here();
        }
    };

    if (outer_count <= 1) {
        finish();
        return;
    }
    // Odometer over outer[0 .. outer_count-2]; outer[0] restricted to [lo, hi].
    const std::size_t prefix = outer_count - 1;
    for (std::size_t i = 0; i < prefix; ++i) tuple[c.outer[i]] = i == 0 ? lo : 1;
    if (lo > hi) return;
    while (true) {
        finish();
        std::size_t i = prefix;
        while (i-- > 0) {
            const long long cap = i == 0 ? hi : n_max;
            if (tuple[c.outer[i]] < cap) {
                ++tuple[c.outer[i]];
                break;
            }
            tuple[c.outer[i]] = 1;
            if (i == 0) return;
        }
    }
}

long long first_range_hi(std::size_t outer_count, long long n_max) { return outer_count == 0 ? 1 : n_max; }

template <class T>
std::vector<Tuple> solutions_impl(const IntPolynomial& p, long long n_max, bool parallel) {
    const auto c = compile<T>(p);
    std::vector<Tuple> out;
    const long long hi = first_range_hi(c.outer.size(), n_max);
    if (!parallel || c.outer.empty()) {
        scan(c, n_max, 1, hi, [&](const Tuple& t) { out.push_back(t); });
    } else {
        std::vector<std::vector<Tuple>> parts(static_cast<std::size_t>(hi));
#pragma omp parallel for schedule(dynamic)
        for (long long v = 1; v <= hi; ++v)
            scan(c, n_max, v, v, [&](const Tuple& t) { parts[static_cast<std::size_t>(v - 1)].push_back(t); });
        for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool monochromatic(const Tuple& t, const std::vector<int>& colors, bool exclude_trivial) {
    const int c0 = colors[static_cast<std::size_t>(t[0])];
    bool constant = true;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (colors[static_cast<std::size_t>(t[i])] != c0) return false;
        if (t[i] != t[0]) constant = false;
    }
    return !(exclude_trivial && constant);
}

template <class T>
std::optional<Tuple> mono_impl(const IntPolynomial& p, long long n_max, const std::vector<int>& colors,
                               bool exclude_trivial, bool parallel) {
    const auto c = compile<T>(p);
    const long long hi = first_range_hi(c.outer.size(), n_max);
    auto consider = [&](std::optional<Tuple>& best, const Tuple& t) {
        if (monochromatic(t, colors, exclude_trivial) && (!best || t < *best)) best = t;
    };
    std::optional<Tuple> best;
    if (!parallel || c.outer.empty()) {
        scan(c, n_max, 1, hi, [&](const Tuple& t) { consider(best, t); });
        return best;
    }
    std::vector<std::optional<Tuple>> parts(static_cast<std::size_t>(hi));
#pragma omp parallel for schedule(dynamic)
    for (long long v = 1; v <= hi; ++v)
        scan(c, n_max, v, v, [&](const Tuple& t) { consider(parts[static_cast<std::size_t>(v - 1)], t); });
    for (auto& part : parts)
        if (part && (!best || *part < *best)) best = part;
    return best;
}

void check_inputs(const IntPolynomial& p, long long n_max) {
    if (n_max < 1) throw std::invalid_argument("bound N must be at least 1");
    if (p.arity() == 0) throw std::invalid_argument("polynomial has no variables");
}

}  // namespace

std::vector<OrderedPartition> orderings_serial(const std::vector<MultiIndex>& elems) {
    OrderingSearch search(elems);
    std::vector<OrderedPartition> out;
    std::vector<unsigned long> prefix;
    const unsigned long full = search.full();
    for (unsigned long sub = full; sub; sub = (sub - 1) & full) search.extend(prefix, sub, out);
    sort_partitions(out);
    return out;
}

std::vector<OrderedPartition> orderings_parallel(const std::vector<MultiIndex>& elems) {
    OrderingSearch search(elems);
    const unsigned long full = search.full();
    std::vector<unsigned long> firsts;
    for (unsigned long sub = full; sub; sub = (sub - 1) & full) firsts.push_back(sub);
    std::vector<std::vector<OrderedPartition>> parts(firsts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < firsts.size(); ++i) {
        std::vector<unsigned long> prefix;
        search.extend(prefix, firsts[i], parts[i]);
    }
    std::vector<OrderedPartition> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    sort_partitions(out);
    return out;
}

std::vector<Tuple> solutions_serial(const IntPolynomial& p, long long n_max) {
    check_inputs(p, n_max);
    return fits_fast(p, n_max) ? solutions_impl<i128>(p, n_max, false) : solutions_impl<mpz_class>(p, n_max, false);
}

std::vector<Tuple> solutions_parallel(const IntPolynomial& p, long long n_max) {
    check_inputs(p, n_max);
    return fits_fast(p, n_max) ? solutions_impl<i128>(p, n_max, true) : solutions_impl<mpz_class>(p, n_max, true);
}

std::optional<Tuple> first_monochromatic_serial(const IntPolynomial& p, long long n_max,
                                                const std::vector<int>& colors, bool exclude_trivial) {
    check_inputs(p, n_max);
    if (colors.size() <= static_cast<std::size_t>(n_max)) throw std::invalid_argument("colour table too short");
    return fits_fast(p, n_max) ? mono_impl<i128>(p, n_max, colors, exclude_trivial, false)
                               : mono_impl<mpz_class>(p, n_max, colors, exclude_trivial, false);
}

std::optional<Tuple> first_monochromatic_parallel(const IntPolynomial& p, long long n_max,
                                                  const std::vector<int>& colors, bool exclude_trivial) {
    check_inputs(p, n_max);
    if (colors.size() <= static_cast<std::size_t>(n_max)) throw std::invalid_argument("colour table too short");
    return fits_fast(p, n_max) ? mono_impl<i128>(p, n_max, colors, exclude_trivial, true)
                               : mono_impl<mpz_class>(p, n_max, colors, exclude_trivial, true);
}

}  // namespace rado::kernels
