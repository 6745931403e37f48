#include "rado/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace rado {
namespace {

using QPoly = std::vector<mpq_class>;  // index = power, trimmed

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const MonovariatePoly& q) {
    QPoly p(q.coefficients().begin(), q.coefficients().end());
    trim(p);
    return p;
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

QPoly remainder(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const mpq_class f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

int sgn(const mpq_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::vector<QPoly> sturm_sequence(const QPoly& p) {
    std::vector<QPoly> seq{p, derivative(p)};
    while (!seq.back().empty()) {
        QPoly r = remainder(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    if (seq.back().empty()) seq.pop_back();
    return seq;
}

std::size_t variations(const std::vector<QPoly>& seq, const mpq_class& x) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Prime factorisation of n > 0 by trial division.
std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n) {
    std::vector<std::pair<mpz_class, unsigned>> f;
    for (mpz_class d = 2; d * d <= n; ++d) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 2) break;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) f.emplace_back(d, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> ds{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = ds.size();
        mpz_class pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace

MonovariatePoly weighted_polynomial(const IntPolynomial& p, const CandidateFunctional& c, const mpz_class& base) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    MonovariatePoly out;
    for (std::size_t i = 0; i <= c.order && i < c.cells.size(); ++i) {
        mpz_class weight;
        mpz_pow_ui(weight.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(c.offset_of(i)));
        for (const auto& alpha : c.cells[i])
            out = out + MonovariatePoly::monomial(weight * p.coefficient(alpha), alpha.degree());
    }
    return out;
}

std::size_t sturm_count(const MonovariatePoly& q, const mpq_class& lo, const mpq_class& hi) {
    const QPoly p = to_q(q);
    if (p.empty()) throw std::invalid_argument("zero polynomial has infinitely many roots");
    if (lo >= hi) return 0;
    const auto seq = sturm_sequence(p);
    const std::size_t vlo = variations(seq, lo), vhi = variations(seq, hi);
    return vlo >= vhi ? vlo - vhi : 0;
}

bool has_real_root_in(const MonovariatePoly& q, const Interval& interval) {
    if (interval.lo > interval.hi) throw std::invalid_argument("empty interval");
    const QPoly p = to_q(q);
    if (p.empty()) return true;
    if (p.size() == 1) return false;
    if (eval(p, interval.lo) == 0 || eval(p, interval.hi) == 0) return true;
    if (interval.lo == interval.hi) return false;
    const auto seq = sturm_sequence(p);
    return variations(seq, interval.lo) > variations(seq, interval.hi);
}

IntegerRoots integer_roots(const MonovariatePoly& q) {
    if (q.is_zero()) throw std::invalid_argument("zero polynomial has every integer as a root");
    IntegerRoots out;
    MonovariatePoly rest = q;
    MonovariatePoly quot;
    while (!rest.is_zero() && rest.degree() > 0 && rest.coefficient(0) == 0 && rest.divide_by_root(0, quot)) {
        out.roots.push_back(0);
        rest = quot;
    }
    if (rest.degree() > 0) {
        const mpz_class c0 = abs(rest.coefficient(0));
        // Cauchy bound on root magnitudes.
        mpz_class cap = 0;
        const mpz_class lead = abs(rest.leading());
        for (long i = 0; i < rest.degree(); ++i) {
            mpz_class r = abs(rest.coefficient(static_cast<std::size_t>(i))) / lead;
            if (r > cap) cap = r;
        }
        cap += 1;
        for (const auto& d : divisors(c0)) {
            if (d > cap) break;
            for (const mpz_class& r : {mpz_class(d), mpz_class(-d)}) {
                while (rest.degree() > 0 && rest.divide_by_root(r, quot)) {
                    out.roots.push_back(r);
                    rest = quot;
                }
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.splits_linearly = rest.degree() == 0;
    return out;
}

}  // namespace rado
