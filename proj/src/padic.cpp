#include "rado/padic.hpp"

#include <deque>
#include <stdexcept>

namespace rado {
namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Euclidean division over Q.
void divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        const mpq_class f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    rem = std::move(a);
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

MonovariatePoly primitive_from(const QPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : p) z.push_back(mpz_class(c * l));
    MonovariatePoly out(std::move(z));
    out = out.primitive_part();
    if (!out.is_zero() && out.leading() < 0) out = out * mpz_class(-1);
    return out;
}

mpz_class p_power(long p, unsigned k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), k);
    return r;
}

// Bareiss fraction-free determinant.
mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Unit residue r (mod p^j) passes the valuation criterion for a liftable root.
bool hensel_ok(const MonovariatePoly& q, const mpz_class& r, long p) {
    const mpz_class v = q.evaluate(r);
    if (v == 0) return true;
    const mpz_class d = q.derivative().evaluate(r);
    if (d == 0) return false;
    return padic_valuation(v, p) > 2 * padic_valuation(d, p);
}

}  // namespace

bool PadicApprox::invertible() const { return residue % p != 0; }

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

unsigned long padic_valuation(const mpz_class& x, long p) {
    if (x == 0) throw std::invalid_argument("valuation of zero is infinite");
    mpz_class y = x;
    unsigned long v = 0;
    while (y % p == 0) {
        y /= p;
        ++v;
    }
    return v;
}

mpz_class resultant(const MonovariatePoly& a, const MonovariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const std::size_t m = static_cast<std::size_t>(a.degree()), n = static_cast<std::size_t>(b.degree());
    if (m == 0 && n == 0) return 1;
    const std::size_t size = m + n;
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
    // Rows hold coefficients from the leading term down.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a.coefficient(m - k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b.coefficient(n - k);
    return determinant(std::move(s));
}

MonovariatePoly squarefree_part(const MonovariatePoly& q) {
    if (q.is_zero()) return q;
    QPoly p(q.coefficients().begin(), q.coefficients().end());
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    trim(d);
    if (d.empty()) return primitive_from(p);
    QPoly g = gcd(p, d), quot, rem;
    divmod(p, g, quot, rem);
    return primitive_from(quot);
}

UnitRootResult unit_root_exists(const MonovariatePoly& q, long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    UnitRootResult out;
    if (q.is_zero()) {
        out.exists = true;
        out.witness = PadicApprox{p, 6, 1};
        return out;
    }
    const MonovariatePoly q0 = squarefree_part(q);
    if (q0.degree() < 1) return out;
    const mpz_class res = resultant(q0, q0.derivative());
    const unsigned long r = padic_valuation(res, p);
    out.depth_bound = static_cast<unsigned>(2 * r + 1);
    const unsigned precision = std::max(6u, out.depth_bound + 1);

    std::deque<mpz_class> level;
    for (long c = 1; c < p; ++c)
        if (q0.evaluate(mpz_class(c)) % p == 0) level.emplace_back(c);
    mpz_class modulus = p;
    for (unsigned j = 1; !level.empty(); ++j) {
        for (const auto& c : level)
            if (hensel_ok(q0, c, p)) {
                out.exists = true;
                out.witness = hensel_lift(q0, PadicApprox{p, j, c}, precision);
                return out;
            }
        if (j > out.depth_bound + 1) throw std::logic_error("unit root search exceeded its depth bound");
        std::deque<mpz_class> next;
        const mpz_class next_mod = modulus * p;
        for (const auto& c : level)
            for (long t = 0; t < p; ++t) {
                mpz_class cand = c + modulus * t;
                if (q0.evaluate(cand) % next_mod == 0) next.push_back(std::move(cand));
            }
        level = std::move(next);
        modulus = next_mod;
    }
    return out;
}

PadicApprox hensel_lift(const MonovariatePoly& q, const PadicApprox& r0, unsigned k) {
    if (!is_prime(r0.p)) throw std::invalid_argument("p must be prime");
    if (q.is_zero()) return PadicApprox{r0.p, k, r0.residue % p_power(r0.p, k)};
    if (!hensel_ok(q, r0.residue, r0.p))
        throw std::invalid_argument("Hensel criterion v(Q(r)) > 2 v(Q'(r)) fails at " + r0.residue.get_str());
    const long p = r0.p;
    const MonovariatePoly dq = q.derivative();
    const mpz_class target = p_power(p, k);
    mpz_class r = r0.residue;
    for (int iter = 0; iter < 256; ++iter) {
        const mpz_class v = q.evaluate(r);
        if (v % target == 0) {
            mpz_class out = r % target;
            if (out < 0) out += target;
            return PadicApprox{p, k, out};
        }
        const mpz_class d = dq.evaluate(r);
        const unsigned long s = padic_valuation(d, p);
        const mpz_class ps = p_power(p, static_cast<unsigned>(s));
        const mpz_class modulus = p_power(p, k + static_cast<unsigned>(s) + 1);
        mpz_class unit = d / ps, inv;
        mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
        mpz_class delta = (v / ps) * inv;
        r = (r - delta) % modulus;
        if (r < 0) r += modulus;
    }
    throw std::logic_error("Newton iteration did not converge");
}

}  // namespace rado
