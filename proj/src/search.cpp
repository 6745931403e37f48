#include "rado/search.hpp"

#include "rado/kernels.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rado {
namespace {

SolutionInstance make_instance(std::vector<long long> t) {
    SolutionInstance s;
    s.values = t;
    std::sort(s.values.begin(), s.values.end());
    s.values.erase(std::unique(s.values.begin(), s.values.end()), s.values.end());
    s.trivial = s.values.size() == 1;
    s.assignment = std::move(t);
    return s;
}

void verify(const IntPolynomial& p, const std::vector<long long>& t) {
    if (p.evaluate(std::span<const long long>(t)) != 0) throw std::logic_error("reported assignment is not a solution");
}

mpz_class ipow(const mpz_class& v, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), e);
    return r;
}

// Hyperedges: distinct value sets of the solutions.
std::vector<std::vector<long long>> hyperedges(const IntPolynomial& p, long long n_max, const SolutionOptions& opts) {
    std::set<std::vector<long long>> edges;
    for (auto& s : enumerate_solutions(p, n_max, opts)) edges.insert(s.values);
    return {edges.begin(), edges.end()};
}

class AvoidSearch {
public:
    AvoidSearch(std::vector<std::vector<long long>> edges, int k, long long n)
        : edges_(std::move(edges)), k_(k), n_(n), color_(static_cast<std::size_t>(n + 1), 0),
          forbidden_(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(k + 1), 0)),
          closing_(static_cast<std::size_t>(n + 1)) {
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const auto& ed = edges_[e];
            if (ed.size() >= 2) closing_[static_cast<std::size_t>(ed[ed.size() - 2])].push_back(e);
        }
    }

    bool run() {
        for (const auto& e : edges_)
            if (e.size() == 1) return false;  // a single value is monochromatic under every colouring
        return assign(1, 0);
    }

    std::vector<int> coloring() const { return {color_.begin() + 1, color_.end()}; }
    unsigned long long nodes() const { return nodes_; }

private:
    bool assign(long long v, int used) {
        if (v > n_) return true;
        const auto vi = static_cast<std::size_t>(v);
        const int limit = std::min(k_, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (forbidden_[vi][static_cast<std::size_t>(c)] != 0) continue;
            ++nodes_;
            color_[vi] = c;
            // Edges whose second-largest vertex is v: everything but the top
            // vertex is now coloured; forbid the shared colour at the top.
            std::vector<std::pair<std::size_t, int>> marks;
            for (std::size_t e : closing_[vi]) {
                const auto& ed = edges_[e];
                const int c0 = color_[static_cast<std::size_t>(ed[0])];
                bool same = true;
                for (std::size_t i = 1; i + 1 < ed.size() && same; ++i)
                    same = color_[static_cast<std::size_t>(ed[i])] == c0;
                if (!same) continue;
                const auto top = static_cast<std::size_t>(ed.back());
                ++forbidden_[top][static_cast<std::size_t>(c0)];
                marks.emplace_back(top, c0);
            }
            if (assign(v + 1, std::max(used, c))) return true;
            for (const auto& [top, col] : marks) --forbidden_[top][static_cast<std::size_t>(col)];
            color_[vi] = 0;
        }
        return false;
    }

    std::vector<std::vector<long long>> edges_;
    int k_;
    long long n_;
    std::vector<int> color_;
    std::vector<std::vector<int>> forbidden_;
    std::vector<std::vector<std::size_t>> closing_;
    unsigned long long nodes_ = 0;
};

}  // namespace

const char* to_string(Coloring::Inner inner) {
    switch (inner) {
    case Coloring::Inner::Square: return "square";
    case Coloring::Inner::Cube: return "cube";
    case Coloring::Inner::Omega: return "omega";
    }
    return "?";
}

unsigned omega(const mpz_class& n) {
    if (n < 1) throw std::invalid_argument("omega is defined for positive integers");
    mpz_class m = n;
    unsigned count = 0;
    for (unsigned long d = 2; mpz_class(d) * d <= m; ++d) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            m /= d;
            ++count;
        }
    }
    if (m > 1) ++count;
    return count;
}

Coloring Coloring::explicit_colors(std::vector<int> colors) {
    if (colors.empty()) throw std::invalid_argument("explicit colouring needs at least one value");
    Coloring c;
    c.kind_ = Kind::Explicit;
    c.colors_ = 0;
    for (int v : colors) {
        if (v < 1) throw std::invalid_argument("colours must be positive");
        c.colors_ = std::max(c.colors_, v);
    }
    c.param_ = static_cast<long>(colors.size());
    c.table_ = std::move(colors);
    return c;
}

Coloring Coloring::residue(long m) {
    if (m < 1) throw std::invalid_argument("modulus must be positive");
    Coloring c;
    c.kind_ = Kind::Residue;
    c.param_ = m;
    c.colors_ = static_cast<int>(m);
    return c;
}

Coloring Coloring::last_nonzero_digit(long base) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    Coloring c;
    c.kind_ = Kind::LastNonzeroDigit;
    c.param_ = base;
    c.colors_ = static_cast<int>(base);
    return c;
}

Coloring Coloring::digit_count(long base, int k) {
    if (base < 2) throw std::invalid_argument("base must be at least 2");
    if (k < 1) throw std::invalid_argument("colour count must be positive");
    Coloring c;
    c.kind_ = Kind::DigitCount;
    c.param_ = base;
    c.colors_ = k;
    return c;
}

Coloring Coloring::pullback(Inner inner, Coloring outer) {
    Coloring c;
    c.kind_ = Kind::Pullback;
    c.inner_ = inner;
    c.colors_ = outer.color_count();
    c.outer_ = std::make_shared<const Coloring>(std::move(outer));
    return c;
}

int Coloring::color_count() const { return colors_; }

int Coloring::color(const mpz_class& v) const {
    switch (kind_) {
    case Kind::Explicit:
        if (v < 1 || v > param_) throw std::invalid_argument("value " + v.get_str() + " outside the explicit colouring");
        return table_[v.get_ui() - 1];
    case Kind::Residue: {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(param_));
        return static_cast<int>(r.get_si()) + 1;
    }
    case Kind::LastNonzeroDigit: {
        if (v < 0) throw std::invalid_argument("digit colourings need nonnegative values");
        if (v == 0) return colors_;
        mpz_class m = v;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(param_))) m /= param_;
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(param_));
        return static_cast<int>(r.get_si());
    }
    case Kind::DigitCount: {
        if (v < 0) throw std::invalid_argument("digit colourings need nonnegative values");
        unsigned long digits = 0;
        for (mpz_class m = v; m > 0; m /= param_) ++digits;
        return static_cast<int>(digits % static_cast<unsigned long>(colors_)) + 1;
    }
    case Kind::Pullback:
        switch (inner_) {
        case Inner::Square: return outer_->color(ipow(v, 2));
        case Inner::Cube: return outer_->color(ipow(v, 3));
        case Inner::Omega: return outer_->color(mpz_class(omega(v)));
        }
    }
    throw std::logic_error("unknown colouring kind");
}

std::vector<int> Coloring::table(long long n) const {
    std::vector<int> t(static_cast<std::size_t>(n + 1), 0);
    if (kind_ == Kind::Pullback && inner_ == Inner::Omega) {
        // Sieve Omega instead of factoring each value.
        std::vector<unsigned> om(static_cast<std::size_t>(n + 1), 0), rest(static_cast<std::size_t>(n + 1));
        for (long long v = 0; v <= n; ++v) rest[static_cast<std::size_t>(v)] = static_cast<unsigned>(v);
        for (long long p = 2; p <= n; ++p) {
            if (rest[static_cast<std::size_t>(p)] != static_cast<unsigned>(p) || om[static_cast<std::size_t>(p)] != 0) continue;
            for (long long m = p; m <= n; m += p)
                while (rest[static_cast<std::size_t>(m)] % p == 0) {
                    rest[static_cast<std::size_t>(m)] /= static_cast<unsigned>(p);
                    ++om[static_cast<std::size_t>(m)];
                }
        }
        for (long long v = 1; v <= n; ++v) t[static_cast<std::size_t>(v)] = outer_->color(mpz_class(om[static_cast<std::size_t>(v)]));
        return t;
    }
    for (long long v = 1; v <= n; ++v) t[static_cast<std::size_t>(v)] = color(v);
    return t;
}

std::string Coloring::describe() const {
    switch (kind_) {
    case Kind::Explicit: return "explicit on [1, " + std::to_string(param_) + "]";
    case Kind::Residue: return "residue mod " + std::to_string(param_);
    case Kind::LastNonzeroDigit: return "last nonzero digit base " + std::to_string(param_);
    case Kind::DigitCount: return "digit count base " + std::to_string(param_) + " mod " + std::to_string(colors_);
    case Kind::Pullback: return std::string(to_string(inner_)) + " pullback of (" + outer_->describe() + ")";
    }
    return "?";
}

std::vector<SolutionInstance> enumerate_solutions(const IntPolynomial& p, long long n_max, const SolutionOptions& opts) {
    auto tuples = opts.parallel ? kernels::solutions_parallel(p, n_max) : kernels::solutions_serial(p, n_max);
    std::vector<SolutionInstance> out;
    for (auto& t : tuples) {
        verify(p, t);
        SolutionInstance s = make_instance(std::move(t));
        if (opts.exclude_trivial && s.trivial) continue;
        if (!opts.allow_repeats && s.values.size() != s.assignment.size()) continue;
        out.push_back(std::move(s));
    }
    return out;
}

AvoidingResult find_avoiding_coloring(const IntPolynomial& p, int k, long long n_max, const SolutionOptions& opts) {
    if (k < 2) throw std::invalid_argument("need at least two colours");
    if (n_max < 1) throw std::invalid_argument("bound N must be at least 1");
    auto edges = hyperedges(p, n_max, opts);
    AvoidingResult r;
    r.hyperedges = edges.size();
    AvoidSearch search(std::move(edges), k, n_max);
    if (search.run()) r.coloring = search.coloring();
    r.nodes = search.nodes();
    return r;
}

ColoringCheck check_coloring_avoids(const IntPolynomial& p, const Coloring& c, long long n_max,
                                    const SolutionOptions& opts) {
    const auto table = c.table(n_max);
    ColoringCheck out;
    if (opts.allow_repeats) {
        auto t = opts.parallel ? kernels::first_monochromatic_parallel(p, n_max, table, opts.exclude_trivial)
                               : kernels::first_monochromatic_serial(p, n_max, table, opts.exclude_trivial);
        if (t) {
            verify(p, *t);
            out.avoids = false;
            out.violation = make_instance(std::move(*t));
        }
        return out;
    }
    for (auto& s : enumerate_solutions(p, n_max, opts)) {
        const int c0 = table[static_cast<std::size_t>(s.values.front())];
        if (std::all_of(s.values.begin(), s.values.end(),
                        [&](long long v) { return table[static_cast<std::size_t>(v)] == c0; })) {
            out.avoids = false;
            out.violation = std::move(s);
            return out;
        }
    }
    return out;
}

std::optional<std::vector<mpz_class>> config_elements(const ConfigFamily& f, const mpz_class& x, const mpz_class& y) {
    std::vector<mpz_class> el;
    if (f.shape == ConfigFamily::Shape::A) {
        el = {x, x + f.p.evaluate(y)};
        if (f.q) el.push_back(x + f.q->evaluate(y));
        el.push_back(x * y);
    } else {
        const mpq_class dy = f.d * mpq_class(y);
        if (dy.get_den() != 1) return std::nullopt;
        el = {x + f.p.evaluate(y)};
        if (f.q) el.push_back(x + f.q->evaluate(y));
        el.push_back(x * y + x + dy.get_num());
    }
    for (const auto& e : el)
        if (e < 1) return std::nullopt;
    return el;
}

std::optional<ConfigWitness> find_config_witness(const Coloring& c, const ConfigFamily& family, long bound,
                                                 long min_value) {
    if (family.p.coefficient(0) != 0 || (family.q && family.q->coefficient(0) != 0))
        throw std::invalid_argument("p and q must vanish at 0");
    if (min_value < 1) throw std::invalid_argument("minimum value must be positive");
    for (long sum = 2 * min_value; sum <= 2 * bound; ++sum) {
        for (long x = std::max(min_value, sum - bound); x <= std::min(bound, sum - min_value); ++x) {
            const mpz_class X = x, Y = sum - x;
            auto el = config_elements(family, X, Y);
            if (!el) continue;
            bool in_domain = true;
            std::vector<int> colors;
            for (const auto& e : *el) {
                if (c.kind() == Coloring::Kind::Explicit && (e > c.parameter())) {
                    in_domain = false;
                    break;
                }
                colors.push_back(c.color(e));
            }
            if (!in_domain) continue;
            if (std::all_of(colors.begin(), colors.end(), [&](int v) { return v == colors.front(); }))
                return ConfigWitness{X, Y, *el, colors.front()};
        }
    }
    return std::nullopt;
}

ParametrizedResult parametrized_solutions(const ParametrizedFamily& f, long r_lo, long r_hi, long s_lo, long s_hi) {
    ParametrizedResult out;
    const auto X = IntPolynomial::variable(3, 0), Y = IntPolynomial::variable(3, 1), Z = IntPolynomial::variable(3, 2);
    auto keep = [&](std::vector<long long> t) {
        for (long long v : t)
            if (v < 1) return;
        verify(out.polynomial, t);
        out.solutions.push_back(make_instance(std::move(t)));
    };
    if (f.kind == ParametrizedFamily::Kind::ExamplePR) {
        if (f.a.size() < 2) throw std::invalid_argument("need coefficients a_0..a_d with d >= 1");
        const unsigned d = static_cast<unsigned>(f.a.size() - 1);
        IntPolynomial p = X.pow(d) * (X - Y);
        for (unsigned i = 0; i <= d; ++i)
            p = p + X.pow(d - i) * Z.pow(i) * mpz_class(f.a[i]);
        out.polynomial = p;
        for (long r = r_lo; r <= r_hi; ++r)
            for (long s = s_lo; s <= s_hi; ++s) {
                long long ps = 0, pw = 1;
                for (unsigned i = 0; i <= d; ++i) {
                    ps += f.a[i] * pw;
                    pw *= s;
                }
                keep({r, r + ps, static_cast<long long>(r) * s});
            }
    } else {
        if (f.ec == 0) throw std::invalid_argument("c must be nonzero");
        out.polynomial = X * X - Y * Y + X * mpz_class(4 * f.ea) + Y * mpz_class(4 * f.eb) + Z * mpz_class(4 * f.ec);
        for (long r = r_lo; r <= r_hi; ++r)
            for (long s = s_lo; s <= s_hi; ++s) {
                const long long num = -(static_cast<long long>(r) * s + (f.ea + f.eb) * r + (f.ea - f.eb) * s);
                if (num % f.ec != 0) continue;
                keep({r + s, r - s, num / f.ec});
            }
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const SolutionInstance& a, const SolutionInstance& b) { return a.assignment < b.assignment; });
    return out;
}

}  // namespace rado
