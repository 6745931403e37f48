#include "rado/conditions.hpp"

#include "rado/roots.hpp"
#include "rado/text.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace rado {
namespace {

std::vector<long> sorted_unique(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<mpz_class> distinct_roots(const IntPolynomial& p) {
    const MonovariatePoly diag = diagonal(p);
    if (diag.is_zero()) throw std::invalid_argument("the diagonal polynomial is zero; the minimal condition does not apply");
    const IntegerRoots roots = integer_roots(diag);
    if (!roots.splits_linearly)
        throw std::invalid_argument("the diagonal polynomial does not split into linear factors over Z");
    std::vector<mpz_class> out = roots.roots;
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Whether some upper structure of order >= 1 could pass the filter.
bool finite_group_possible(const IntPolynomial& p) {
    for (const auto& part : *cached_orderings(support(p))) {
        const std::vector<Cell> cells(part.cells.rbegin(), part.cells.rend());
        for (std::size_t m = 1; m < cells.size(); ++m)
            if (structure_viable(cells, m, FunctionalKind::Upper)) return true;
    }
    return false;
}

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("coefficient too large");
    return z.get_si();
}

// Normal-form data of sign * P(vars) as a quadratic in x, y, z.
struct Quadratic {
    std::map<std::array<unsigned, 3>, long> quad;  // exponent -> coefficient, degree 2
    long a = 0, b = 0, c = 0;
    bool ok = true;  // degree <= 2 and no constant term
};

Quadratic read_quadratic(const IntPolynomial& p, const std::array<std::size_t, 3>& vars, int sign) {
    Quadratic q;
    for (const auto& [alpha, coeff] : p.terms()) {
        std::array<unsigned, 3> e{0, 0, 0};
        std::uint64_t inside = 0;
        for (int r = 0; r < 3; ++r) {
            e[r] = vars[r] < alpha.arity() ? alpha[vars[r]] : 0;
            inside += e[r];
        }
        if (inside != alpha.degree() || alpha.degree() == 0 || alpha.degree() > 2) {
            q.ok = false;
            return q;
        }
        const long c = sign * to_long(coeff);
        if (alpha.degree() == 2) {
            q.quad[e] = c;
        } else if (e[0] == 1) {
            q.a = c;
        } else if (e[1] == 1) {
            q.b = c;
        } else {
            q.c = c;
        }
    }
    return q;
}

bool quad_is(const Quadratic& q, std::initializer_list<std::pair<std::array<unsigned, 3>, long>> want) {
    return q.quad == std::map<std::array<unsigned, 3>, long>(want.begin(), want.end());
}

bool same_up_to_sign(const IntPolynomial& p, const IntPolynomial& q) { return p == q || p == -q; }

std::vector<std::string> known_notes(const IntPolynomial& p) {
    std::vector<std::string> notes;
    if (p.arity() != 3) return notes;
    const std::array<std::size_t, 3> perm{0, 1, 2};
    std::array<std::size_t, 3> pi = perm;
    const IntPolynomial ref = parse_polynomial("x*y - z^3").polynomial;
    do {
        if (same_up_to_sign(p.permute(pi), ref)) {
            notes.emplace_back(
                "xy = z^3 is also refuted independently: pulling back a colouring that avoids x + y = 3z "
                "along the prime-factor count leaves no monochromatic solution other than (1, 1, 1) "
                "(see check-coloring with an omega pullback)");
            break;
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return notes;
}

void certify(CandidateFunctional& c, const AnalysisConfig& cfg, std::vector<CandidateFunctional>& out) {
    if (auto cert = brauer_certificate(c, cfg.j_max, cfg.e_lo, cfg.e_hi)) {
        c.status = CandidateStatus::Certified;
        c.certificate = std::move(cert);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const CandidateFunctional& o) {
            return o.kind == c.kind && o.cells == c.cells && o.order == c.order && o.offsets == c.offsets;
        });
        if (!seen) out.push_back(c);
    }
}

}  // namespace

const char* to_string(MaximalStatus s) {
    switch (s) {
    case MaximalStatus::Holds: return "holds";
    case MaximalStatus::FailsWithinBounds: return "fails-within-bounds";
    case MaximalStatus::FailsDefinitively: return "fails-definitively";
    }
    return "?";
}

const char* to_string(MinimalStatus s) {
    return s == MinimalStatus::Holds ? "holds" : "fails-within-bounds";
}

const char* to_string(Family f) {
    return f == Family::QuadraticMinusXY ? "x^2 - xy + ax + by + cz" : "x^2 - y^2 + ax + by + cz";
}

const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::NotPartitionRegular: return "NotPartitionRegular";
    case Outcome::PartitionRegular: return "PartitionRegular";
    case Outcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* to_string(Route r) {
    switch (r) {
    case Route::ConstantSolutions: return "constant-solutions";
    case Route::FamilyClassifier: return "family-classifier";
    case Route::MinimalDefinitive: return "minimal";
    case Route::MaximalDefinitive: return "maximal";
    }
    return "?";
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    for (long p = 2; p <= bound; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

std::vector<MaximalEntry> check_maximal(const IntPolynomial& p, const std::vector<long>& q_set, long d_max) {
    if (q_set.empty()) throw std::invalid_argument("q_set must be nonempty");
    for (long q : q_set)
        if (q < 2) throw std::invalid_argument("q must be at least 2, got " + std::to_string(q));
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    const auto candidates = surviving_candidates(p, FunctionalKind::Upper, d_max);
    const bool open_offsets = finite_group_possible(p);

    std::vector<MaximalEntry> out;
    for (long q : sorted_unique(q_set)) {
        MaximalEntry e;
        e.q = q;
        const Interval interval{1, q};
        for (const auto& c : candidates) {
            ++e.candidates_examined;
            MonovariatePoly w = weighted_polynomial(p, c, q);
            if (has_real_root_in(w, interval)) {
                e.status = MaximalStatus::Holds;
                e.candidate = c;
                e.weighted = std::move(w);
                break;
            }
        }
        if (e.status != MaximalStatus::Holds)
            e.status = open_offsets ? MaximalStatus::FailsWithinBounds : MaximalStatus::FailsDefinitively;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<MinimalEntry> check_minimal(const IntPolynomial& p, const std::vector<long>& primes, long d_max) {
    if (primes.empty()) throw std::invalid_argument("prime set must be nonempty");
    for (long q : primes)
        if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
    const auto roots = distinct_roots(p);

    struct Shifted {
        mpz_class root;
        IntPolynomial poly;
        std::vector<CandidateFunctional> candidates;
    };
    std::vector<Shifted> shifted;
    for (const auto& a : roots) {
        IntPolynomial s = shift(p, a);
        auto cands = surviving_candidates(s, FunctionalKind::Lower, d_max);
        shifted.push_back({a, std::move(s), std::move(cands)});
    }

    std::vector<MinimalEntry> out;
    for (long prime : sorted_unique(primes)) {
        MinimalEntry e;
        e.prime = prime;
        for (const auto& sh : shifted) {
            for (const auto& c : sh.candidates) {
                ++e.candidates_examined;
                MonovariatePoly w = weighted_polynomial(sh.poly, c, prime);
                auto r = unit_root_exists(w, prime);
                if (r.exists) {
                    e.status = MinimalStatus::Holds;
                    e.root = sh.root;
                    e.candidate = c;
                    e.weighted = std::move(w);
                    e.witness = r.witness;
                    break;
                }
            }
            if (e.status == MinimalStatus::Holds) break;
        }
        out.push_back(std::move(e));
    }
    return out;
}

bool definitive_minimal_failure(const IntPolynomial& p, long d_max) {
    for (const auto& a : distinct_roots(p)) {
        const IntPolynomial s = shift(p, a);
        for (const auto& mc : minimal_cells(s, d_max))
            if (!mc.homogeneous || mc.coefficient_sum == 0) return false;
    }
    return true;
}

FamilyResult classify_family(const IntPolynomial& p) {
    FamilyResult out;
    if (p.is_zero()) {
        out.note = "zero polynomial";
        return out;
    }
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < p.arity(); ++i)
        if (p.degree_in(i) > 0) used.push_back(i);
    if (used.size() > 3 || p.total_degree() != 2) {
        out.note = "not of the form x^2 - xy + ax + by + cz or x^2 - y^2 + ax + by + cz";
        return out;
    }
    // Candidate slots: used variables, padded with unused indices.
    std::vector<std::size_t> slots = used;
    for (std::size_t i = 0; slots.size() < 3; ++i)
        if (std::find(slots.begin(), slots.end(), i) == slots.end()) slots.push_back(i);
    std::sort(slots.begin(), slots.end());

    std::array<std::size_t, 3> perm{slots[0], slots[1], slots[2]};
    bool open_pattern = false;
    do {
        for (int sign : {1, -1}) {
            const Quadratic q = read_quadratic(p, perm, sign);
            if (!q.ok) continue;
            std::optional<Family> fam;
            if (quad_is(q, {{{2, 0, 0}, 1}, {{1, 1, 0}, -1}})) fam = Family::QuadraticMinusXY;
            if (quad_is(q, {{{2, 0, 0}, 1}, {{0, 2, 0}, -1}})) fam = Family::DifferenceOfSquares;
            if (quad_is(q, {{{2, 0, 0}, 1}, {{1, 1, 0}, -2}}) && q.a != 0 && q.b == -q.a && q.c != 0)
                open_pattern = true;
            if (!fam) continue;
            const long a = q.a, b = q.b, c = q.c;
            const bool hypotheses = a * b * c == 0 || a + b + c == 0;
            if (!hypotheses) {
                if (a + b == 0 || a + c == 0 || b + c == 0) open_pattern = true;
                continue;
            }
            FamilyMatch m;
            m.family = *fam;
            m.a = a;
            m.b = b;
            m.c = c;
            m.variables.assign(perm.begin(), perm.end());
            m.sign = sign;
            if (a + b + c == 0) {
                m.partition_regular = true;
                m.reason = "a + b + c = 0: the diagonal vanishes, so every constant triple is a solution";
            } else if (a == 0 && b == 0) {
                m.partition_regular = true;
                m.reason = *fam == Family::QuadraticMinusXY
                               ? "a = b = 0: x(x - y) + cz has the solutions (r, r + cs, rs), monochromatic "
                                 "by the {x, x + p(y), xy} configuration theorem"
                               : "a = b = 0: the zero-sum minimal cell {x^2, y^2} satisfies the minimal Rado "
                                 "condition, which is equivalent to partition regularity for this family";
            } else {
                m.partition_regular = false;
                m.reason = "a + b + c != 0 with abc = 0 and not a = b = 0: the only diagonal root is 0 and "
                           "every minimal Rado set is homogeneous of degree 1 with nonzero sum, so the "
                           "minimal Rado condition fails";
            }
            out.match = m;
            out.note = std::string("matched ") + to_string(*fam);
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (open_pattern) {
        out.open_problem = true;
        out.note = "open problem: a, b, c and a + b + c are all nonzero and the minimal Rado condition "
                   "holds; partition regularity of this family is not known";
    } else {
        out.note = "not of the form x^2 - xy + ax + by + cz or x^2 - y^2 + ax + by + cz with abc = 0 or "
                   "a + b + c = 0";
    }
    return out;
}

Verdict analyze(const IntPolynomial& p, const AnalysisConfig& cfg) {
    if (cfg.q_max < 2 || cfg.p_max < 2 || cfg.d_max < 1 || cfg.e_lo > cfg.e_hi)
        throw std::invalid_argument("invalid analysis configuration");
    Verdict v;
    v.config = cfg;
    if (p.is_zero()) {
        v.outcome = Outcome::PartitionRegular;
        v.routes.push_back(Route::ConstantSolutions);
        v.notes.emplace_back("the zero polynomial vanishes everywhere");
        return v;
    }
    v.family = classify_family(p);
    for (auto& n : known_notes(p)) v.notes.push_back(std::move(n));

    // Maximal condition over q in [2, q_max].
    std::vector<long> qs;
    for (long q = 2; q <= cfg.q_max; ++q) qs.push_back(q);
    v.maximal = check_maximal(p, qs, cfg.d_max);
    const bool maximal_definitive = std::any_of(v.maximal.begin(), v.maximal.end(), [](const MaximalEntry& e) {
        return e.status == MaximalStatus::FailsDefinitively;
    });
    if (std::any_of(v.maximal.begin(), v.maximal.end(),
                    [](const MaximalEntry& e) { return e.status == MaximalStatus::FailsWithinBounds; }))
        v.warnings.emplace_back("maximal condition fails within the configured offset bound only");

    // Minimal condition.
    const MonovariatePoly diag = diagonal(p);
    bool minimal_definitive = false;
    if (diag.is_zero()) {
        v.notes.emplace_back("the diagonal vanishes: every constant tuple is a solution");
    } else if (p.constant_term() != 0) {
        v.notes.emplace_back("nonzero constant term: the minimal condition is not applicable and was skipped");
    } else if (!integer_roots(diag).splits_linearly) {
        v.notes.emplace_back("the diagonal does not split over Z: the minimal condition is unsupported");
    } else {
        minimal_definitive = definitive_minimal_failure(p, cfg.d_max);
        v.minimal_definitive = minimal_definitive;
        v.minimal = check_minimal(p, primes_up_to(cfg.p_max), cfg.d_max);
        if (!minimal_definitive &&
            std::any_of(v.minimal.begin(), v.minimal.end(),
                        [](const MinimalEntry& e) { return e.status == MinimalStatus::FailsWithinBounds; }))
            v.warnings.emplace_back("minimal condition fails at some tested prime within the configured bounds "
                                    "only (bounded soundness)");
    }

    // Certificates for the functionals that witnessed a condition.
    for (auto& e : v.maximal)
        if (e.candidate) certify(*e.candidate, cfg, v.certified);
    for (auto& e : v.minimal)
        if (e.candidate) certify(*e.candidate, cfg, v.certified);

    if (minimal_definitive) v.routes.push_back(Route::MinimalDefinitive);
    if (maximal_definitive) v.routes.push_back(Route::MaximalDefinitive);
    const bool refuted = minimal_definitive || maximal_definitive;

    if (v.family.match) {
        if (v.family.match->partition_regular && refuted)
            throw std::logic_error("family classifier contradicts a definitive condition failure");
        v.outcome = v.family.match->partition_regular ? Outcome::PartitionRegular : Outcome::NotPartitionRegular;
        v.routes.insert(v.routes.begin(), Route::FamilyClassifier);
    } else if (diag.is_zero()) {
        if (refuted) throw std::logic_error("constant solutions contradict a definitive condition failure");
        v.outcome = Outcome::PartitionRegular;
        v.routes.insert(v.routes.begin(), Route::ConstantSolutions);
    } else if (refuted) {
        v.outcome = Outcome::NotPartitionRegular;
    } else {
        v.outcome = Outcome::Inconclusive;
        if (v.family.open_problem) v.notes.push_back(v.family.note);
    }
    return v;
}

}  // namespace rado
