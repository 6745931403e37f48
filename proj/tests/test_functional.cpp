#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rado/functional.hpp"
#include "support.hpp"

#include <algorithm>

using namespace rado;
using rado::test::P;

namespace {

std::optional<CandidateFunctional> find(const std::vector<CandidateFunctional>& list, const std::vector<Cell>& cells,
                                        std::size_t order, const std::vector<long>& offsets) {
    for (const auto& c : list)
        if (c.cells == cells && c.order == order && c.offsets == offsets) return c;
    return std::nullopt;
}

// Fubini numbers from the recurrence a(n) = sum_k C(n, k) a(n - k).
std::vector<long> fubini(int n) {
    std::vector<long> a(n + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long binom = 1;
        for (int k = 1; k <= m; ++k) {
            binom = binom * (m - k + 1) / k;
            a[m] += binom * a[m - k];
        }
    }
    return a;
}

bool subset_sums_to_zero(const std::vector<long>& c) {
    const std::size_t n = c.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        long s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s += c[i];
        if (s == 0) return true;
    }
    return false;
}

// Instantiates a certificate's template at concrete (a, d) and checks the
// claimed structure by direct evaluation.
void check_certificate_numerically(const IntPolynomial& p, const CandidateFunctional& c, long a, long d) {
    const auto& cert = *c.certificate;
    std::vector<mpq_class> t;
    for (const auto& s : cert.slots)
        t.push_back(s.kind == BrauerSlot::Kind::D ? mpq_class(d + cert.shift) : mpq_class(a + long(s.j) * d + cert.shift));
    for (const auto& v : t) REQUIRE(v > 0);
    auto ascending = partition_determined_by(support(p), t);
    auto cells = c.cells;
    if (c.kind == FunctionalKind::Upper) std::reverse(cells.begin(), cells.end());
    CHECK(ascending == cells);
    for (std::size_t i = 0; i <= c.order; ++i) {
        const std::size_t base = c.kind == FunctionalKind::Lower ? 0 : c.order;
        CHECK(apply_functional(t, c.cells[i][0]) - apply_functional(t, c.cells[base][0]) == c.offset_of(i));
    }
}

}  // namespace

TEST_CASE("ordered partitions of free indices are counted by Fubini numbers") {
    const auto f = fubini(4);
    const char* polys[] = {"x", "x + y", "x + y - z", "x + y + z + w"};
    for (int k = 1; k <= 4; ++k) CHECK(achievable_orderings(P(polys[k - 1])).size() == std::size_t(f[k]));
    CHECK(f[3] == 13);
    CHECK(f[4] == 75);
}

TEST_CASE("every ordering witness reproduces its cells") {
    for (const char* text : {"x + y - z", "-x3 - x4 + x1*x2 + x1*x2^2", "x*y^2 + y*z + w", "x^2 + y^2 - 3z^2",
                             "x*y - z^3 + x - 2y"}) {
        const auto p = P(text);
        const auto orders = achievable_orderings(p);
        CHECK_FALSE(orders.empty());
        for (const auto& o : orders) {
            for (const auto& t : o.witness) CHECK(t > 0);
            CHECK(partition_determined_by(support(p), o.witness) == o.cells);
        }
    }
    CHECK_THROWS_AS(achievable_orderings(IntPolynomial(2)), std::invalid_argument);
}

TEST_CASE("worked orderings are achievable") {
    const auto orders = achievable_orderings(P("-x3 - x4 + x1*x2 + x1*x2^2"));
    const std::vector<Cell> cells{{{0, 0, 1, 0}}, {{1, 1, 0, 0}}, {{0, 0, 0, 1}}, {{1, 2, 0, 0}}};
    CHECK(std::any_of(orders.begin(), orders.end(), [&](const auto& o) { return o.cells == cells; }));
    // Witness t = (a, b, a + b - 1, a + 2b - 2) at a = 3, b = 4.
    CHECK(partition_determined_by(support(P("-x3 - x4 + x1*x2 + x1*x2^2")), {3, 4, 6, 9}) == cells);

    const auto single = achievable_orderings(P("x + y - z"));
    CHECK(std::any_of(single.begin(), single.end(), [](const auto& o) { return o.cells.size() == 1; }));
}

TEST_CASE("candidate functionals of the worked examples") {
    const auto p = P("-x3 - x4 + x1*x2 + x1*x2^2");
    const Cell x3{{0, 0, 1, 0}}, x12{{1, 1, 0, 0}}, x4{{0, 0, 0, 1}}, x122{{1, 2, 0, 0}};
    const auto lower = candidate_functionals(p, FunctionalKind::Lower, 6);
    const auto l1 = find(lower, {x3, x12, x4, x122}, 1, {1});
    REQUIRE(l1);
    CHECK(necessary_filter(*l1).pass);
    const auto upper = candidate_functionals(p, FunctionalKind::Upper, 6);
    const auto u1 = find(upper, {x122, x4, x12, x3}, 1, {2});
    REQUIRE(u1);
    CHECK(necessary_filter(*u1).pass);

    const auto q = P("x*y^2 + y*z + w");
    const auto l2 = find(candidate_functionals(q, FunctionalKind::Lower, 6),
                         {{{0, 0, 0, 1}}, {{0, 1, 1, 0}}, {{1, 2, 0, 0}}}, 2, {1, 2});
    REQUIRE(l2);
    CHECK(necessary_filter(*l2).pass);

    CHECK_THROWS_AS(candidate_functionals(p, FunctionalKind::Lower, 0), std::invalid_argument);
}

TEST_CASE("necessary filter rules") {
    const auto p = P("x + y - 3z");
    const MultiIndex x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    const auto c = find(candidate_functionals(p, FunctionalKind::Lower, 6), std::vector<Cell>{{x, z}, {y}}, 1, {1});
    REQUIRE(c);
    const auto f = necessary_filter(*c);
    CHECK_FALSE(f.pass);
    CHECK(f.failed(4));

    // Distinct finite-offset cells {x^2}, {y^2}: l(alpha + beta) = 2.
    const auto q = P("x^2 + y^2 - 3z^2");
    const MultiIndex x2{2, 0, 0}, y2{0, 2, 0}, z2{0, 0, 2};
    const auto r = structural_filter({{x2}, {y2, z2}}, 1);
    CHECK_FALSE(r.pass);
    CHECK(r.failed(3));
    bool seen = false;
    for (const auto& cand : candidate_functionals(q, FunctionalKind::Upper, 3)) {
        const auto& cells = cand.cells;
        for (std::size_t i = 0; i <= cand.order; ++i)
            for (std::size_t j = 0; j <= cand.order; ++j)
                if (i != j && std::find(cells[i].begin(), cells[i].end(), x2) != cells[i].end() &&
                    std::find(cells[j].begin(), cells[j].end(), y2) != cells[j].end()) {
                    seen = true;
                    CHECK(necessary_filter(cand).failed(3));
                }
    }
    CHECK(seen);

    // Rule (ii): xy and z^3 in one cell give the form x + y - 3z.
    const auto mixed = structural_filter({{{1, 1, 0}, {0, 0, 3}}}, 0);
    CHECK_FALSE(mixed.pass);
    CHECK(mixed.failed(2));
    CHECK(structural_filter(std::vector<Cell>{{x, y, z}}, 0).pass);
    CHECK(structural_filter({{x, z}, {y}}, 0).pass);  // order 0: no fixed offsets
}

TEST_CASE("linear form regularity agrees with subset sums") {
    std::mt19937 rng(rado::test::seed());
    std::uniform_int_distribution<long> c(-6, 6);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<long> coeffs;
        for (int i = 0; i < 1 + iter % 6; ++i) {
            long v = c(rng);
            coeffs.push_back(v == 0 ? 1 : v);
        }
        CHECK(linear_form_partition_regular(coeffs) == subset_sums_to_zero(coeffs));
    }
}

TEST_CASE("surviving candidates are exactly the filtered candidates") {
    for (const char* text : {"x + y - 3z", "x^2 + y^2 - 3z^2", "x*y - z^3", "-x3 - x4 + x1*x2 + x1*x2^2",
                             "x^2 - x*y + 2x - 3y + z"}) {
        const auto p = P(text);
        for (auto kind : {FunctionalKind::Lower, FunctionalKind::Upper}) {
            std::vector<CandidateFunctional> expected;
            for (const auto& c : candidate_functionals(p, kind, 4))
                if (necessary_filter(c).pass) expected.push_back(c);
            const auto got = surviving_candidates(p, kind, 4);
            REQUIRE(got.size() == expected.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].cells == expected[i].cells);
                CHECK(got[i].order == expected[i].order);
                CHECK(got[i].offsets == expected[i].offsets);
            }
        }
    }
}

TEST_CASE("Brauer certificates for the worked functionals") {
    const auto p = P("-x3 - x4 + x1*x2 + x1*x2^2");
    const Cell x3{{0, 0, 1, 0}}, x12{{1, 1, 0, 0}}, x4{{0, 0, 0, 1}}, x122{{1, 2, 0, 0}};
    auto l1 = *find(candidate_functionals(p, FunctionalKind::Lower, 6), {x3, x12, x4, x122}, 1, {1});
    l1.certificate = brauer_certificate(l1, 4, -4, 4);
    REQUIRE(l1.certificate);
    check_certificate_numerically(p, l1, 1000, 37);
    check_certificate_numerically(p, l1, 123457, 9001);

    auto u1 = *find(candidate_functionals(p, FunctionalKind::Upper, 6), {x122, x4, x12, x3}, 1, {2});
    u1.certificate = brauer_certificate(u1, 4, -4, 4);
    REQUIRE(u1.certificate);
    check_certificate_numerically(p, u1, 1000, 37);

    const auto q = P("x*y^2 + y*z + w");
    auto l2 = *find(candidate_functionals(q, FunctionalKind::Lower, 6),
                    {{{0, 0, 0, 1}}, {{0, 1, 1, 0}}, {{1, 2, 0, 0}}}, 2, {1, 2});
    l2.certificate = brauer_certificate(l2, 4, -4, 4);
    REQUIRE(l2.certificate);
    check_certificate_numerically(q, l2, 1000, 37);
    check_certificate_numerically(q, l2, 50, 2000);

    const auto s = P("x + y - z");
    const auto flat = find(candidate_functionals(s, FunctionalKind::Lower, 2), {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, 0, {});
    REQUIRE(flat);
    const auto cert = brauer_certificate(*flat, 4, -4, 4);
    REQUIRE(cert);
    CHECK(std::all_of(cert->slots.begin(), cert->slots.end(), [&](const auto& sl) { return sl == cert->slots[0]; }));
}

TEST_CASE("certified functionals always pass the necessary filter") {
    for (const char* text : {"x + y - z", "x*y^2 + y*z + w", "-x3 - x4 + x1*x2 + x1*x2^2", "x^2 - x*y + z",
                             "x + 2y - z", "x^2 - y^2 + x*y"}) {
        const auto p = P(text);
        for (auto kind : {FunctionalKind::Lower, FunctionalKind::Upper})
            for (auto c : candidate_functionals(p, kind, 3)) {
                c.certificate = brauer_certificate(c, 3, -2, 2);
                if (!c.certificate) continue;
                CHECK(necessary_filter(c).pass);
                check_certificate_numerically(p, c, 4099, 211);
            }
    }
}

TEST_CASE("minimal cells") {
    // x^2 + y^2 - xy + (a - b) y with a - b != 0: singletons only.
    for (long k : {-3, -1, 2, 5}) {
        const auto p = P("x^2 + y^2 - x*y") + P("y", 2) * mpz_class(k);
        for (const auto& m : minimal_cells(p, 6)) {
            CHECK(m.cell.size() == 1);
            CHECK((m.cell[0] == MultiIndex{2, 0} || m.cell[0] == MultiIndex{0, 1}));
        }
    }
    // x^2 - y^2 + xy + 2a x - (a + b) y: minimal cells are homogeneous with a
    // nonzero coefficient sum.
    for (auto [a, b] : {std::pair{1L, 2L}, {2L, -1L}, {-3L, 3L}}) {
        const auto p = P("x^2 - y^2 + x*y") + P("x", 2) * mpz_class(2 * a) - P("y", 2) * mpz_class(a + b);
        for (const auto& m : minimal_cells(p, 6)) {
            CHECK(m.homogeneous);
            CHECK(m.coefficient_sum != 0);
        }
    }
    bool zero_sum = false;
    for (const auto& m : minimal_cells(P("x + y - z"), 6))
        if (m.cell == Cell{{1, 0, 0}, {0, 0, 1}}) {
            zero_sum = true;
            CHECK(m.coefficient_sum == 0);
        }
    CHECK(zero_sum);
}

TEST_CASE("homogeneous linear minimal cells find zero subset sums") {
    std::mt19937 rng(rado::test::seed() + 7);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t n = 1 + iter % 4;
        std::vector<long> coeffs;
        IntPolynomial p(n);
        for (std::size_t i = 0; i < n; ++i) {
            long v = c(rng);
            if (v == 0) v = -3;
            coeffs.push_back(v);
            p.add_term(MultiIndex::unit(n, i), v);
        }
        const auto cells = minimal_cells(p, 2);
        const bool has_zero = std::any_of(cells.begin(), cells.end(), [](const auto& m) { return m.coefficient_sum == 0; });
        CHECK(has_zero == subset_sums_to_zero(coeffs));
    }
}

TEST_CASE("scaling witnesses") {
    CHECK(scale_to_integers({mpq_class(1, 2), mpq_class(3, 4)}) == std::vector<mpq_class>{2, 3});
    CHECK(scale_to_integers({4, 6}) == std::vector<mpq_class>{2, 3});
}
