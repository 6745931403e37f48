#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rado/search.hpp"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace rado;
using rado::test::P;

namespace {

// Exhaustive check of a colour table against every solution in the box.
bool avoids_brute(const IntPolynomial& p, const std::vector<int>& colors, long long n, bool exclude_trivial) {
    std::vector<long long> t(p.arity(), 1);
    while (true) {
        if (p.evaluate(std::span<const long long>(t)) == 0) {
            bool mono = true, constant = true;
            for (auto v : t) {
                mono = mono && colors[v - 1] == colors[t[0] - 1];
                constant = constant && v == t[0];
            }
            if (mono && !(exclude_trivial && constant)) return false;
        }
        std::size_t i = t.size();
        while (i > 0 && t[i - 1] == n) t[--i] = 1;
        if (i == 0) return true;
        ++t[i - 1];
    }
}

unsigned omega_brute(long n) {
    unsigned k = 0;
    for (long d = 2; d <= n; ++d)
        while (n % d == 0) {
            n /= d;
            ++k;
        }
    return k;
}

}  // namespace

TEST_CASE("colourings") {
    const auto lnd = Coloring::last_nonzero_digit(5);
    CHECK(lnd.color(7) == 2);
    CHECK(lnd.color(25) == 1);
    CHECK(lnd.color(50) == 2);
    CHECK(Coloring::residue(3).color(7) == 2);
    CHECK(Coloring::digit_count(10, 2).color(99) == 1);
    CHECK(Coloring::digit_count(10, 2).color(100) == 2);
    const auto sq = Coloring::pullback(Coloring::Inner::Square, lnd);
    CHECK(sq.color(3) == lnd.color(9));
    const auto om = Coloring::pullback(Coloring::Inner::Omega, lnd);
    CHECK(om.color(12) == lnd.color(3));
    CHECK(om.color(1) == 5);  // Omega(1) = 0, whose colour is the base
    const auto ex = Coloring::explicit_colors({1, 2, 2, 1});
    CHECK(ex.color(4) == 1);
    CHECK_THROWS_AS(ex.color(5), std::invalid_argument);
    CHECK_THROWS_AS(Coloring::residue(0), std::invalid_argument);

    const auto table = om.table(200);
    for (long long v = 1; v <= 200; ++v) CHECK(table[v] == om.color(v));
    for (long n = 1; n <= 500; ++n) CHECK(omega(n) == omega_brute(n));
}

TEST_CASE("enumerate solutions") {
    const auto s = enumerate_solutions(P("x + y - z"), 4);
    std::set<std::vector<long long>> normalized;
    for (const auto& sol : s)
        if (sol.assignment[0] <= sol.assignment[1]) normalized.insert(sol.assignment);
    CHECK(normalized == std::set<std::vector<long long>>{{1, 1, 2}, {1, 2, 3}, {1, 3, 4}, {2, 2, 4}});

    const auto t = enumerate_solutions(P("x^2 - x*y + z"), 6);
    CHECK(std::any_of(t.begin(), t.end(), [](const auto& x) { return x.assignment == std::vector<long long>{2, 5, 6}; }));
    CHECK(enumerate_solutions(P("x + y - z"), 1).empty());

    SolutionOptions distinct;
    distinct.allow_repeats = false;
    for (const auto& sol : enumerate_solutions(P("x + y - z"), 10, distinct)) CHECK(sol.values.size() == 3);
    SolutionOptions no_trivial;
    no_trivial.exclude_trivial = true;
    const auto xy = enumerate_solutions(P("x*y - z^3"), 10, no_trivial);
    CHECK(std::none_of(xy.begin(), xy.end(), [](const auto& x) { return x.trivial; }));
    CHECK(enumerate_solutions(P("x*y - z^3"), 10).front().trivial);
    for (const auto& sol : enumerate_solutions(P("x^2 + y^2 - z^2"), 30))
        CHECK(P("x^2 + y^2 - z^2").evaluate(std::span<const long long>(sol.assignment)) == 0);
}

TEST_CASE("Schur ladder for two colours") {
    const auto p = P("x + y - z");
    const auto four = find_avoiding_coloring(p, 2, 4);
    REQUIRE(four.coloring);
    CHECK(*four.coloring == std::vector<int>{1, 2, 2, 1});
    CHECK(avoids_brute(p, *four.coloring, 4, false));
    CHECK_FALSE(find_avoiding_coloring(p, 2, 5).coloring);
    CHECK_FALSE(find_avoiding_coloring(p, 2, 6).coloring);  // anti-monotone
    CHECK_THROWS_AS(find_avoiding_coloring(p, 1, 4), std::invalid_argument);
}

TEST_CASE("avoiding colourings are verified certificates") {
    for (const char* text : {"x + y - 3z", "x + 2y - z", "x - 2y", "x^2 + y^2 - z^2"}) {
        const auto p = P(text);
        for (long long n : {6, 10}) {
            const auto r = find_avoiding_coloring(p, 2, n);
            if (r.coloring) CHECK(avoids_brute(p, *r.coloring, n, false));
        }
    }
    // Singleton solution sets can never be avoided: x = 2 is always monochromatic.
    CHECK_FALSE(find_avoiding_coloring(P("x - 2"), 3, 4).coloring);
}

TEST_CASE("rule colourings and the search agree") {
    const auto p = P("x + y - 3z");
    const auto lnd = Coloring::last_nonzero_digit(5);
    CHECK(check_coloring_avoids(p, lnd, 2000).avoids);
    const auto r = find_avoiding_coloring(p, 4, 40);
    REQUIRE(r.coloring);  // the rule colouring uses four colours on [1, 40]
    const auto res3 = check_coloring_avoids(P("x + y - z"), Coloring::residue(3), 20);
    CHECK_FALSE(res3.avoids);
    REQUIRE(res3.violation);
    const auto& v = res3.violation->assignment;
    CHECK(v == std::vector<long long>{3, 3, 6});  // x = y = z mod 3 forces 3 | x
}

TEST_CASE("reduction colourings") {
    CHECK(check_coloring_avoids(P("x^2 + y^2 - 3z^2"),
                                Coloring::pullback(Coloring::Inner::Square, Coloring::last_nonzero_digit(5)), 150)
              .avoids);
    SolutionOptions no_trivial;
    no_trivial.exclude_trivial = true;
    const auto om = Coloring::pullback(Coloring::Inner::Omega, Coloring::last_nonzero_digit(5));
    CHECK(check_coloring_avoids(P("x*y - z^3"), om, 1000, no_trivial).avoids);
    const auto with_trivial = check_coloring_avoids(P("x*y - z^3"), om, 50);
    CHECK_FALSE(with_trivial.avoids);
    CHECK(with_trivial.violation->assignment == std::vector<long long>{1, 1, 1});
}

TEST_CASE("configuration witnesses") {
    ConfigFamily f;
    f.p = MonovariatePoly{0, 1};
    const auto one = find_config_witness(Coloring::residue(1), f, 5);
    REQUIRE(one);
    CHECK(one->x == 2);
    CHECK(one->y == 2);
    CHECK(one->elements == std::vector<mpz_class>{2, 4, 4});

    const auto two = find_config_witness(Coloring::residue(2), f, 10);
    REQUIRE(two);
    for (const auto& e : two->elements) CHECK(Coloring::residue(2).color(e) == two->color);
    CHECK(*config_elements(f, 2, 4) == std::vector<mpz_class>{2, 6, 8});

    ConfigFamily b;
    b.shape = ConfigFamily::Shape::B;
    b.p = MonovariatePoly{0, 1};
    b.q = MonovariatePoly{0, 0, 1};
    b.d = 1;
    const auto three = find_config_witness(Coloring::residue(3), b, 10);
    REQUIRE(three);
    // Least witness by x + y, then x: check nothing smaller works.
    const long best = three->x.get_si() + three->y.get_si();
    for (long s = 4; s <= best; ++s)
        for (long x = 2; x <= s - 2; ++x) {
            if (s == best && x >= three->x.get_si()) break;
            const auto el = *config_elements(b, x, s - x);
            std::set<int> colors;
            for (const auto& e : el) colors.insert(Coloring::residue(3).color(e));
            CHECK(colors.size() > 1);
        }

    ConfigFamily bad;
    bad.p = MonovariatePoly{1, 1};
    CHECK_THROWS_AS(find_config_witness(Coloring::residue(2), bad, 5), std::invalid_argument);
    ConfigFamily half = b;
    half.d = mpq_class(1, 2);
    const auto h = find_config_witness(Coloring::residue(1), half, 6);
    REQUIRE(h);
    CHECK(h->y % 2 == 0);
}

TEST_CASE("parametrized families") {
    ParametrizedFamily ex;
    ex.a = {0, 1};  // x(x - y) + z
    const auto r = parametrized_solutions(ex, 1, 10, 1, 10);
    CHECK(r.polynomial == P("x^2 - x*y + z"));
    CHECK(r.solutions.size() == 100);
    CHECK(std::any_of(r.solutions.begin(), r.solutions.end(),
                      [](const auto& s) { return s.assignment == std::vector<long long>{2, 5, 6}; }));
    for (const auto& s : r.solutions) CHECK(r.polynomial.evaluate(std::span<const long long>(s.assignment)) == 0);

    // Subset of the box enumeration.
    const auto box = enumerate_solutions(r.polynomial, 110);
    std::set<std::vector<long long>> all;
    for (const auto& s : box) all.insert(s.assignment);
    for (const auto& s : r.solutions)
        if (std::all_of(s.assignment.begin(), s.assignment.end(), [](long long v) { return v <= 110; }))
            CHECK(all.count(s.assignment) == 1);

    ParametrizedFamily eq2;
    eq2.kind = ParametrizedFamily::Kind::Equation2;
    eq2.ea = 1;
    eq2.eb = -1;
    eq2.ec = 0;
    CHECK_THROWS_AS(parametrized_solutions(eq2, 1, 5, 0, 3), std::invalid_argument);
    eq2.ec = 1;
    eq2.eb = 0;
    eq2.ea = -2;
    const auto e = parametrized_solutions(eq2, 1, 12, -6, 6);
    for (const auto& s : e.solutions) CHECK(e.polynomial.evaluate(std::span<const long long>(s.assignment)) == 0);

    ParametrizedFamily short_a;
    short_a.a = {1};
    CHECK_THROWS_AS(parametrized_solutions(short_a, 1, 2, 1, 2), std::invalid_argument);
}
