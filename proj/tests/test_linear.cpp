#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rado/linear.hpp"
#include "support.hpp"

using namespace rado;

namespace {

using V = std::vector<mpq_class>;

bool satisfies(const LinearSystem& s, const V& x) {
    for (const auto& c : s.constraints()) {
        mpq_class lhs = 0;
        for (std::size_t i = 0; i < x.size(); ++i) lhs += c.coeffs[i] * x[i];
        if (c.rel == Relation::LessEq && !(lhs <= c.rhs)) return false;
        if (c.rel == Relation::Less && !(lhs < c.rhs)) return false;
        if (c.rel == Relation::Equal && lhs != c.rhs) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("strict inequalities are exact") {
    LinearSystem s(1);
    s.add({1}, Relation::Less, 0);   // x < 0
    s.add({-1}, Relation::Less, 0);  // x > 0
    CHECK_FALSE(s.feasible());

    LinearSystem t(1);
    t.add({1}, Relation::LessEq, 0);
    t.add({-1}, Relation::LessEq, 0);
    REQUIRE(t.feasible());
    CHECK(*t.find_point() == V{0});

    LinearSystem u(2);
    u.add({-1, 0}, Relation::Less, 0);
    u.add({0, -1}, Relation::Less, 0);
    u.add({1, 1}, Relation::Less, mpq_class(1, 1000));
    const auto pt = u.find_point();
    REQUIRE(pt);
    CHECK(satisfies(u, *pt));
}

TEST_CASE("equalities with offsets") {
    LinearSystem s(2);
    s.add({-1, 0}, Relation::Less, 0);
    s.add({0, -1}, Relation::Less, 0);
    s.add_equal({0, 1}, {1, 0}, 3);  // y = x + 3
    const auto pt = s.find_point();
    REQUIRE(pt);
    CHECK((*pt)[1] == (*pt)[0] + 3);
    s.add_less({0, 1}, {1, 0});  // y < x contradicts
    CHECK_FALSE(s.feasible());
}

TEST_CASE("unboundedness") {
    LinearSystem s(2);
    s.add({-1, 0}, Relation::Less, 0);
    s.add({0, -1}, Relation::Less, 0);
    s.add({1, -1}, Relation::LessEq, 0);  // x <= y
    CHECK(s.unbounded_above({0, 1}));
    CHECK(s.unbounded_above({-1, 1}));  // y - x grows
    s.add_equal({0, 1}, {1, 0}, 2);     // y = x + 2
    CHECK_FALSE(s.unbounded_above({-1, 1}));
    CHECK(s.unbounded_above({1, 0}));
    s.add({1, 0}, Relation::LessEq, 5);
    CHECK_FALSE(s.unbounded_above({1, 0}));

    LinearSystem empty(1);
    empty.add({1}, Relation::Less, 0);
    empty.add({-1}, Relation::Less, -1);
    CHECK_FALSE(empty.unbounded_above({1}));
}

TEST_CASE("random systems agree with grid sampling") {
    std::mt19937 rng(rado::test::seed());
    std::uniform_int_distribution<int> c(-3, 3), rel(0, 2);
    int feasible = 0;
    for (int iter = 0; iter < 300; ++iter) {
        LinearSystem s(2);
        const int rows = 2 + iter % 4;
        for (int r = 0; r < rows; ++r)
            s.add({c(rng), c(rng)}, rel(rng) == 0 ? Relation::Less : Relation::LessEq, c(rng));
        const auto pt = s.find_point();
        if (pt) {
            ++feasible;
            CHECK(satisfies(s, *pt));
        }
        // Sampling can only confirm feasibility.
        bool sampled = false;
        for (int x = -40; x <= 40 && !sampled; ++x)
            for (int y = -40; y <= 40 && !sampled; ++y)
                sampled = satisfies(s, V{mpq_class(x, 4), mpq_class(y, 4)});
        if (sampled) CHECK(pt.has_value());
    }
    CHECK(feasible > 0);
}

TEST_CASE("affine hull") {
    CHECK(in_affine_hull({{0, 0}, {1, 1}}, {2, 2}));
    CHECK_FALSE(in_affine_hull({{0, 0}, {1, 1}}, {1, 2}));
    CHECK(in_affine_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {mpq_class(1, 2), mpq_class(1, 2), 0}));
}
