#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rado/cli.hpp"
#include "rado/conditions.hpp"
#include "rado/kernels.hpp"
#include "rado/report.hpp"
#include "rado/search.hpp"
#include "support.hpp"

#include <sstream>

using namespace rado;
using rado::test::P;

namespace {

AnalysisConfig small_config() {
    AnalysisConfig c;
    c.q_max = 4;
    c.p_max = 7;
    c.d_max = 3;
    return c;
}

}  // namespace

TEST_CASE("verdicts never contradict small colourings") {
    // A colouring avoiding P on [1, N] is compatible with "not PR", and rules
    // out PR only if it extends; but a PR verdict from constant solutions
    // means no colouring avoids P at any N.
    std::mt19937 rng(rado::test::seed());
    int pr = 0, not_pr = 0;
    for (int iter = 0; iter < 60; ++iter) {
        const auto p = rado::test::random_polynomial(rng, 2 + iter % 2, 2, 3, 3);
        if (p.is_zero() || p.arity() == 0) continue;
        const auto v = analyze(p, small_config());
        const auto found = find_avoiding_coloring(p, 2, 6);
        if (v.outcome == Outcome::PartitionRegular) {
            ++pr;
            if (!v.routes.empty() && v.routes.front() == Route::ConstantSolutions) CHECK_FALSE(found.coloring);
        }
        if (v.outcome == Outcome::NotPartitionRegular) {
            ++not_pr;
            CHECK((v.minimal_definitive.value_or(false) ||
                   std::find(v.routes.begin(), v.routes.end(), Route::MaximalDefinitive) != v.routes.end() ||
                   std::find(v.routes.begin(), v.routes.end(), Route::FamilyClassifier) != v.routes.end()));
        }
    }
    CHECK(pr + not_pr > 0);
}

TEST_CASE("CLI reports match the library") {
    for (const char* text : {"x+y-3z", "x+y-z", "x-y", "x^2-x*y+z", "x^2+y^2-3z^2", "x*y-z^3"}) {
        const auto p = P(text);
        const auto v = analyze(p);
        std::ostringstream out, err;
        const int code = cli::run({"analyze", text, "--json"}, out, err);
        const auto j = Json::parse(out.str());
        CHECK(j["result"]["verdict"]["outcome"] == to_string(v.outcome));
        CHECK(j["input"]["polynomial"] == to_string(p));
        CHECK(code == (v.outcome == Outcome::Inconclusive ? cli::kExitInconclusive : cli::kExitOk));
    }
}

TEST_CASE("kernels agree with the enumeration layer") {
    std::mt19937 rng(rado::test::seed() + 7);
    for (int iter = 0; iter < 25; ++iter) {
        const auto p = rado::test::random_polynomial(rng, 3, 2, 4, 4);
        if (p.is_zero()) continue;
        const auto serial = kernels::solutions_serial(p, 12);
        CHECK(serial == kernels::solutions_parallel(p, 12));
        const auto sols = enumerate_solutions(p, 12);
        REQUIRE(sols.size() == serial.size());
        for (std::size_t i = 0; i < sols.size(); ++i) CHECK(sols[i].assignment == serial[i]);

        const auto colors = Coloring::residue(3).table(12);
        const auto a = kernels::first_monochromatic_serial(p, 12, colors, false);
        CHECK(a == kernels::first_monochromatic_parallel(p, 12, colors, false));
        const auto check = check_coloring_avoids(p, Coloring::residue(3), 12);
        CHECK(check.avoids == !a.has_value());
        if (a) CHECK(check.violation->assignment == *a);
    }
}

TEST_CASE("reduction pipeline from text to certificate") {
    // Parse, refute by analysis, then exhibit the avoiding colouring.
    const auto p = P("x^2 + y^2 - 3*z^2");
    CHECK(analyze(p).outcome == Outcome::NotPartitionRegular);
    const auto rule = cli::parse_coloring_rule("square(lnd:5)");
    CHECK(check_coloring_avoids(p, rule, 200).avoids);
    std::ostringstream out, err;
    CHECK(cli::run({"check-coloring", "x^2+y^2-3z^2", "--coloring", "square(lnd:5)", "--bound", "200", "--json"}, out,
                   err) == cli::kExitOk);
    CHECK(Json::parse(out.str())["result"]["avoids"] == true);
}

TEST_CASE("certified functionals agree between the library and the CLI") {
    const auto v = analyze(P("x + y - z"));
    CHECK_FALSE(v.certified.empty());
    for (const auto& c : v.certified) {
        REQUIRE(c.certificate);
        CHECK(necessary_filter(c).pass);
    }

    const auto p = P("x*y^2 + y*z + w");
    std::size_t expected = 0;
    for (auto kind : {FunctionalKind::Lower, FunctionalKind::Upper})
        for (auto c : surviving_candidates(p, kind, 6))
            if (brauer_certificate(c, 4, -4, 4)) ++expected;
    std::ostringstream out, err;
    REQUIRE(cli::run({"functionals", "x*y^2+y*z+w", "--kind", "both", "--json"}, out, err) == cli::kExitOk);
    const auto j = Json::parse(out.str());
    CHECK(j["result"]["certified_count"] == expected);
    CHECK(expected > 0);
}
