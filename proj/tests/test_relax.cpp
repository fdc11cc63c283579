#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "combip/relax.hpp"
#include "test_util.hpp"

using namespace combip;

TEST_CASE("one variable relaxation") {
    IlpModel m;
    m.add_binary_var("x");
    m.set_objective_coeff(0, 1);
    m.add_constraint({{0, 1}}, Cmp::LE, 1);
    const auto out = solve_relaxation(m, {});
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.objective == doctest::Approx(1.0));
    CHECK(out.max_violation <= 1e-7);
}

TEST_CASE("sperner n=2 relaxation is two") {
    const IlpModel m = testutil::sperner_model(2);
    const auto out = solve_relaxation(m, {});
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.objective == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("conflicting fixings are infeasible") {
    IlpModel m;
    m.add_binary_var("x");
    m.add_binary_var("y");
    m.set_objective_coeff(0, 1);
    m.set_objective_coeff(1, 1);
    m.add_constraint({{0, 1}, {1, 1}}, Cmp::LE, 1);
    const auto out = solve_relaxation(m, {{0, 1}, {1, 1}});
    CHECK(out.status == LpStatus::Infeasible);
    CHECK_THROWS_AS(solve_relaxation(m, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(solve_relaxation(m, {{5, 1}}), std::invalid_argument);
}

TEST_CASE("fixings are honored exactly") {
    std::mt19937 rng(777);
    for (int round = 0; round < 100; ++round) {
        const IlpModel m = testutil::random_model(rng, 8, 10);
        Fixings fix;
        for (int j = 0; j < m.var_count(); ++j)
            if (rng() % 3 == 0) fix[j] = static_cast<int>(rng() % 2);
        const auto out = solve_relaxation(m, fix);
        if (out.status != LpStatus::Optimal) continue;
        for (auto [v, val] : fix) CHECK(out.primal[v] == static_cast<double>(val));
        CHECK(out.max_violation <= 1e-7);
        for (double xv : out.primal) {
            CHECK(xv >= -1e-9);
            CHECK(xv <= 1 + 1e-9);
        }
    }
}

TEST_CASE("bound validity against exhaustive search") {
    std::mt19937 rng(20240601);
    int optimal_seen = 0;
    for (int round = 0; round < 1000; ++round) {
        const IlpModel m = testutil::random_model(rng, 9, 12);
        const auto lp = solve_relaxation(m, {});
        const auto best = testutil::brute_force_best(m);
        if (lp.status == LpStatus::Infeasible) {
            CHECK_FALSE(best.has_value());  // LP infeasible implies IP infeasible
            continue;
        }
        REQUIRE(lp.status == LpStatus::Optimal);
        ++optimal_seen;
        if (!best) continue;
        if (m.sense() == Sense::Maximize)
            CHECK(lp.objective >= static_cast<double>(*best) - 1e-6);
        else
            CHECK(lp.objective <= static_cast<double>(*best) + 1e-6);
    }
    CHECK(optimal_seen > 500);  // the generator must exercise the solver
}

TEST_CASE("adding a fixing never improves the bound") {
    std::mt19937 rng(1812);
    for (int round = 0; round < 200; ++round) {
        const IlpModel m = testutil::random_model(rng, 8, 10);
        if (m.var_count() < 1) continue;
        const auto base = solve_relaxation(m, {});
        if (base.status != LpStatus::Optimal) continue;
        Fixings fix;
        fix[static_cast<int>(rng() % m.var_count())] = static_cast<int>(rng() % 2);
        const auto fixed = solve_relaxation(m, fix);
        if (fixed.status != LpStatus::Optimal) continue;
        if (m.sense() == Sense::Maximize)
            CHECK(fixed.objective <= base.objective + 1e-6);
        else
            CHECK(fixed.objective >= base.objective - 1e-6);
    }
}

TEST_CASE("row generation handles covering rows") {
    // min sum x with >=1 rows only activates what it needs.
    IlpModel m(Sense::Minimize);
    for (int i = 0; i < 6; ++i) {
        m.add_binary_var("x" + std::to_string(i));
        m.set_objective_coeff(i, 1);
    }
    for (int i = 0; i < 6; ++i)
        m.add_constraint({{i, 1}, {(i + 1) % 6, 1}}, Cmp::GE, 1);
    const auto out = solve_relaxation(m, {});
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.objective == doctest::Approx(3.0).epsilon(1e-6));
}
