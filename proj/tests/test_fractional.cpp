#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "locex/fractional.hpp"
#include "locex/generate.hpp"
#include "locex/oracle.hpp"

using namespace locex;
using namespace locex::testing;

TEST_CASE("lambda_of convention: -W/n") {
    Graph g = b6();
    CHECK(lambda_of(g, 1.0, CommunityState::from_members(6, {0, 1, 2})) ==
          doctest::Approx(-5.0 / 6.0));
    CHECK(lambda_of(g, 1.0,
                    CommunityState::from_members(6, {0, 1, 2, 3, 4, 5})) ==
          doctest::Approx(0.0));
    CHECK(lambda_of(g, 0.8, CommunityState::from_members(6, {0, 1})) ==
          doctest::Approx(-0.8 / 6.0));
    CHECK_THROWS_AS(lambda_of(g, 1.0, CommunityState(6)),
                    std::invalid_argument);
}

TEST_CASE("qfp_solve finds the B6 optimum from the triangle seed") {
    Graph g = b6();
    QfpResult res = qfp_solve(g, 1.0, CommunityState::from_members(6, {0, 1, 2}));
    CHECK(res.converged);
    CHECK(res.state == CommunityState::from_members(6, {0, 1, 2}));
    CHECK(res.objective == doctest::Approx(5.0));
    CHECK(res.lambda_star == doctest::Approx(-5.0 / 6.0));
}

TEST_CASE("qfp_solve rejects the trivial initial state") {
    Graph g = b6();
    CHECK_THROWS_AS(qfp_solve(g, 1.0, CommunityState(6)),
                    std::invalid_argument);
}

TEST_CASE("immediate convergence when V is already optimal") {
    // Triangle: W(V) = 0 is the global optimum, every proper subset is
    // negative, so starting from V terminates at the first stop test.
    Graph g = triangle();
    QfpResult res = qfp_solve(g, 1.0, CommunityState::from_members(3, {0, 1, 2}));
    CHECK(res.converged);
    CHECK(res.outer_iterations == 1);
    CHECK(res.objective == doctest::Approx(0.0));
}

TEST_CASE("result invariants over random restarts") {
    std::mt19937_64 rng(777);
    for (int rep = 0; rep < 200; ++rep) {
        Graph g = random_graph(10, 0.3, rng);
        CommunityState x0 = random_subset(10, rng, true);
        QfpResult res = qfp_solve(g, 1.0, x0);
        if (res.failed) continue;
        // lambda_star = -objective/n
        CHECK(res.lambda_star ==
              doctest::Approx(-res.objective / 10.0).epsilon(1e-9));
        // objective recomputed by the objective module agrees
        CHECK(res.objective ==
              doctest::Approx(eval_W_rho(g, res.state, 1.0)).epsilon(1e-12));
        // trajectory strictly decreasing
        for (std::size_t i = 1; i < res.trajectory.size(); ++i)
            CHECK(res.trajectory[i] < res.trajectory[i - 1]);
        // exit consistency when converged
        if (res.converged) {
            auto op = HopfieldOperator::resolution(g, 1.0, res.lambda_star);
            const double b = -op.quadratic_form(res.state);
            const double a = res.state.size();
            CHECK(std::fabs(b - res.lambda_star * a) <=
                  1e-9 * std::max(1.0, std::fabs(b)));
        }
    }
}

TEST_CASE("multistart never beats the oracle and usually matches it") {
    std::mt19937_64 rng(31337);
    int matched = 0;
    const int instances = 20;
    for (int inst = 0; inst < instances; ++inst) {
        Graph g = gnm_random(10, 15, rng());
        OracleResult oracle = brute_force_best(g, {ObjectiveKind::W, 1.0});
        double best = -1e300;
        for (int t = 0; t < 500; ++t) {
            CommunityState x0 = random_subset(g.node_count(), rng, true);
            QfpResult res = qfp_solve(g, 1.0, x0);
            if (!res.failed) best = std::max(best, res.objective);
        }
        CHECK(best <= oracle.best_value + 1e-9);
        if (best >= oracle.best_value - 1e-9) ++matched;
    }
    CHECK(matched >= static_cast<int>(0.9 * instances));
}
