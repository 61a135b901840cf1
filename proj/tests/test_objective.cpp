#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "locex/objective.hpp"

using namespace locex;
using namespace locex::testing;

namespace {

CommunityState members(const Graph& g, std::initializer_list<int> nodes) {
    return CommunityState::from_members(g.node_count(), nodes);
}

}  // namespace

TEST_CASE("eval_Q on B6") {
    Graph g = b6();
    CHECK(eval_Q(g, members(g, {0, 1, 2, 3, 4, 5})) == doctest::Approx(0.0));
    CHECK(eval_Q(g, CommunityState(6)) == doctest::Approx(0.0));
    CHECK(eval_Q(g, members(g, {0, 1, 2})) == doctest::Approx(5.0 / 28.0));
}

TEST_CASE("eval_W_rho on B6") {
    Graph g = b6();
    CHECK(eval_W_rho(g, members(g, {0, 1, 2}), 1.0) == doctest::Approx(5.0));
    CHECK(eval_W_rho(g, members(g, {0, 1}), 0.8) == doctest::Approx(0.8));
    CHECK_THROWS_AS(eval_W_rho(g, CommunityState(6), 1.0),
                    std::invalid_argument);
}

TEST_CASE("quadratic identity on B6") {
    Graph g = b6();
    CHECK(quadratic_identity_Q(g, members(g, {0, 1, 2})) ==
          doctest::Approx(5.0 / 28.0).epsilon(1e-9));
    CHECK(quadratic_identity_Q(g, CommunityState(6)) == doctest::Approx(0.0));
    CHECK(quadratic_identity_Q(g, members(g, {0, 1, 2, 3, 4, 5})) ==
          doctest::Approx(0.0));
}

TEST_CASE("fractional identity on B6") {
    Graph g = b6();
    CHECK(fractional_identity_W(g, members(g, {0, 1, 2}), 1.0) ==
          doctest::Approx(5.0).epsilon(1e-9));
    CHECK(fractional_identity_W(g, members(g, {0, 1}), 0.8) ==
          doctest::Approx(0.8).epsilon(1e-9));
    CHECK(fractional_identity_W(g, members(g, {0, 1, 2, 3, 4, 5}), 1.0) ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(fractional_identity_W(g, CommunityState(6), 1.0),
                    std::invalid_argument);
}

TEST_CASE("identity properties over random instances") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> rho_dist(0.05, 1.0);
    for (int rep = 0; rep < 1000; ++rep) {
        Graph g = random_graph(4 + static_cast<int>(rng() % 7), 0.4, rng);
        CommunityState s = random_subset(g.node_count(), rng, true);
        const double rho = rho_dist(rng);
        CHECK(quadratic_identity_Q(g, s) ==
              doctest::Approx(direct_Q(g, s)).epsilon(1e-9));
        CHECK(fractional_identity_W(g, s, rho) ==
              doctest::Approx(direct_W_rho(g, s, rho)).epsilon(1e-9));
        CHECK(eval_Q(g, s) == doctest::Approx(direct_Q(g, s)).epsilon(1e-12));
        CHECK(eval_W_rho(g, s, rho) ==
              doctest::Approx(direct_W_rho(g, s, rho)).epsilon(1e-12));
    }
}

TEST_CASE("reduction at rho = 2|S|/n") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = random_graph(8, 0.4, rng);
        CommunityState s = random_subset(8, rng, true);
        if (s.size() > 4) continue;  // keep rho <= 1
        const double rho = 2.0 * s.size() / 8.0;
        const auto [os, bs] = subset_weights(g, s);
        CHECK(eval_W_rho(g, s, rho) ==
              doctest::Approx(os - bs).epsilon(1e-9));
    }
}

TEST_CASE("operator matches dense matrix on small graphs") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> rho_dist(0.1, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.5, rng);
        for (ObjectiveKind kind : {ObjectiveKind::Q, ObjectiveKind::WRho}) {
            const double rho = kind == ObjectiveKind::Q ? 1.0 : rho_dist(rng);
            auto op = kind == ObjectiveKind::Q
                          ? HopfieldOperator::modularity(g)
                          : HopfieldOperator::resolution(g, rho, 0.0);
            auto m = dense_matrix(g, kind, rho);
            std::uniform_real_distribution<double> val(-2.0, 2.0);
            std::vector<double> x(n), got(n);
            for (int i = 0; i < n; ++i) x[i] = val(rng);
            op.apply(x, got);
            for (int i = 0; i < n; ++i) {
                double want = 0.0;
                for (int j = 0; j < n; ++j) want += m[i][j] * x[j];
                CHECK(got[i] == doctest::Approx(want).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("operator spot values on B6") {
    Graph g = b6();
    std::vector<double> x{1, 1, 1, 0, 0, 0}, out(6);
    SUBCASE("W operator, rho=1") {
        auto op = HopfieldOperator::resolution(g, 1.0, 0.0);
        op.apply(x, out);
        CHECK(out[0] == doctest::Approx(11.0 / 12.0));
    }
    SUBCASE("Q operator") {
        auto op = HopfieldOperator::modularity(g);
        op.apply(x, out);
        CHECK(out[3] == doctest::Approx(-0.5));
    }
    SUBCASE("zero maps to zero") {
        std::vector<double> zero(6, 0.0);
        auto op = HopfieldOperator::resolution(g, 0.7, 0.0);
        op.apply(zero, out);
        for (double v : out) CHECK(v == doctest::Approx(0.0));
    }
}

TEST_CASE("W operator is symmetric as a bilinear form") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = random_graph(9, 0.4, rng);
        const double t = val(rng);
        auto op = HopfieldOperator::resolution(g, 0.3 + 0.7 * t * t, 0.0);
        std::vector<double> x(9), y(9), mx(9), my(9);
        for (int i = 0; i < 9; ++i) {
            x[i] = val(rng);
            y[i] = val(rng);
        }
        op.apply(x, mx);
        op.apply(y, my);
        double xmy = 0.0, ymx = 0.0;
        for (int i = 0; i < 9; ++i) {
            xmy += x[i] * my[i];
            ymx += y[i] * mx[i];
        }
        CHECK(xmy == doctest::Approx(ymx).epsilon(1e-9));
    }
}
