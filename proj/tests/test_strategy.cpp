#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "cycdl/errors.hpp"
#include "cycdl/strategy.hpp"

using namespace cycdl;

namespace {

// Exhaustive minimum of C(n) over all full binary strategy trees.
std::int64_t brute_cost(unsigned n, std::int64_t p, std::int64_t q) {
    if (n == 1) return 0;
    std::int64_t best = -1;
    for (unsigned i = 1; i < n; ++i) {
        std::int64_t c = brute_cost(i, p, q) + brute_cost(n - i, p, q) +
                         static_cast<std::int64_t>(n - i) * p + static_cast<std::int64_t>(i) * q;
        if (best < 0 || c < best) best = c;
    }
    return best;
}

}  // namespace

TEST_CASE("degenerate and tiny strategies") {
    StrategyWeights w{10, 10};
    StrategyResult r1 = optimal_strategy(1, w);
    CHECK(r1.cost_tenths == 0);
    CHECK(r1.strategy.splits.empty());
    CHECK(strategy_cost(r1.strategy, w) == 0);

    StrategyResult r2 = optimal_strategy(2, w);  // single split: p + q
    CHECK(r2.cost_tenths == 20);
    CHECK(r2.strategy.splits.size() == 1);
    CHECK(strategy_cost(r2.strategy, w) == 20);

    CHECK_THROWS_AS(optimal_strategy(0, w), ParamError);
    CHECK_THROWS_AS(optimal_strategy(3, StrategyWeights{0, 10}), ParamError);
}

TEST_CASE("DP equals exhaustive enumeration for n <= 8 over the weight grid") {
    const std::int64_t grid[] = {10, 16, 28, 30, 64};
    for (unsigned n = 1; n <= 8; ++n) {
        for (std::int64_t p : grid) {
            for (std::int64_t q : grid) {
                StrategyResult r = optimal_strategy(n, StrategyWeights{p, q});
                CHECK(r.cost_tenths == brute_cost(n, p, q));
                CHECK(strategy_cost(r.strategy, StrategyWeights{p, q}) == r.cost_tenths);
            }
        }
    }
}

TEST_CASE("replay validates structure and counts edges") {
    StrategyWeights w{16, 30};
    StrategyResult r = optimal_strategy(12, w);
    CHECK(r.strategy.splits.size() == 11);  // full tree: n-1 split vertices
    EdgeCounts e = strategy_edges(r.strategy);
    CHECK(static_cast<std::int64_t>(e.left) * w.left_tenths +
              static_cast<std::int64_t>(e.right) * w.right_tenths ==
          r.cost_tenths);

    Strategy bad = r.strategy;
    bad.splits.push_back(1);
    CHECK_THROWS_AS(strategy_cost(bad, w), ValidationError);
    bad = r.strategy;
    bad.splits.pop_back();
    CHECK_THROWS_AS(strategy_cost(bad, w), ValidationError);
    bad = r.strategy;
    bad.splits[0] = 12;  // walk >= subtree size
    CHECK_THROWS_AS(strategy_cost(bad, w), ValidationError);
}

TEST_CASE("monotonicity and scale equivariance") {
    StrategyWeights w{28, 30};
    std::int64_t prev = 0;
    for (unsigned n = 1; n <= 60; ++n) {
        StrategyResult r = optimal_strategy(n, w);
        CHECK(r.cost_tenths >= prev);
        prev = r.cost_tenths;
    }
    for (unsigned n : {5u, 17u, 45u}) {
        StrategyResult a = optimal_strategy(n, StrategyWeights{16, 30});
        StrategyResult b = optimal_strategy(n, StrategyWeights{48, 90});  // lambda = 3
        CHECK(b.cost_tenths == 3 * a.cost_tenths);
        CHECK(a.strategy.splits == b.strategy.splits);
    }
}

TEST_CASE("default weights follow the cyclotomic op costs") {
    Modulus mod = named_modulus("SIKEp434");
    ParamSet p2 = make_params(mod, 2, 4);
    CHECK(default_weights(p2).left_tenths == 4 * 16);  // w squarings at 1.6m
    CHECK(default_weights(p2).right_tenths == 30);     // one F_{p^2} mul
    ParamSet p3 = make_params(mod, 3, 3);
    CHECK(default_weights(p3).left_tenths == 3 * 28);  // w cubings at 2.8m
    CHECK(default_weights(p3).right_tenths == 30);
}

TEST_CASE("DP at n = 239 is fast and self-consistent") {
    auto t0 = std::chrono::steady_clock::now();
    StrategyResult r = optimal_strategy(239, StrategyWeights{28, 30});
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    CHECK(ms < 100);
    CHECK(r.strategy.splits.size() == 238);
    CHECK(strategy_cost(r.strategy, StrategyWeights{28, 30}) == r.cost_tenths);
}
