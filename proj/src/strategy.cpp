#include "cycdl/strategy.hpp"

#include "cycdl/errors.hpp"

namespace cycdl {

StrategyWeights default_weights(const ParamSet& params) {
    std::int64_t per_ell = (params.ell == 2) ? 16 : 28;  // 2s = 1.6m, 1s+2m = 2.8m
    return StrategyWeights{static_cast<std::int64_t>(params.w) * per_ell, 30};
}

namespace {

void linearize(unsigned z, const std::vector<unsigned>& left_leaves,
               std::vector<unsigned>& out) {
    if (z <= 1) return;
    unsigned t = left_leaves[z];
    out.push_back(z - t);  // left edges to the next split vertex
    linearize(t, left_leaves, out);
    linearize(z - t, left_leaves, out);
}

// Replays splits in consumption order, counting edges and leaves.
void replay(unsigned z, const Strategy& s, std::size_t& idx, EdgeCounts& e, unsigned& leaves) {
    if (z == 1) {
        ++leaves;
        return;
    }
    if (idx >= s.splits.size()) throw ValidationError("strategy splits exhausted early");
    unsigned walk = s.splits[idx++];
    if (walk == 0 || walk >= z) throw ValidationError("strategy split out of range");
    unsigned t = z - walk;  // leaves in the subtree after the left walk
    e.left += walk;
    replay(t, s, idx, e, leaves);
    e.right += t;  // t right-edge traversals cancel the t recovered digits
    replay(walk, s, idx, e, leaves);
}

EdgeCounts replay_checked(const Strategy& s) {
    if (s.n_leaves == 0) throw ValidationError("strategy has no leaves");
    EdgeCounts e;
    unsigned leaves = 0;
    std::size_t idx = 0;
    replay(s.n_leaves, s, idx, e, leaves);
    if (idx != s.splits.size()) throw ValidationError("strategy has trailing splits");
    if (leaves != s.n_leaves) throw ValidationError("strategy leaf count mismatch");
    return e;
}

}  // namespace

StrategyResult optimal_strategy(unsigned n, const StrategyWeights& weights) {
    if (n == 0) throw ParamError("strategy needs at least one leaf");
    if (weights.left_tenths <= 0 || weights.right_tenths <= 0)
        throw ParamError("strategy weights must be positive");
    std::vector<std::int64_t> cost(n + 1, 0);
    std::vector<unsigned> left(n + 1, 0);
    for (unsigned z = 2; z <= n; ++z) {
        std::int64_t best = -1;
        unsigned best_i = 0;
        for (unsigned i = 1; i < z; ++i) {
            std::int64_t c = cost[i] + cost[z - i] +
                             static_cast<std::int64_t>(z - i) * weights.left_tenths +
                             static_cast<std::int64_t>(i) * weights.right_tenths;
            if (best < 0 || c < best) {
                best = c;
                best_i = i;
            }
        }
        cost[z] = best;
        left[z] = best_i;
    }
    StrategyResult res;
    res.strategy.n_leaves = n;
    res.strategy.left_leaves_by_size = left;
    linearize(n, left, res.strategy.splits);
    res.cost_tenths = cost[n];
    return res;
}

std::int64_t strategy_cost(const Strategy& strategy, const StrategyWeights& weights) {
    EdgeCounts e = replay_checked(strategy);
    return static_cast<std::int64_t>(e.left) * weights.left_tenths +
           static_cast<std::int64_t>(e.right) * weights.right_tenths;
}

EdgeCounts strategy_edges(const Strategy& strategy) { return replay_checked(strategy); }

}  // namespace cycdl
