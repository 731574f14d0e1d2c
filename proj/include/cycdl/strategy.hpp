#pragma once

#include <cstdint>
#include <vector>

#include "cycdl/params.hpp"

namespace cycdl {

// Edge weights of the traversal graph in tenths of m, kept exact so the
// dynamic program breaks ties deterministically. left_cost is one
// ell^w-power in mu_{p+1}, right_cost one F_{p^2} multiplication.
struct StrategyWeights {
    std::int64_t left_tenths = 0;   // p
    std::int64_t right_tenths = 0;  // q
};

// Weights for a parameter set: p = w * (2s or 1s+2m), q = 1M = 3m.
StrategyWeights default_weights(const ParamSet& params);

// A linearized optimal strategy. splits holds the number of left edges
// walked at each split vertex, emitted in the left-first order the
// traversal consumes. For each subtree size z it also records the left
// subtree leaf count, which the recursive engine indexes directly.
struct Strategy {
    unsigned n_leaves = 0;
    std::vector<unsigned> splits;
    std::vector<unsigned> left_leaves_by_size;  // index z in [1, n_leaves]
};

struct StrategyResult {
    Strategy strategy;
    std::int64_t cost_tenths = 0;
};

// Dynamic program over C(n) = min_{1<=i<=n-1} { C(i) + C(n-i) + (n-i)p + iq },
// ties broken toward the smallest i.
StrategyResult optimal_strategy(unsigned n_leaves, const StrategyWeights& weights);

// Replays the linearized strategy, validating that it visits exactly
// n_leaves leaves, and returns left_edges*p + right_edges*q.
std::int64_t strategy_cost(const Strategy& strategy, const StrategyWeights& weights);

struct EdgeCounts {
    std::uint64_t left = 0;
    std::uint64_t right = 0;
};

// Edge counts of the replayed strategy (validates like strategy_cost).
EdgeCounts strategy_edges(const Strategy& strategy);

}  // namespace cycdl
