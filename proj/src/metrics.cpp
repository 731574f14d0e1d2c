#include "cycdl/metrics.hpp"

#include <limits>
#include <random>

#include "cycdl/errors.hpp"
#include "cycdl/tables.hpp"

namespace cycdl {

namespace {

// Deterministic per-(w, trial) stream so results do not depend on the
// order of w_set or on earlier trials.
std::mt19937_64 trial_rng(std::uint64_t seed, unsigned w, unsigned trial) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(trial)};
    return std::mt19937_64(seq);
}

bigint random_mod(std::mt19937_64& rng, const bigint& order) {
    bigint v = 0;
    const unsigned words = (msb(order) / 64) + 2;
    for (unsigned i = 0; i < words; ++i) v = (v << 64) | bigint(rng());
    return v % order;
}

CompressionMatrix random_invertible_matrix(std::mt19937_64& rng, const ParamSet& params) {
    const bigint order = params.subgroup_order();
    for (int tries = 0; tries < 256; ++tries) {
        CompressionMatrix mat{random_mod(rng, order), random_mod(rng, order),
                              random_mod(rng, order), random_mod(rng, order)};
        bigint det = (mat.c0 * mat.d1 - mat.c1 * mat.d0) % order;
        if (det % params.ell != 0) return mat;
    }
    throw RejectionError("could not sample an invertible compression matrix");
}

}  // namespace

CostReport run_cost_bench(const Modulus& mod, unsigned ell, const std::vector<unsigned>& w_set,
                          unsigned trials, std::uint64_t seed) {
    if (trials < 1) throw ParamError("trials must be at least 1");
    CostReport report;
    report.params_name = mod.name;
    report.ell = ell;
    report.trials = trials;
    report.seed = seed;

    for (unsigned w : w_set) {
        const ParamSet params = make_params(mod, ell, w);
        double sum_incl = 0.0, sum_excl = 0.0;
        for (unsigned t = 0; t < trials; ++t) {
            auto rng = trial_rng(seed, w, t);
            const CompressionMatrix mat = random_invertible_matrix(rng, params);
            // Tuple synthesis is oracle work; keep it outside any counter.
            const PairingTuple tuple = synth_pairing_tuple(params, mat, rng());
            CompressPhases phases;
            compress_from_pairings(tuple, params, &phases);
            const OpCounter total = phases.total();
            sum_incl += total.cost_m();
            sum_excl += total.cost_m() - phases.table_build.cost_m();
        }
        report.per_w[w] = sum_incl / trials;
        report.per_w_excl_table[w] = sum_excl / trials;
        report.table_kib[w] = static_cast<double>(table_bytes(params)) / 1024.0;
    }

    double best = std::numeric_limits<double>::infinity();
    for (const auto& [w, cost] : report.per_w) {
        if (cost < best) {
            best = cost;
            report.argmin_w = w;
        }
    }
    return report;
}

}  // namespace cycdl
