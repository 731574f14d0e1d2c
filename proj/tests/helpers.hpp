#pragma once

#include <random>
#include <vector>

#include "cycdl/compress.hpp"

namespace cycdl::testhelpers {

inline bigint random_exponent(std::mt19937_64& rng, const bigint& order) {
    bigint v = 0;
    const unsigned words = (msb(order) / 64) + 2;
    for (unsigned i = 0; i < words; ++i) v = (v << 64) | bigint(rng());
    return v % order;
}

// Naive square-and-multiply in mu using only generic fp2 operations;
// independent of the cyclotomic fast paths under test.
inline Cyc naive_pow(const Cyc& a, const bigint& e) {
    return as_cyc(fp2_pow(a.v, e));
}

// All ell^e powers of g in order g^0, g^1, ...
inline std::vector<Cyc> enumerate_subgroup(const Cyc& g, const ParamSet& params) {
    std::vector<Cyc> out;
    Cyc h = cyc_one(params.field());
    for (bigint x = 0; x < params.subgroup_order(); ++x) {
        out.push_back(h);
        h = cyc_mul(h, g);
    }
    return out;
}

struct ToyFixture {
    Modulus mod;
    ParamSet params;
    Cyc g;
    ToyFixture(unsigned ell, std::optional<unsigned> w = std::nullopt, std::uint64_t seed = 7)
        : mod(named_modulus("p431")),
          params(make_params(mod, ell, w)),
          g(sample_mu_generator(params, seed)) {}
};

}  // namespace cycdl::testhelpers
