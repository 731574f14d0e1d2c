#pragma once

#include "cycdl/dlog.hpp"

namespace cycdl {

// Residue arithmetic mod ell^{e_ell} for exponents and transmitted values.
// These bump the zmod_* counters so tests can verify the compression
// pipeline performs no inversion or multiplication there.
namespace zmod {
bigint mul(const bigint& a, const bigint& b, const bigint& order);
bigint inv(const bigint& a, const bigint& order);
bigint neg(const bigint& a, const bigint& order);
bigint reduce(const bigint& a, const bigint& order);
}  // namespace zmod

// The basis-change matrix relating the deterministic torsion basis to the
// pushed-forward one; invertible mod ell^{e_ell}.
struct CompressionMatrix {
    bigint c0, d0, c1, d1;
};

// Pairing values r0..r4 with the exponent relations
// r1 = r0^{d0}, r2 = r0^{d1}, r3 = r0^{-c0}, r4 = r0^{-c1}.
struct PairingTuple {
    Cyc r0, r1, r2, r3, r4;
};

// The transmitted triple plus the base-choice flag.
// flag=0: (t0,t1,t2) = (-d1^{-1}d0, -d1^{-1}c1, d1^{-1}c0);
// flag=1: (-d0^{-1}d1, d0^{-1}c1, -d0^{-1}c0).
struct CompressedKey {
    bigint t0, t1, t2;
    unsigned flag = 0;
};

// Per-phase tallies of one compression run.
struct CompressPhases {
    OpCounter base_choice;
    OpCounter table_build;
    OpCounter dlogs;
    OpCounter total() const {
        OpCounter t = base_choice;
        t += table_build;
        t += dlogs;
        return t;
    }
};

// Test oracle standing in for pairing computation: samples r0 of exact
// order and raises it to the matrix exponents. Deterministic per seed.
PairingTuple synth_pairing_tuple(const ParamSet& params, const CompressionMatrix& matrix,
                                 std::uint64_t seed);

// The three-discrete-log pipeline: choose_base over (r1, r2), one runtime
// table, three Pohlig-Hellman logs, and a sign-only assembly of the
// transmitted triple. Performs no inversion and no multiplication in
// Z_{ell^{e_ell}}.
CompressedKey compress_from_pairings(const PairingTuple& tuple, const ParamSet& params,
                                     CompressPhases* phases = nullptr);

}  // namespace cycdl
