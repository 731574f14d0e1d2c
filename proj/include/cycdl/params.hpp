#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "cycdl/fp2.hpp"

namespace cycdl {

// Prime p = 2^{e2} * 3^{e3} - 1 together with its field context.
struct Modulus {
    std::string name;
    bigint p;
    unsigned e2 = 0;
    unsigned e3 = 0;
    unsigned bit_length = 0;
    std::shared_ptr<const FpContext> fp;
};

// A run target: which cyclotomic subgroup mu_{ell^{e_ell}} and base power w.
struct ParamSet {
    Modulus mod;
    unsigned ell = 0;    // 2 or 3
    unsigned e_ell = 0;  // e2 or e3 of the modulus
    unsigned w = 0;      // window; L = ell^w

    std::uint64_t radix() const;         // L = ell^w, fits a machine word (w <= 6)
    unsigned shift() const { return e_ell % w; }             // m
    unsigned digit_rows() const { return e_ell / w; }        // floor(e_ell / w)
    bigint subgroup_order() const;                          // ell^{e_ell}
    const FpContext& field() const { return *mod.fp; }
};

// Miller-Rabin: deterministic base set below 2^64, 64 pseudorandom rounds above.
bool is_probable_prime(const bigint& n);

// Builds and primality-checks p = 2^{e2} * 3^{e3} - 1.
Modulus make_toy(unsigned e2, unsigned e3);

// Named sets: SIKEp434/503/610/751, the toy preset "p431", or an inline
// toy spec of the form "2^a*3^b-1".
Modulus named_modulus(const std::string& name);

// Binds a modulus to a subgroup and window. Default w: 3 for ell=3, 4 for
// ell=2, capped at e_ell.
ParamSet make_params(const Modulus& mod, unsigned ell, std::optional<unsigned> w = std::nullopt);

// Deterministically samples an element of exact order ell^{e_ell}:
// random z in F_{p^2}*, mapped into mu_{p+1} via z^{p-1}, raised to the
// cofactor (p+1)/ell^{e_ell}, retried until the ell^{e_ell-1} power is not 1.
Cyc sample_mu_generator(const ParamSet& params, std::uint64_t seed);

}  // namespace cycdl
