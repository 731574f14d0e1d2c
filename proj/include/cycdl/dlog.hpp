#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cycdl/strategy.hpp"
#include "cycdl/tables.hpp"

namespace cycdl {

// Signed base-L digits of a discrete logarithm, L = ell^w.
// digits[0 .. floor(e/w)-1] weigh L^k; when m = e mod w > 0 there is one
// extra digit weighing ell^{e-m} (= L^{floor(e/w)}), so the total length
// is ceil(e/w). value = sum digits[k] * weight_k mod ell^e.
struct SignedDigitArray {
    std::vector<std::int64_t> digits;
    std::uint64_t radix = 0;  // L
    unsigned shift = 0;       // m
};

// Solves h = B'[0]^d in the order-L subgroup spanned by the last table
// row B', scanning entries and their conjugates.
// Returns d in [-ceil((L-1)/2), ceil((L-1)/2)].
std::int64_t small_dlp(const Cyc& h, std::span<const Cyc> last_row, const ParamSet& params);

// C[0]^{sum digits[k] * L^k} using only cached powers C[i] = base^{ell^i}
// and their conjugates; no generic exponentiation.
Cyc fast_power(std::span<const std::int64_t> digits, std::span<const Cyc> power_cache,
               const ParamSet& params);

// Non-recursive optimal-strategy Pohlig-Hellman. Returns D with
// base^{value(D)} = h for the base that built the table/selection.
SignedDigitArray ph_dlp(const Cyc& h, const Strategy& strategy, const DlogTable& table,
                        const BaseSelection& sel, const ParamSet& params);

// Recursive reference engine; same table and strategy, same digit output.
// Kept for differential testing.
SignedDigitArray traverse_recursive(const Cyc& h, const Strategy& strategy,
                                    const DlogTable& table, const BaseSelection& sel,
                                    const ParamSet& params);

// Digit-by-digit reference solver (quadratic powering count, unsigned
// digits); returns x in [0, ell^e) with g^x = h.
bigint naive_ph(const Cyc& h, const Cyc& g, const ParamSet& params);

// Canonicalizes a signed digit array to its value in [0, ell^e).
bigint digits_to_integer(const SignedDigitArray& d, const ParamSet& params);

}  // namespace cycdl
