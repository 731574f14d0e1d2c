#include "cycdl/dlog.hpp"

#include <cstdlib>

#include "cycdl/errors.hpp"

namespace cycdl {

namespace {

std::int64_t max_digit(std::uint64_t L) { return static_cast<std::int64_t>(L / 2); }

// Right-edge step element for a recovered digit: base^{-d * L^row * ell^m}.
// A zero digit steps by the identity so that every right edge costs the
// same one multiplication the strategy weights assume.
Cyc cancel_step(const DlogTable& table, unsigned row, std::int64_t d, const ParamSet& params) {
    if (d == 0) return cyc_one(params.field());
    const auto& cell = table.rows.at(row).at(static_cast<std::size_t>(std::llabs(d)) - 1);
    return d > 0 ? cyc_conj_inv(cell) : cell;
}

std::uint64_t pow_u64(unsigned base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

// Shared tail for both engines: recover the extra digit hidden by the
// ell^m shift. low = base^{sum of the traversal digits}; h * conj(low)
// lands in <base^{ell^{e-m}}>, whose logarithms to B'[0] are ell^{w-m}
// times the digit.
void recover_shift_digit(SignedDigitArray& out, const Cyc& h, const DlogTable& table,
                         const BaseSelection& sel, const ParamSet& params) {
    const unsigned m = params.shift();
    if (m == 0) return;
    std::span<const std::int64_t> traversal(out.digits.data(), params.digit_rows());
    Cyc low = fast_power(traversal, sel.power_cache, params);
    Cyc rem = cyc_mul(h, cyc_conj_inv(low));
    std::int64_t d = small_dlp(rem, table.rows.back(), params);
    const std::int64_t div = static_cast<std::int64_t>(pow_u64(params.ell, params.w - m));
    if (d % div != 0)
        throw ConsistencyError("shift digit not divisible by ell^(w-m); table and challenge disagree");
    out.digits.back() = d / div;
}

}  // namespace

std::int64_t small_dlp(const Cyc& h, std::span<const Cyc> last_row, const ParamSet& params) {
    if (cyc_is_one(h)) return 0;
    for (std::size_t x = 0; x < last_row.size(); ++x) {
        if (cyc_eq(h, last_row[x])) return static_cast<std::int64_t>(x) + 1;
        if (cyc_eq(h, cyc_conj_inv(last_row[x]))) return -(static_cast<std::int64_t>(x) + 1);
    }
    throw NotInSubgroupError("challenge not in the order-" + std::to_string(params.radix()) +
                             " subgroup");
}

Cyc fast_power(std::span<const std::int64_t> digits, std::span<const Cyc> power_cache,
               const ParamSet& params) {
    Cyc h = cyc_one(params.field());
    for (std::size_t k = 0; k < digits.size(); ++k) {
        std::uint64_t t = static_cast<std::uint64_t>(std::llabs(digits[k]));
        const bool negative = digits[k] < 0;
        std::size_t i2 = static_cast<std::size_t>(params.w) * k;
        while (t > 0) {
            if (i2 >= power_cache.size()) throw ParamError("power cache too short for fast_power");
            const std::uint64_t r = t % params.ell;
            if (r == 1) {
                h = cyc_mul(h, negative ? cyc_conj_inv(power_cache[i2]) : power_cache[i2]);
            } else if (r == 2) {
                Cyc sq = cyc_sqr(power_cache[i2]);
                h = cyc_mul(h, negative ? cyc_conj_inv(sq) : sq);
            }
            ++i2;
            t /= params.ell;
        }
    }
    return h;
}

SignedDigitArray ph_dlp(const Cyc& h, const Strategy& strategy, const DlogTable& table,
                        const BaseSelection& sel, const ParamSet& params) {
    const unsigned n = params.digit_rows();
    const unsigned m = params.shift();
    if (strategy.n_leaves != n) throw ParamError("strategy leaf count does not match params");
    if (table.rows.size() != n) throw ParamError("table row count does not match params");

    SignedDigitArray out;
    out.radix = params.radix();
    out.shift = m;
    out.digits.assign(n + (m ? 1 : 0), 0);

    struct Entry {
        Cyc h;
        unsigned depth;  // j coordinate; cancellation row is depth + k
        unsigned walk;   // left edges taken to reach this vertex
    };
    std::vector<Entry> stack;
    stack.push_back({cyc_pow_ell(h, params.ell, m), 0, 0});

    std::size_t next_split = 0;
    for (unsigned k = 0; k < n; ++k) {
        while (stack.back().depth + k < n - 1) {
            if (next_split >= strategy.splits.size())
                throw ValidationError("strategy splits exhausted during traversal");
            const unsigned s = strategy.splits[next_split++];
            const Entry& top = stack.back();
            Cyc v = cyc_pow_ell(top.h, params.ell, params.w * s);
            stack.push_back({v, top.depth + s, s});
        }
        Entry leaf = stack.back();
        stack.pop_back();
        const std::int64_t d = small_dlp(leaf.h, table.rows.back(), params);
        out.digits[k] = d;
        for (Entry& entry : stack)
            entry.h = cyc_mul(entry.h, cancel_step(table, entry.depth + k, d, params));
    }
    if (!stack.empty()) throw ConsistencyError("traversal stack not empty after last digit");

    recover_shift_digit(out, h, table, sel, params);
    return out;
}

namespace {

void traverse(const Cyc& h, unsigned j, unsigned k, unsigned z, const Strategy& strategy,
              const DlogTable& table, const ParamSet& params, SignedDigitArray& out) {
    if (z == 1) {
        out.digits[k] = small_dlp(h, table.rows.back(), params);
        return;
    }
    const unsigned t = strategy.left_leaves_by_size.at(z);
    const unsigned walk = z - t;
    traverse(cyc_pow_ell(h, params.ell, params.w * walk), j + walk, k, t, strategy, table, params,
             out);
    Cyc right = h;
    for (unsigned l = k; l < k + t; ++l)
        right = cyc_mul(right, cancel_step(table, j + l, out.digits[l], params));
    traverse(right, j, k + t, walk, strategy, table, params, out);
}

}  // namespace

SignedDigitArray traverse_recursive(const Cyc& h, const Strategy& strategy,
                                    const DlogTable& table, const BaseSelection& sel,
                                    const ParamSet& params) {
    const unsigned n = params.digit_rows();
    const unsigned m = params.shift();
    if (strategy.n_leaves != n) throw ParamError("strategy leaf count does not match params");

    SignedDigitArray out;
    out.radix = params.radix();
    out.shift = m;
    out.digits.assign(n + (m ? 1 : 0), 0);
    traverse(cyc_pow_ell(h, params.ell, m), 0, 0, n, strategy, table, params, out);
    recover_shift_digit(out, h, table, sel, params);
    return out;
}

bigint naive_ph(const Cyc& h, const Cyc& g, const ParamSet& params) {
    const unsigned e = params.e_ell;
    const unsigned ell = params.ell;
    const Cyc s = cyc_pow_ell(g, ell, e - 1);
    bigint x = 0;
    bigint weight = 1;
    Cyc hi = h;
    for (unsigned i = 0; i < e; ++i) {
        Cyc ti = cyc_pow_ell(hi, ell, e - 1 - i);
        unsigned xi = 0;
        Cyc acc = cyc_one(params.field());
        for (; xi < ell; ++xi) {
            if (cyc_eq(ti, acc)) break;
            acc = cyc_mul(acc, s);
        }
        if (xi == ell) throw NotInSubgroupError("challenge is not a power of the base");
        if (xi != 0) {
            x += weight * xi;
            Cyc gi = cyc_pow_ell(g, ell, i);
            Cyc step = gi;
            for (unsigned c = 1; c < xi; ++c) step = cyc_mul(step, gi);
            hi = cyc_mul(hi, cyc_conj_inv(step));
        }
        weight *= ell;
    }
    return x;
}

bigint digits_to_integer(const SignedDigitArray& d, const ParamSet& params) {
    const unsigned n = params.digit_rows();
    const unsigned m = params.shift();
    if (d.digits.size() != n + (m ? 1 : 0)) throw ValidationError("digit array has wrong length");
    const std::int64_t bound = max_digit(params.radix());
    const bigint order = params.subgroup_order();

    bigint value = 0;
    bigint weight = 1;
    for (unsigned k = 0; k < n; ++k) {
        if (std::llabs(d.digits[k]) > bound) throw ValidationError("digit out of range");
        value += weight * d.digits[k];
        weight *= static_cast<long long>(params.radix());
    }
    if (m) {
        const std::int64_t extra_bound = static_cast<std::int64_t>(pow_u64(params.ell, m)) / 2;
        if (std::llabs(d.digits[n]) > extra_bound) throw ValidationError("shift digit out of range");
        value += weight * d.digits[n];  // weight = L^n = ell^{e-m}
    }
    value %= order;
    if (value < 0) value += order;
    return value;
}

}  // namespace cycdl
