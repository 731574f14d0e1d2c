#pragma once

#include <cstdint>

namespace cycdl {

// Tally of field operations performed inside a counting scope.
//
// m/s are F_p multiplications and squarings; M/S are the F_{p^2} level
// operations they decompose into (one generic F_{p^2} multiplication adds
// {M:1, m:3}, one generic squaring {S:1, m:2}). Cyclotomic squaring and
// cubing are counted only at the base level ({s:2} and {s:1, m:2}).
// zmod_* track arithmetic in Z_{ell^e} during compression assembly.
struct OpCounter {
    std::uint64_t m = 0;
    std::uint64_t s = 0;
    std::uint64_t M = 0;
    std::uint64_t S = 0;
    std::uint64_t zmod_inv = 0;
    std::uint64_t zmod_mul = 0;

    // m-equivalent cost in tenths of m (weights m=1, s=0.8; M and S are
    // informational since their base decomposition is already in m).
    std::uint64_t cost_tenths() const { return 10 * m + 8 * s; }
    double cost_m() const { return static_cast<double>(cost_tenths()) / 10.0; }

    OpCounter& operator+=(const OpCounter& o) {
        m += o.m;
        s += o.s;
        M += o.M;
        S += o.S;
        zmod_inv += o.zmod_inv;
        zmod_mul += o.zmod_mul;
        return *this;
    }
    bool operator==(const OpCounter&) const = default;
};

namespace detail {
OpCounter*& tl_counter();
}

inline OpCounter* current_counter() { return detail::tl_counter(); }

// RAII scope that routes counting to a given counter on this thread.
// Scopes nest; each context owns its counter, so concurrent runs on
// different threads do not contaminate each other.
class CounterScope {
public:
    explicit CounterScope(OpCounter& c) : prev_(detail::tl_counter()) {
        detail::tl_counter() = &c;
    }
    ~CounterScope() { detail::tl_counter() = prev_; }
    CounterScope(const CounterScope&) = delete;
    CounterScope& operator=(const CounterScope&) = delete;

private:
    OpCounter* prev_;
};

// Returns the current tallies and zeroes the counter.
inline OpCounter snapshot_and_reset(OpCounter& c) {
    OpCounter out = c;
    c = OpCounter{};
    return out;
}

}  // namespace cycdl
