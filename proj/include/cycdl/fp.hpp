#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cycdl {

using bigint = boost::multiprecision::cpp_int;

// Largest supported modulus is SIKEp751 (12 limbs of 64 bits).
inline constexpr int kMaxLimbs = 12;
using Limbs = std::array<std::uint64_t, kMaxLimbs>;

// Fixed-width Montgomery arithmetic modulo an odd prime p.
//
// Elements are kept in Montgomery form (x*R mod p, R = 2^{64*nlimbs}).
// The context is immutable after construction and safe to share across
// threads; elements reference it by pointer, so contexts must outlive
// their elements (ParamSet holds them in shared_ptr).
class FpContext {
public:
    explicit FpContext(const bigint& p);

    int nlimbs() const { return nlimbs_; }
    unsigned bit_length() const { return bit_length_; }
    const bigint& modulus() const { return p_int_; }
    const Limbs& modulus_limbs() const { return p_; }

    // Bytes of one canonical F_p element: 8*ceil(bit_length/64).
    std::size_t element_bytes() const { return 8 * static_cast<std::size_t>(nlimbs_); }

    bool same_modulus(const FpContext& o) const;

    struct Fp {
        Limbs v{};
        bool operator==(const Fp&) const = default;
    };

    Fp zero() const { return Fp{}; }
    Fp one() const { return Fp{r1_}; }

    Fp add(const Fp& a, const Fp& b) const;
    Fp sub(const Fp& a, const Fp& b) const;
    Fp neg(const Fp& a) const;
    Fp mul(const Fp& a, const Fp& b) const { return mont_mul(a, b); }
    Fp sqr(const Fp& a) const { return mont_mul(a, a); }
    // Fermat inversion; only used off the hot path (element sampling).
    Fp inv(const Fp& a) const;
    Fp pow(const Fp& a, const bigint& e) const;

    bool is_zero(const Fp& a) const { return a == Fp{}; }

    Fp from_int(const bigint& x) const;      // reduces mod p, enters Montgomery form
    bigint to_int(const Fp& a) const;        // canonical value in [0, p)

    // Little-endian canonical byte string, zero-padded to element_bytes().
    std::string to_hex(const Fp& a) const;
    Fp from_hex(const std::string& hex) const;

private:
    Fp mont_mul(const Fp& a, const Fp& b) const;
    Fp reduce_once(Limbs t, std::uint64_t top) const;

    Limbs p_{};
    int nlimbs_ = 0;
    unsigned bit_length_ = 0;
    std::uint64_t n0inv_ = 0;  // -p^{-1} mod 2^64
    Limbs r1_{};               // R mod p (Montgomery one)
    Limbs r2_{};               // R^2 mod p
    bigint p_int_;
};

using Fp = FpContext::Fp;

bigint limbs_to_int(const Limbs& v, int nlimbs);
Limbs int_to_limbs(const bigint& x, int nlimbs);

}  // namespace cycdl
