#include "cycdl/fp.hpp"

#include <cassert>

#include "cycdl/errors.hpp"

namespace cycdl {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// r = a + b over n limbs, returns carry.
u64 add_n(Limbs& r, const Limbs& a, const Limbs& b, int n) {
    u64 carry = 0;
    for (int i = 0; i < n; ++i) {
        u128 s = (u128)a[i] + b[i] + carry;
        r[i] = (u64)s;
        carry = (u64)(s >> 64);
    }
    return carry;
}

// r = a - b over n limbs, returns borrow.
u64 sub_n(Limbs& r, const Limbs& a, const Limbs& b, int n) {
    u64 borrow = 0;
    for (int i = 0; i < n; ++i) {
        u128 s = (u128)a[i] - b[i] - borrow;
        r[i] = (u64)s;
        borrow = (u64)(s >> 64) & 1;
    }
    return borrow;
}

int cmp_n(const Limbs& a, const Limbs& b, int n) {
    for (int i = n - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

bigint limbs_to_int(const Limbs& v, int nlimbs) {
    bigint x = 0;
    for (int i = nlimbs - 1; i >= 0; --i) {
        x <<= 64;
        x += v[i];
    }
    return x;
}

Limbs int_to_limbs(const bigint& x, int nlimbs) {
    Limbs v{};
    bigint t = x;
    for (int i = 0; i < nlimbs; ++i) {
        v[i] = static_cast<u64>(t & 0xffffffffffffffffULL);
        t >>= 64;
    }
    return v;
}

FpContext::FpContext(const bigint& p) : p_int_(p) {
    if (p <= 2 || (p & 1) == 0) throw ParamError("modulus must be an odd prime > 2");
    bit_length_ = static_cast<unsigned>(boost::multiprecision::msb(p)) + 1;
    nlimbs_ = static_cast<int>((bit_length_ + 63) / 64);
    if (nlimbs_ > kMaxLimbs) throw ParamError("modulus exceeds supported width");
    p_ = int_to_limbs(p, nlimbs_);

    // n0inv = -p^{-1} mod 2^64 by Newton iteration.
    u64 p0 = p_[0];
    u64 x = p0;  // correct mod 2^3 for odd p0... start with p0 (mod 8 inverse of odd is itself)
    for (int i = 0; i < 6; ++i) x *= 2 - p0 * x;
    n0inv_ = ~x + 1;

    // R mod p and R^2 mod p via repeated modular doubling.
    bigint r = 1;
    for (int i = 0; i < 64 * nlimbs_; ++i) {
        r <<= 1;
        if (r >= p) r -= p;
    }
    r1_ = int_to_limbs(r, nlimbs_);
    for (int i = 0; i < 64 * nlimbs_; ++i) {
        r <<= 1;
        if (r >= p) r -= p;
    }
    r2_ = int_to_limbs(r, nlimbs_);
}

bool FpContext::same_modulus(const FpContext& o) const {
    return nlimbs_ == o.nlimbs_ && p_ == o.p_;
}

Fp FpContext::add(const Fp& a, const Fp& b) const {
    Fp r;
    u64 carry = add_n(r.v, a.v, b.v, nlimbs_);
    if (carry || cmp_n(r.v, p_, nlimbs_) >= 0) {
        Limbs t{};
        sub_n(t, r.v, p_, nlimbs_);
        r.v = t;
    }
    return r;
}

Fp FpContext::sub(const Fp& a, const Fp& b) const {
    Fp r;
    u64 borrow = sub_n(r.v, a.v, b.v, nlimbs_);
    if (borrow) {
        Limbs t{};
        add_n(t, r.v, p_, nlimbs_);
        r.v = t;
    }
    return r;
}

Fp FpContext::neg(const Fp& a) const { return sub(zero(), a); }

// CIOS Montgomery multiplication.
Fp FpContext::mont_mul(const Fp& a, const Fp& b) const {
    const int n = nlimbs_;
    u64 t[kMaxLimbs + 2] = {0};
    for (int i = 0; i < n; ++i) {
        u64 carry = 0;
        for (int j = 0; j < n; ++j) {
            u128 s = (u128)t[j] + (u128)a.v[j] * b.v[i] + carry;
            t[j] = (u64)s;
            carry = (u64)(s >> 64);
        }
        u128 s = (u128)t[n] + carry;
        t[n] = (u64)s;
        t[n + 1] += (u64)(s >> 64);

        u64 mu = t[0] * n0inv_;
        s = (u128)t[0] + (u128)mu * p_[0];
        carry = (u64)(s >> 64);
        for (int j = 1; j < n; ++j) {
            s = (u128)t[j] + (u128)mu * p_[j] + carry;
            t[j - 1] = (u64)s;
            carry = (u64)(s >> 64);
        }
        s = (u128)t[n] + carry;
        t[n - 1] = (u64)s;
        t[n] = t[n + 1] + (u64)(s >> 64);
        t[n + 1] = 0;
    }
    Limbs out{};
    for (int j = 0; j < n; ++j) out[j] = t[j];
    return reduce_once(out, t[nlimbs_]);
}

Fp FpContext::reduce_once(Limbs t, std::uint64_t top) const {
    if (top || cmp_n(t, p_, nlimbs_) >= 0) {
        Limbs r{};
        sub_n(r, t, p_, nlimbs_);
        return Fp{r};
    }
    return Fp{t};
}

Fp FpContext::pow(const Fp& a, const bigint& e) const {
    if (e == 0) return one();
    Fp acc = one();
    const int bits = static_cast<int>(boost::multiprecision::msb(e));
    for (int i = bits; i >= 0; --i) {
        acc = sqr(acc);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) acc = mul(acc, a);
    }
    return acc;
}

Fp FpContext::inv(const Fp& a) const {
    if (is_zero(a)) throw ParamError("inverse of zero");
    return pow(a, p_int_ - 2);
}

Fp FpContext::from_int(const bigint& x) const {
    bigint r = x % p_int_;
    if (r < 0) r += p_int_;
    Fp raw{int_to_limbs(r, nlimbs_)};
    return mont_mul(raw, Fp{r2_});
}

bigint FpContext::to_int(const Fp& a) const {
    Fp one_raw{};
    one_raw.v[0] = 1;
    Fp canon = mont_mul(a, one_raw);
    return limbs_to_int(canon.v, nlimbs_);
}

std::string FpContext::to_hex(const Fp& a) const {
    static const char* digits = "0123456789abcdef";
    bigint x = to_int(a);
    std::string out;
    out.reserve(2 * element_bytes());
    for (std::size_t i = 0; i < element_bytes(); ++i) {
        unsigned byte = static_cast<unsigned>(x & 0xff);
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
        x >>= 8;
    }
    return out;
}

Fp FpContext::from_hex(const std::string& hex) const {
    if (hex.size() != 2 * element_bytes())
        throw ParamError("hex field element has wrong length for this modulus");
    bigint x = 0;
    for (std::size_t i = hex.size(); i >= 2; i -= 2) {
        unsigned byte = 0;
        for (std::size_t k = 0; k < 2; ++k) {
            char c = hex[i - 2 + k];
            unsigned d;
            if (c >= '0' && c <= '9') d = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') d = static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') d = static_cast<unsigned>(c - 'A' + 10);
            else throw ParamError("invalid hex digit in field element");
            byte = (byte << 4) | d;
        }
        x = (x << 8) | byte;
    }
    if (x >= p_int_) throw ParamError("field element not canonically reduced");
    return from_int(x);
}

}  // namespace cycdl
