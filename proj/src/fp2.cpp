#include "cycdl/fp2.hpp"

#include <cassert>

#include "cycdl/errors.hpp"

namespace cycdl {

namespace detail {
OpCounter*& tl_counter() {
    thread_local OpCounter* c = nullptr;
    return c;
}
}  // namespace detail

namespace {

const FpContext& check_ctx(const Fp2& a) {
    if (!a.F) throw ParamError("uninitialized field element");
    return *a.F;
}

const FpContext& check_same_ctx(const Fp2& a, const Fp2& b) {
    const FpContext& F = check_ctx(a);
    const FpContext& G = check_ctx(b);
    if (&F != &G && !F.same_modulus(G)) throw ParamError("operands have different moduli");
    return F;
}

void count(std::uint64_t m, std::uint64_t s, std::uint64_t M, std::uint64_t S) {
    if (OpCounter* c = current_counter()) {
        c->m += m;
        c->s += s;
        c->M += M;
        c->S += S;
    }
}

}  // namespace

Fp2 fp2_zero(const FpContext& F) { return Fp2{F.zero(), F.zero(), &F}; }
Fp2 fp2_one(const FpContext& F) { return Fp2{F.one(), F.zero(), &F}; }

Fp2 fp2_make(const FpContext& F, const bigint& re, const bigint& im) {
    return Fp2{F.from_int(re), F.from_int(im), &F};
}

bool fp2_eq(const Fp2& a, const Fp2& b) {
    check_same_ctx(a, b);
    return a.re == b.re && a.im == b.im;
}

bool fp2_is_one(const Fp2& a) {
    const FpContext& F = check_ctx(a);
    return a.re == F.one() && F.is_zero(a.im);
}

Fp2 fp2_mul(const Fp2& a, const Fp2& b) {
    const FpContext& F = check_same_ctx(a, b);
    count(3, 0, 1, 0);
    Fp t1 = F.mul(a.re, b.re);
    Fp t2 = F.mul(a.im, b.im);
    Fp t3 = F.mul(F.add(a.re, a.im), F.add(b.re, b.im));
    Fp2 r;
    r.re = F.sub(t1, t2);
    r.im = F.sub(F.sub(t3, t1), t2);
    r.F = &F;
    return r;
}

Fp2 fp2_sqr(const Fp2& a) {
    const FpContext& F = check_ctx(a);
    count(2, 0, 0, 1);
    Fp2 r;
    r.re = F.mul(F.add(a.re, a.im), F.sub(a.re, a.im));
    Fp t = F.mul(a.re, a.im);
    r.im = F.add(t, t);
    r.F = &F;
    return r;
}

Fp2 fp2_conj(const Fp2& a) {
    const FpContext& F = check_ctx(a);
    return Fp2{a.re, F.neg(a.im), &F};
}

Fp2 fp2_pow(const Fp2& a, const bigint& e) {
    const FpContext& F = check_ctx(a);
    if (e < 0) throw ParamError("negative exponent");
    if (e == 0) return fp2_one(F);
    Fp2 acc = fp2_one(F);
    const int bits = static_cast<int>(boost::multiprecision::msb(e));
    for (int i = bits; i >= 0; --i) {
        acc = fp2_sqr(acc);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) acc = fp2_mul(acc, a);
    }
    return acc;
}

Fp fp2_norm(const Fp2& a) {
    const FpContext& F = check_ctx(a);
    return F.add(F.sqr(a.re), F.sqr(a.im));
}

bool is_unit_norm(const Fp2& a) {
    const FpContext& F = check_ctx(a);
    return fp2_norm(a) == F.one();
}

std::string fp2_to_hex(const Fp2& a) {
    const FpContext& F = check_ctx(a);
    return F.to_hex(a.re) + "," + F.to_hex(a.im);
}

Fp2 fp2_from_hex(const FpContext& F, const std::string& hex) {
    auto comma = hex.find(',');
    if (comma == std::string::npos) throw ParamError("expected \"re,im\" hex pair");
    Fp2 r;
    r.re = F.from_hex(hex.substr(0, comma));
    r.im = F.from_hex(hex.substr(comma + 1));
    r.F = &F;
    return r;
}

Cyc as_cyc(const Fp2& a) {
    assert(is_unit_norm(a));
    return Cyc{a};
}

Cyc cyc_conj_inv(const Cyc& a) { return Cyc{fp2_conj(a.v)}; }

Cyc cyc_sqr(const Cyc& a) {
    const FpContext& F = check_ctx(a.v);
    count(0, 2, 0, 0);
    Fp u2 = F.sqr(a.v.re);
    Fp w = F.sqr(F.add(a.v.re, a.v.im));
    Fp2 r;
    r.re = F.sub(F.add(u2, u2), F.one());   // u^2 - v^2 = 2u^2 - 1
    r.im = F.sub(w, F.one());               // 2uv = (u+v)^2 - 1
    r.F = &F;
    assert(fp2_eq(r, [&] {
        OpCounter scratch;  // keep the debug cross-check out of the tallies
        CounterScope cs(scratch);
        return fp2_mul(a.v, a.v);
    }()));
    return Cyc{r};
}

Cyc cyc_cube(const Cyc& a) {
    const FpContext& F = check_ctx(a.v);
    count(2, 1, 0, 0);
    Fp u2 = F.sqr(a.v.re);
    Fp four_u2 = F.add(F.add(u2, u2), F.add(u2, u2));
    Fp one = F.one();
    Fp2 r;
    r.re = F.mul(a.v.re, F.sub(four_u2, F.add(F.add(one, one), one)));
    r.im = F.mul(a.v.im, F.sub(four_u2, one));
    r.F = &F;
    return Cyc{r};
}

Cyc cyc_pow_ell(const Cyc& a, unsigned ell, unsigned k) {
    Cyc r = a;
    if (ell == 2) {
        for (unsigned i = 0; i < k; ++i) r = cyc_sqr(r);
    } else if (ell == 3) {
        for (unsigned i = 0; i < k; ++i) r = cyc_cube(r);
    } else {
        throw ParamError("ell must be 2 or 3");
    }
    return r;
}

Cyc cyc_mul(const Cyc& a, const Cyc& b) { return Cyc{fp2_mul(a.v, b.v)}; }

}  // namespace cycdl
