#pragma once

#include <string>

#include "cycdl/fp.hpp"
#include "cycdl/opcount.hpp"

namespace cycdl {

// Element of F_{p^2} = F_p[i]/(i^2+1), re + im*i.
// Carries a pointer to its field context so cross-modulus misuse is caught.
struct Fp2 {
    Fp re;
    Fp im;
    const FpContext* F = nullptr;
};

// Element of the cyclotomic subgroup mu_{p+1} (unit norm: re^2 + im^2 = 1).
// Inversion is conjugation and squaring/cubing have cheap dedicated formulas.
struct Cyc {
    Fp2 v;
};

Fp2 fp2_zero(const FpContext& F);
Fp2 fp2_one(const FpContext& F);
Fp2 fp2_make(const FpContext& F, const bigint& re, const bigint& im);

bool fp2_eq(const Fp2& a, const Fp2& b);
bool fp2_is_one(const Fp2& a);

// Karatsuba over the quadratic extension: 3 base multiplications.
// Counts {M:1, m:3}.
Fp2 fp2_mul(const Fp2& a, const Fp2& b);
// Generic squaring as 2 base multiplications. Counts {S:1, m:2}.
Fp2 fp2_sqr(const Fp2& a);
Fp2 fp2_conj(const Fp2& a);
// Square-and-multiply with a big-integer exponent (test and setup paths).
Fp2 fp2_pow(const Fp2& a, const bigint& e);

// re^2 + im^2 (the F_{p^2}/F_p norm, since i^2 = -1).
Fp fp2_norm(const Fp2& a);
bool is_unit_norm(const Fp2& a);

std::string fp2_to_hex(const Fp2& a);
Fp2 fp2_from_hex(const FpContext& F, const std::string& hex);

inline Cyc cyc_one(const FpContext& F) { return Cyc{fp2_one(F)}; }
inline bool cyc_eq(const Cyc& a, const Cyc& b) { return fp2_eq(a.v, b.v); }
inline bool cyc_is_one(const Cyc& a) { return fp2_is_one(a.v); }

// Wraps an Fp2 value as a cyclotomic element; debug builds assert unit norm.
Cyc as_cyc(const Fp2& a);

// a^{-1} = conj(a); costs zero multiplications.
Cyc cyc_conj_inv(const Cyc& a);

// a^2 = (2u^2 - 1) + ((u+v)^2 - 1) i, valid on unit-norm inputs. Counts {s:2}.
Cyc cyc_sqr(const Cyc& a);

// a^3 = (4u^2 - 3)u + (4u^2 - 1)v i. Counts {s:1, m:2}.
Cyc cyc_cube(const Cyc& a);

// a^{ell^k} by k squarings or cubings.
Cyc cyc_pow_ell(const Cyc& a, unsigned ell, unsigned k);

Cyc cyc_mul(const Cyc& a, const Cyc& b);

}  // namespace cycdl
