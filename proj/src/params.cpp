#include "cycdl/params.hpp"

#include <cstdio>
#include <random>

#include "cycdl/errors.hpp"

namespace cycdl {

namespace {

bigint pow_int(unsigned base, unsigned exp) {
    bigint r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

bool miller_rabin_round(const bigint& n, const bigint& a, const bigint& d, unsigned r) {
    bigint x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_probable_prime(const bigint& n) {
    if (n < 2) return false;
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    bigint d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    if (n < (bigint(1) << 64)) {
        // This base set is deterministic for all n < 2^64.
        for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
            if (!miller_rabin_round(n, a, d, r)) return false;
        }
        return true;
    }
    std::mt19937_64 rng(0x6d725f726e67ULL);
    for (int i = 0; i < 64; ++i) {
        bigint a = 0;
        do {
            a = 0;
            unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n));
            for (unsigned b = 0; b <= bits; b += 64) a = (a << 64) | rng();
            a %= (n - 3);
            a += 2;
        } while (a < 2);
        if (!miller_rabin_round(n, a, d, r)) return false;
    }
    return true;
}

Modulus make_toy(unsigned e2, unsigned e3) {
    if (e2 < 2 || e3 < 1) throw ParamError("toy modulus needs e2 >= 2 and e3 >= 1");
    bigint p = pow_int(2, e2) * pow_int(3, e3) - 1;
    if (!is_probable_prime(p)) {
        // Name a small factor when trial division finds one quickly.
        for (unsigned f = 5; f < 10000; f += 2) {
            if (p % f == 0 && p != f)
                throw RejectionError("2^" + std::to_string(e2) + "*3^" + std::to_string(e3) +
                                     "-1 = " + p.str() + " is composite (factor " +
                                     std::to_string(f) + ")");
        }
        throw RejectionError("2^" + std::to_string(e2) + "*3^" + std::to_string(e3) + "-1 = " +
                             p.str() + " failed the primality test");
    }
    Modulus m;
    m.name = "2^" + std::to_string(e2) + "*3^" + std::to_string(e3) + "-1";
    m.p = p;
    m.e2 = e2;
    m.e3 = e3;
    m.fp = std::make_shared<FpContext>(p);
    m.bit_length = m.fp->bit_length();
    return m;
}

Modulus named_modulus(const std::string& name) {
    struct Named {
        const char* name;
        unsigned e2, e3;
    };
    static const Named kSets[] = {
        {"SIKEp434", 216, 137},
        {"SIKEp503", 250, 159},
        {"SIKEp610", 305, 192},
        {"SIKEp751", 372, 239},
        {"p431", 4, 3},
    };
    for (const auto& s : kSets) {
        if (name == s.name) {
            Modulus m = make_toy(s.e2, s.e3);
            m.name = s.name;
            return m;
        }
    }
    // Inline toy spec "2^a*3^b-1".
    unsigned a = 0, b = 0;
    if (std::sscanf(name.c_str(), "2^%u*3^%u-1", &a, &b) == 2) return make_toy(a, b);
    throw LookupError("unknown parameter set \"" + name + "\"");
}

std::uint64_t ParamSet::radix() const {
    std::uint64_t L = 1;
    for (unsigned i = 0; i < w; ++i) L *= ell;
    return L;
}

bigint ParamSet::subgroup_order() const { return pow_int(ell, e_ell); }

ParamSet make_params(const Modulus& mod, unsigned ell, std::optional<unsigned> w) {
    if (ell != 2 && ell != 3) throw ParamError("ell must be 2 or 3");
    ParamSet ps;
    ps.mod = mod;
    ps.ell = ell;
    ps.e_ell = (ell == 2) ? mod.e2 : mod.e3;
    unsigned def = (ell == 3) ? 3u : 4u;
    ps.w = w.value_or(std::min(def, ps.e_ell));
    if (ps.w < 1 || ps.w > 6) throw ParamError("w must be in [1, 6]");
    if (ps.w > ps.e_ell) throw ParamError("w must not exceed e_ell");
    return ps;
}

Cyc sample_mu_generator(const ParamSet& params, std::uint64_t seed) {
    const FpContext& F = params.field();
    const bigint& p = F.modulus();
    const bigint order = params.subgroup_order();
    if ((p + 1) % order != 0) throw ParamError("ell^e_ell does not divide p+1");
    const bigint cofactor = (p + 1) / order;

    std::mt19937_64 rng(seed);
    // The explicit return type matters: "return x % p" would otherwise deduce
    // to a boost expression template that refers to the dead local x.
    auto draw_fp = [&]() -> bigint {
        bigint x = 0;
        for (unsigned b = 0; b < F.bit_length() + 64; b += 64) x = (x << 64) | rng();
        return x % p;
    };

    for (int attempt = 0; attempt < 256; ++attempt) {
        Fp2 z = fp2_make(F, draw_fp(), draw_fp());
        if (F.is_zero(z.re) && F.is_zero(z.im)) continue;
        // z^{p-1} = conj(z)^2 / norm(z) since z^p = conj(z).
        Fp ninv = F.inv(fp2_norm(z));
        Fp2 c = fp2_conj(z);
        Fp2 mu = fp2_sqr(c);
        mu.re = F.mul(mu.re, ninv);
        mu.im = F.mul(mu.im, ninv);
        Fp2 g = fp2_pow(mu, cofactor);
        Cyc cand = as_cyc(g);
        if (params.e_ell == 0) return cand;
        if (!cyc_is_one(cyc_pow_ell(cand, params.ell, params.e_ell - 1))) return cand;
    }
    throw GenerationError("could not sample a generator of mu_{ell^e} in 256 draws");
}

}  // namespace cycdl
