#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycdl/errors.hpp"
#include "helpers.hpp"

using namespace cycdl;
using namespace cycdl::testhelpers;

namespace {

// All 432 elements of mu_{p+1} for p = 431: products of an order-16 and an
// order-27 element.
std::vector<Cyc> mu432() {
    Modulus mod = named_modulus("p431");
    ParamSet p2 = make_params(mod, 2, 4);
    ParamSet p3 = make_params(mod, 3, 3);
    Cyc g2 = sample_mu_generator(p2, 11);
    Cyc g3 = sample_mu_generator(p3, 11);
    std::vector<Cyc> out;
    Cyc a = cyc_one(*mod.fp);
    for (int i = 0; i < 16; ++i) {
        Cyc b = a;
        for (int j = 0; j < 27; ++j) {
            out.push_back(b);
            b = cyc_mul(b, g3);
        }
        a = cyc_mul(a, g2);
    }
    return out;
}

}  // namespace

TEST_CASE("Fp basic arithmetic mod 431") {
    FpContext F(431);
    CHECK(F.to_int(F.from_int(1000)) == 1000 % 431);
    Fp a = F.from_int(200), b = F.from_int(300);
    CHECK(F.to_int(F.add(a, b)) == 69);
    CHECK(F.to_int(F.sub(a, b)) == 331);
    CHECK(F.to_int(F.mul(a, b)) == (200 * 300) % 431);
    CHECK(F.to_int(F.neg(a)) == 231);
    CHECK(F.to_int(F.mul(a, F.inv(a))) == 1);
    CHECK(F.to_int(F.pow(a, 430)) == 1);  // Fermat
}

TEST_CASE("Fp at SIKE sizes round-trips and inverts") {
    Modulus mod = named_modulus("SIKEp751");
    const FpContext& F = *mod.fp;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 16; ++t) {
        bigint x = random_exponent(rng, mod.p);
        CHECK(F.to_int(F.from_int(x)) == x);
        if (x == 0) continue;
        Fp a = F.from_int(x);
        CHECK(F.to_int(F.mul(a, F.inv(a))) == 1);
        CHECK(F.to_int(F.sqr(a)) == (x * x) % mod.p);
    }
}

TEST_CASE("fp2_mul oracle values") {
    FpContext F(431);
    // identity
    Fp2 u = fp2_make(F, 17, 23);
    CHECK(fp2_eq(fp2_mul(fp2_one(F), u), u));
    // i*i = -1
    Fp2 i = fp2_make(F, 0, 1);
    CHECK(fp2_eq(fp2_mul(i, i), fp2_make(F, 430, 0)));
    // (2+3i)(4+5i) = 8-15 + 22i = -7+22i = 424+22i mod 431
    CHECK(fp2_eq(fp2_mul(fp2_make(F, 2, 3), fp2_make(F, 4, 5)), fp2_make(F, 424, 22)));
}

TEST_CASE("modulus mismatch is rejected") {
    FpContext F(431);
    Modulus mod = named_modulus("2^2*3^1-1");  // p = 11
    Fp2 a = fp2_one(F);
    Fp2 b = fp2_one(*mod.fp);
    CHECK_THROWS_AS(fp2_mul(a, b), ParamError);
    CHECK_THROWS_AS(fp2_mul(Fp2{}, a), ParamError);
}

TEST_CASE("hex serialization round trip") {
    FpContext F(431);
    Fp2 a = fp2_make(F, 424, 22);
    std::string hex = fp2_to_hex(a);
    CHECK(hex.find(',') != std::string::npos);
    CHECK(hex.size() == 2 * 2 * F.element_bytes() + 1);  // two padded elements + comma
    CHECK(fp2_eq(fp2_from_hex(F, hex), a));
    CHECK_THROWS_AS(fp2_from_hex(F, "0011"), ParamError);
}

TEST_CASE("cyclotomic formulas agree with generic multiplication over all of mu_432") {
    auto mu = mu432();
    CHECK(mu.size() == 432);
    for (const Cyc& a : mu) {
        CHECK(is_unit_norm(a.v));
        Cyc sq = cyc_sqr(a);
        Cyc cb = cyc_cube(a);
        CHECK(cyc_eq(sq, Cyc{fp2_mul(a.v, a.v)}));
        CHECK(cyc_eq(cb, Cyc{fp2_mul(fp2_mul(a.v, a.v), a.v)}));
        CHECK(fp2_is_one(fp2_mul(a.v, cyc_conj_inv(a).v)));  // conj = inverse
        CHECK(is_unit_norm(sq.v));
        CHECK(is_unit_norm(cb.v));
    }
}

TEST_CASE("cyclotomic formulas at SIKE size (random spot checks)") {
    Modulus mod = named_modulus("SIKEp434");
    for (unsigned ell : {2u, 3u}) {
        ParamSet params = make_params(mod, ell);
        for (std::uint64_t s = 1; s <= 4; ++s) {
            Cyc a = sample_mu_generator(params, s);
            CHECK(cyc_eq(cyc_sqr(a), Cyc{fp2_mul(a.v, a.v)}));
            CHECK(cyc_eq(cyc_cube(a), Cyc{fp2_mul(fp2_mul(a.v, a.v), a.v)}));
            CHECK(fp2_is_one(fp2_mul(a.v, cyc_conj_inv(a).v)));
        }
    }
}

TEST_CASE("OpCounter deltas per operation") {
    ToyFixture fx(3);
    OpCounter c;
    {
        CounterScope scope(c);
        CHECK(snapshot_and_reset(c) == OpCounter{});  // fresh counter
        cyc_sqr(fx.g);
        OpCounter got = snapshot_and_reset(c);
        CHECK(got.s == 2);
        CHECK(got.m == 0);
        CHECK(got.M == 0);
        CHECK(got.S == 0);
        cyc_cube(fx.g);
        got = snapshot_and_reset(c);
        CHECK(got.s == 1);
        CHECK(got.m == 2);
        fp2_mul(fx.g.v, fx.g.v);
        got = snapshot_and_reset(c);
        CHECK(got.m == 3);
        CHECK(got.M == 1);
        CHECK(got.s == 0);
        fp2_sqr(fx.g.v);
        got = snapshot_and_reset(c);
        CHECK(got.m == 2);
        CHECK(got.S == 1);
        cyc_conj_inv(fx.g);  // free
        CHECK(c == OpCounter{});
    }
    CHECK(current_counter() == nullptr);
    // cost model weights: m=1, s=0.8
    OpCounter w{.m = 2, .s = 5, .M = 0, .S = 0, .zmod_inv = 0, .zmod_mul = 0};
    CHECK(w.cost_tenths() == 60);
    CHECK(w.cost_m() == doctest::Approx(6.0));
}

TEST_CASE("counter scopes nest and do not leak across contexts") {
    ToyFixture fx(2);
    OpCounter outer, inner;
    {
        CounterScope a(outer);
        cyc_sqr(fx.g);
        {
            CounterScope b(inner);
            cyc_sqr(fx.g);
            cyc_sqr(fx.g);
        }
        cyc_sqr(fx.g);
    }
    CHECK(outer.s == 4);
    CHECK(inner.s == 4);
}

TEST_CASE("cyc_pow_ell annihilates at the group order") {
    ToyFixture f3(3, 1);
    CHECK(cyc_is_one(cyc_pow_ell(f3.g, 3, 3)));
    CHECK(!cyc_is_one(cyc_pow_ell(f3.g, 3, 2)));
    CHECK(cyc_eq(cyc_pow_ell(f3.g, 3, 0), f3.g));
    ToyFixture f2(2, 1);
    CHECK(cyc_is_one(cyc_pow_ell(f2.g, 2, 4)));
    Cyc o2 = cyc_pow_ell(f2.g, 2, 3);  // order-2 element
    CHECK(!cyc_is_one(o2));
    CHECK(cyc_is_one(cyc_sqr(o2)));
    CHECK_THROWS_AS(cyc_pow_ell(f2.g, 5, 1), ParamError);
}

TEST_CASE("sample_mu_generator: exact order and determinism") {
    ToyFixture f3(3);
    Cyc again = sample_mu_generator(f3.params, 7);
    CHECK(cyc_eq(f3.g, again));  // fixed seed twice
    CHECK(cyc_is_one(naive_pow(f3.g, 27)));
    CHECK(!cyc_is_one(naive_pow(f3.g, 9)));
    ToyFixture f2(2);
    CHECK(cyc_is_one(naive_pow(f2.g, 16)));
    CHECK(!cyc_is_one(naive_pow(f2.g, 8)));
    // Only 18 generators exist in this toy group, so any fixed seed pair may
    // collide; it suffices that the seed influences the draw at all.
    bool seed_matters = false;
    for (std::uint64_t s = 1; s <= 8 && !seed_matters; ++s)
        seed_matters = !cyc_eq(f3.g, sample_mu_generator(f3.params, s));
    CHECK(seed_matters);
}
