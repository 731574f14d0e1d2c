#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycdl/errors.hpp"
#include "helpers.hpp"

using namespace cycdl;
using namespace cycdl::testhelpers;

TEST_CASE("named SIKE parameter sets") {
    struct Row {
        const char* name;
        unsigned e2, e3, bits;
    };
    for (const Row& r : {Row{"SIKEp434", 216, 137, 434}, Row{"SIKEp503", 250, 159, 503},
                         Row{"SIKEp610", 305, 192, 610}, Row{"SIKEp751", 372, 239, 751}}) {
        Modulus m = named_modulus(r.name);
        CHECK(m.e2 == r.e2);
        CHECK(m.e3 == r.e3);
        CHECK(m.bit_length == r.bits);
        bigint expect = 1;
        for (unsigned i = 0; i < r.e2; ++i) expect *= 2;
        for (unsigned i = 0; i < r.e3; ++i) expect *= 3;
        CHECK(m.p == expect - 1);
        CHECK(is_probable_prime(m.p));
    }
}

TEST_CASE("toy preset and inline spec") {
    Modulus m = named_modulus("p431");
    CHECK(m.p == 431);
    CHECK(m.e2 == 4);
    CHECK(m.e3 == 3);
    CHECK(named_modulus("2^4*3^3-1").p == 431);
    CHECK(named_modulus("2^2*3^1-1").p == 11);
    CHECK_THROWS_AS(named_modulus("SIKEp999"), LookupError);
}

TEST_CASE("make_toy rejects composite p naming a factor") {
    CHECK(make_toy(4, 3).p == 431);
    CHECK(make_toy(2, 1).p == 11);
    try {
        make_toy(5, 2);  // 32*9-1 = 287 = 7*41
        FAIL("expected RejectionError");
    } catch (const RejectionError& e) {
        CHECK(std::string(e.what()).find("7") != std::string::npos);
    }
    CHECK_THROWS_AS(make_toy(1, 1), ParamError);
}

TEST_CASE("is_probable_prime spot checks") {
    CHECK(is_probable_prime(2));
    CHECK(is_probable_prime(431));
    CHECK(!is_probable_prime(1));
    CHECK(!is_probable_prime(287));
    CHECK(!is_probable_prime(341));  // Fermat pseudoprime base 2
    bigint p434 = named_modulus("SIKEp434").p;
    CHECK(!is_probable_prime(p434 + 2));
}

TEST_CASE("ParamSet derived quantities") {
    Modulus m = named_modulus("SIKEp434");
    ParamSet a = make_params(m, 3, 3);
    CHECK(a.radix() == 27);
    CHECK(a.e_ell == 137);
    CHECK(a.digit_rows() == 45);
    CHECK(a.shift() == 2);
    CHECK(a.subgroup_order() == pow(bigint(3), 137));
    ParamSet b = make_params(m, 2, 4);
    CHECK(b.radix() == 16);
    CHECK(b.digit_rows() == 54);
    CHECK(b.shift() == 0);
    // subgroup order divides p+1
    CHECK((m.p + 1) % a.subgroup_order() == 0);
    CHECK((m.p + 1) % b.subgroup_order() == 0);
    // defaults are the Table-1 optima
    CHECK(make_params(m, 3).w == 3);
    CHECK(make_params(m, 2).w == 4);
    CHECK_THROWS_AS(make_params(m, 5), ParamError);
    CHECK_THROWS_AS(make_params(m, 2, 7), ParamError);
    CHECK_THROWS_AS(make_params(m, 2, 0), ParamError);
    // w must not exceed e_ell
    Modulus tiny = named_modulus("2^2*3^1-1");
    CHECK_THROWS_AS(make_params(tiny, 3, 2), ParamError);
    CHECK(make_params(tiny, 3).w == 1);  // default capped at e_ell
}

TEST_CASE("sample_mu_generator is deterministic and full-order at toy and SIKE scale") {
    for (const char* name : {"p431", "SIKEp434"}) {
        Modulus m = named_modulus(name);
        for (unsigned ell : {2u, 3u}) {
            ParamSet params = make_params(m, ell);
            Cyc g = sample_mu_generator(params, 42);
            CHECK(cyc_eq(g, sample_mu_generator(params, 42)));
            CHECK(is_unit_norm(g.v));
            CHECK(cyc_is_one(cyc_pow_ell(g, ell, params.e_ell)));
            CHECK(!cyc_is_one(cyc_pow_ell(g, ell, params.e_ell - 1)));
        }
    }
}
