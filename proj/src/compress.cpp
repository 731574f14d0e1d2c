#include "cycdl/compress.hpp"

#include <boost/integer/mod_inverse.hpp>

#include "cycdl/errors.hpp"

namespace cycdl {

namespace zmod {

bigint reduce(const bigint& a, const bigint& order) {
    bigint r = a % order;
    if (r < 0) r += order;
    return r;
}

bigint mul(const bigint& a, const bigint& b, const bigint& order) {
    if (OpCounter* c = current_counter()) ++c->zmod_mul;
    return reduce(a * b, order);
}

bigint inv(const bigint& a, const bigint& order) {
    if (OpCounter* c = current_counter()) ++c->zmod_inv;
    bigint r = boost::integer::mod_inverse(reduce(a, order), order);
    if (r == 0) throw ParamError("element not invertible mod subgroup order");
    return r;
}

bigint neg(const bigint& a, const bigint& order) {
    return reduce(-a, order);
}

}  // namespace zmod

PairingTuple synth_pairing_tuple(const ParamSet& params, const CompressionMatrix& matrix,
                                 std::uint64_t seed) {
    const bigint order = params.subgroup_order();
    const bigint det =
        zmod::reduce(matrix.c0 * matrix.d1 - matrix.c1 * matrix.d0, order);
    if (det % params.ell == 0)
        throw ParamError("compression matrix is singular mod ell");

    PairingTuple t;
    t.r0 = sample_mu_generator(params, seed);
    auto raise = [&](const bigint& exp) { return as_cyc(fp2_pow(t.r0.v, exp)); };
    t.r1 = raise(zmod::reduce(matrix.d0, order));
    t.r2 = raise(zmod::reduce(matrix.d1, order));
    t.r3 = raise(zmod::neg(matrix.c0, order));
    t.r4 = raise(zmod::neg(matrix.c1, order));
    return t;
}

CompressedKey compress_from_pairings(const PairingTuple& tuple, const ParamSet& params,
                                     CompressPhases* phases) {
    OpCounter* ambient = detail::tl_counter();
    CompressPhases local;

    BaseSelection sel;
    {
        CounterScope scope(local.base_choice);
        sel = choose_base(tuple.r1, tuple.r2, params);
    }
    DlogTable table;
    {
        CounterScope scope(local.table_build);
        table = build_table(sel, params);
    }

    CompressedKey key;
    {
        CounterScope scope(local.dlogs);
        const Strategy strategy =
            optimal_strategy(params.digit_rows(), default_weights(params)).strategy;
        const bigint order = params.subgroup_order();
        const Cyc& other = sel.label == 1 ? tuple.r1 : tuple.r2;
        // label=1: base r2 = r0^{d1}; logs are s1 = d1^{-1}d0, s3 = -d1^{-1}c0,
        // s4 = -d1^{-1}c1, and the key is assembled by sign flips alone.
        // label=0 mirrors this with d0 in the denominator.
        const bigint s_other =
            digits_to_integer(ph_dlp(other, strategy, table, sel, params), params);
        const bigint s3 =
            digits_to_integer(ph_dlp(tuple.r3, strategy, table, sel, params), params);
        const bigint s4 =
            digits_to_integer(ph_dlp(tuple.r4, strategy, table, sel, params), params);
        if (sel.label == 1) {
            key.t0 = zmod::neg(s_other, order);
            key.t1 = s4;
            key.t2 = zmod::neg(s3, order);
            key.flag = 0;
        } else {
            key.t0 = zmod::neg(s_other, order);
            key.t1 = zmod::neg(s4, order);
            key.t2 = s3;
            key.flag = 1;
        }
    }

    if (ambient) *ambient += local.total();
    if (phases) *phases = local;
    return key;
}

}  // namespace cycdl
