// Command-line front end: discrete logs in mu_{ell^e} subgroups of F_{p^2},
// the three-dlog compression pipeline, cost benchmarks, and self tests.

#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycdl/compress.hpp"
#include "cycdl/errors.hpp"
#include "cycdl/metrics.hpp"

using nlohmann::json;
using namespace cycdl;

namespace {

struct CommonOpts {
    std::string params = "p431";
    unsigned ell = 3;
    std::optional<unsigned> w;
    std::uint64_t seed = 1;
    unsigned trials = 100;
    bool pretty = false;
    std::string out;
};

void emit(const json& j, const CommonOpts& o) {
    const std::string text = o.pretty ? j.dump(2) : j.dump();
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw ParamError("cannot open output file " + o.out);
        f << text << "\n";
    } else {
        std::cout << text << "\n";
    }
}

json counts_json(const OpCounter& c) {
    return {{"m", c.m},       {"s", c.s},
            {"M", c.M},       {"S", c.S},
            {"zmod_inv", c.zmod_inv}, {"zmod_mul", c.zmod_mul},
            {"cost_m", c.cost_m()}};
}

Cyc parse_cyc(const FpContext& F, const std::string& hex) {
    Fp2 v = fp2_from_hex(F, hex);
    if (!is_unit_norm(v)) throw ValidationError("element is not unit-norm (not in mu_{p+1})");
    return as_cyc(v);
}

bigint random_exponent(std::mt19937_64& rng, const bigint& order) {
    bigint v = 0;
    const unsigned words = (msb(order) / 64) + 2;
    for (unsigned i = 0; i < words; ++i) v = (v << 64) | bigint(rng());
    return v % order;
}

int run_solve(const CommonOpts& o, const std::string& base_hex, const std::string& chal_hex) {
    const Modulus mod = named_modulus(o.params);
    const ParamSet params = make_params(mod, o.ell, o.w);
    Cyc base = base_hex.empty() ? sample_mu_generator(params, o.seed)
                                : parse_cyc(params.field(), base_hex);

    std::mt19937_64 rng(o.seed + 1);
    bigint planted = -1;
    Cyc challenge = cyc_one(params.field());
    if (chal_hex.empty()) {
        planted = random_exponent(rng, params.subgroup_order());
        challenge = as_cyc(fp2_pow(base.v, planted));
    } else {
        challenge = parse_cyc(params.field(), chal_hex);
    }

    OpCounter counter;
    bigint value;
    json digits = json::array();
    {
        CounterScope scope(counter);
        BaseSelection sel = choose_base(base, base, params);
        DlogTable table = build_table(sel, params);
        Strategy strategy = optimal_strategy(params.digit_rows(), default_weights(params)).strategy;
        SignedDigitArray d = ph_dlp(challenge, strategy, table, sel, params);
        for (auto x : d.digits) digits.push_back(x);
        value = digits_to_integer(d, params);
    }

    json j{{"params", mod.name},  {"ell", params.ell},   {"e_ell", params.e_ell},
           {"w", params.w},       {"value", value.str()}, {"digits", digits},
           {"base", fp2_to_hex(base.v)}, {"challenge", fp2_to_hex(challenge.v)},
           {"op_counts", counts_json(counter)}};
    if (planted >= 0) j["planted_exponent"] = planted.str();
    emit(j, o);
    return 0;
}

int run_compress(const CommonOpts& o, bool synthetic, const std::vector<std::string>& matrix,
                 const std::vector<std::string>& tuple_hex) {
    const Modulus mod = named_modulus(o.params);
    const ParamSet params = make_params(mod, o.ell, o.w);

    PairingTuple tuple;
    if (synthetic) {
        if (matrix.size() != 4)
            throw ParamError("--matrix needs c0,d0,c1,d1 (four decimal values)");
        CompressionMatrix m{bigint(matrix[0]), bigint(matrix[1]), bigint(matrix[2]),
                            bigint(matrix[3])};
        tuple = synth_pairing_tuple(params, m, o.seed);
    } else {
        if (tuple_hex.size() != 5)
            throw ParamError("--tuple needs five hex field elements r0..r4");
        const FpContext& F = params.field();
        tuple = {parse_cyc(F, tuple_hex[0]), parse_cyc(F, tuple_hex[1]),
                 parse_cyc(F, tuple_hex[2]), parse_cyc(F, tuple_hex[3]),
                 parse_cyc(F, tuple_hex[4])};
    }

    CompressPhases phases;
    CompressedKey key = compress_from_pairings(tuple, params, &phases);
    emit(json{{"params", mod.name},
              {"ell", params.ell},
              {"w", params.w},
              {"t0", key.t0.str()},
              {"t1", key.t1.str()},
              {"t2", key.t2.str()},
              {"flag", key.flag},
              {"base_label", key.flag == 0 ? 1 : 0},
              {"op_counts", counts_json(phases.total())}},
         o);
    return 0;
}

int run_bench(const CommonOpts& o, std::vector<unsigned> w_set) {
    const Modulus mod = named_modulus(o.params);
    if (w_set.empty()) w_set = {1, 2, 3, 4, 6};
    CostReport r = run_cost_bench(mod, o.ell, w_set, o.trials, o.seed);
    json per_w, excl, kib;
    for (auto& [w, c] : r.per_w) per_w[std::to_string(w)] = c;
    for (auto& [w, c] : r.per_w_excl_table) excl[std::to_string(w)] = c;
    for (auto& [w, c] : r.table_kib) kib[std::to_string(w)] = c;
    emit(json{{"params", r.params_name},
              {"ell", r.ell},
              {"per_w", per_w},
              {"per_w_excl_table", excl},
              {"argmin_w", r.argmin_w},
              {"table_kib", kib},
              {"trials", r.trials},
              {"seed", r.seed}},
         o);
    return 0;
}

int run_tables(const CommonOpts& o) {
    const Modulus mod = named_modulus(o.params);
    json j{{"params", mod.name}};
    for (unsigned ell : {2u, 3u}) {
        for (unsigned w : {1u, 2u, 3u, 4u, 6u}) {
            const ParamSet params = make_params(mod, ell, w);
            const double kib = static_cast<double>(table_bytes(params)) / 1024.0;
            j["w" + std::to_string(w) + "_ell" + std::to_string(ell) + "_kib"] =
                std::round(kib * 100.0) / 100.0;
        }
    }
    emit(j, o);
    return 0;
}

int run_strategy(const CommonOpts& o) {
    const Modulus mod = named_modulus(o.params);
    const ParamSet params = make_params(mod, o.ell, o.w);
    const StrategyWeights weights = default_weights(params);
    const StrategyResult r = optimal_strategy(params.digit_rows(), weights);
    const EdgeCounts edges = strategy_edges(r.strategy);
    json splits = json::array();
    for (unsigned s : r.strategy.splits) splits.push_back(s);
    emit(json{{"params", mod.name},
              {"ell", params.ell},
              {"w", params.w},
              {"n_leaves", r.strategy.n_leaves},
              {"splits", splits},
              {"cost_m", static_cast<double>(r.cost_tenths) / 10.0},
              {"left_edges", edges.left},
              {"right_edges", edges.right},
              {"weights_m", {{"left", weights.left_tenths / 10.0},
                             {"right", weights.right_tenths / 10.0}}}},
         o);
    return 0;
}

// Exhaustive toy-prime oracle suite; covers both m=0 and m!=0 windows and
// both compression flag branches.
int run_selftest(const CommonOpts& o) {
    const Modulus mod = named_modulus(o.params);
    json checks = json::array();
    bool ok = true;
    auto record = [&](const std::string& name, bool pass) {
        checks.push_back({{"check", name}, {"pass", pass}});
        ok = ok && pass;
    };

    for (unsigned ell : {2u, 3u}) {
        const unsigned e = ell == 2 ? mod.e2 : mod.e3;
        for (unsigned w = 1; w <= std::min(e, 6u); ++w) {
            const ParamSet params = make_params(mod, ell, w);
            const Cyc g = sample_mu_generator(params, o.seed);
            BaseSelection sel = choose_base(g, g, params);
            DlogTable table = build_table(sel, params);
            Strategy strategy =
                optimal_strategy(params.digit_rows(), default_weights(params)).strategy;

            bool pass = true;
            const bigint order = params.subgroup_order();
            if (order < 100000) {
                Cyc h = cyc_one(params.field());
                for (bigint x = 0; x < order; ++x) {
                    bigint got = digits_to_integer(ph_dlp(h, strategy, table, sel, params), params);
                    if (got != x || naive_ph(h, g, params) != x) { pass = false; break; }
                    h = cyc_mul(h, g);
                }
            } else {
                std::mt19937_64 rng(o.seed ^ (ell * 64 + w));
                for (int t = 0; t < 20 && pass; ++t) {
                    bigint x = random_exponent(rng, order);
                    Cyc h = as_cyc(fp2_pow(g.v, x));
                    pass = digits_to_integer(ph_dlp(h, strategy, table, sel, params), params) == x;
                }
            }
            record("dlog_ell" + std::to_string(ell) + "_w" + std::to_string(w) +
                       (params.shift() ? "_shifted" : "_aligned"),
                   pass);
        }

        // Both compression branches: d1 a unit (flag 0), then d1 divisible
        // by ell with d0 a unit (flag 1).
        const ParamSet params = make_params(mod, ell);
        const bigint order = params.subgroup_order();
        for (unsigned flag : {0u, 1u}) {
            CompressionMatrix m;
            // det is 35 - ell (flag 0) or 5*ell - 7 (flag 1): a unit mod 2 and 3
            m.c0 = 5 % order; m.c1 = 1 % order;
            if (flag == 0) { m.d0 = params.ell; m.d1 = 7 % order; }
            else           { m.d0 = 7 % order;  m.d1 = params.ell; }
            PairingTuple tuple = synth_pairing_tuple(params, m, o.seed + flag);
            OpCounter counter;
            CompressedKey key;
            {
                CounterScope scope(counter);
                key = compress_from_pairings(tuple, params);
            }
            const bigint den_inv =
                zmod::inv(flag == 0 ? m.d1 : m.d0, order);
            auto md = [&](bigint v) -> bigint { v %= order; return v < 0 ? v + order : v; };
            bool pass = key.flag == flag && counter.zmod_inv == 0 && counter.zmod_mul == 0;
            if (flag == 0)
                pass = pass && key.t0 == md(-den_inv * m.d0) && key.t1 == md(-den_inv * m.c1) &&
                       key.t2 == md(den_inv * m.c0);
            else
                pass = pass && key.t0 == md(-den_inv * m.d1) && key.t1 == md(den_inv * m.c1) &&
                       key.t2 == md(-den_inv * m.c0);
            record("compress_ell" + std::to_string(ell) + "_flag" + std::to_string(flag), pass);
        }
    }

    emit(json{{"params", mod.name}, {"pass", ok}, {"checks", checks}}, o);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete logarithms in cyclotomic subgroups of F_{p^2} with "
                 "signed-digit tables and optimal strategies"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_common = [&](CLI::App* sub, bool with_w = true) {
        sub->add_option("--params", o.params, "Parameter set name or 2^a*3^b-1");
        sub->add_option("--ell", o.ell, "Subgroup prime (2 or 3)");
        if (with_w) sub->add_option("--w", o.w, "Window size (1..6)");
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_flag("--pretty", o.pretty, "Indented JSON");
        sub->add_option("--out", o.out, "Write JSON to file instead of stdout");
    };

    auto* solve = app.add_subcommand("solve", "Solve one discrete log");
    std::string base_hex, chal_hex;
    add_common(solve);
    solve->add_option("--base", base_hex, "Base element (hex re,im); sampled if omitted");
    solve->add_option("--challenge", chal_hex, "Challenge element (hex re,im); random power if omitted");

    auto* compress = app.add_subcommand("compress", "Three-dlog compression pipeline");
    bool synthetic = false;
    std::vector<std::string> matrix, tuple_hex;
    add_common(compress);
    compress->add_flag("--synthetic", synthetic, "Synthesize the pairing tuple from --matrix");
    compress->add_option("--matrix", matrix, "c0 d0 c1 d1 (decimal)")->expected(4);
    compress->add_option("--tuple", tuple_hex, "r0 r1 r2 r3 r4 (hex re,im)")->expected(5);

    auto* bench = app.add_subcommand("bench", "Average cost report per window");
    std::vector<unsigned> w_set;
    add_common(bench, false);
    bench->add_option("--w", w_set, "Windows to benchmark (default 1 2 3 4 6)");
    bench->add_option("--trials", o.trials, "Trials per window");

    auto* tables = app.add_subcommand("tables", "Lookup-table sizes (KiB) per subgroup and window");
    add_common(tables, false);

    auto* strategy = app.add_subcommand("strategy", "Optimal strategy splits and cost");
    add_common(strategy);

    auto* selftest = app.add_subcommand("selftest", "Toy-prime exhaustive oracle suite");
    add_common(selftest, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(o, base_hex, chal_hex);
        if (compress->parsed()) return run_compress(o, synthetic, matrix, tuple_hex);
        if (bench->parsed()) return run_bench(o, w_set);
        if (tables->parsed()) return run_tables(o);
        if (strategy->parsed()) return run_strategy(o);
        if (selftest->parsed()) return run_selftest(o);
    } catch (const Error& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}, {"internal", true}}.dump() << "\n";
        return 1;
    }
    return 2;
}
