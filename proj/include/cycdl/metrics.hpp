#pragma once

#include <map>

#include "cycdl/compress.hpp"

namespace cycdl {

// Averaged m-equivalent costs of the compression pipeline per window w.
// per_w covers choose_base + build_table + three dlogs + recombination;
// per_w_excl_table subtracts the table-construction phase.
struct CostReport {
    std::string params_name;
    unsigned ell = 0;
    std::map<unsigned, double> per_w;
    std::map<unsigned, double> per_w_excl_table;
    std::map<unsigned, double> table_kib;
    unsigned argmin_w = 0;  // argmin of per_w
    unsigned trials = 0;
    std::uint64_t seed = 0;
};

// Runs `trials` synthetic compressions per window with fresh counters
// (tuple synthesis is outside the counting scope) and averages the
// m-equivalent cost, weights m=1, s=0.8.
CostReport run_cost_bench(const Modulus& mod, unsigned ell, const std::vector<unsigned>& w_set,
                          unsigned trials, std::uint64_t seed);

}  // namespace cycdl
