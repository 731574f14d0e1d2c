#pragma once

#include <cstdint>
#include <vector>

#include "cycdl/params.hpp"

namespace cycdl {

// Output of the runtime base choice: the chosen generator, the first
// column A of the lookup table and the power cache C.
//
//   A[i] = base^{ell^{m + w*i}},  i in [0, floor(e/w))
//   C[j] = base^{ell^j},          j in [0, e-1], plus C[e] = 1 when w | e
struct BaseSelection {
    unsigned label = 1;  // 1: r2 chosen, 0: r1 chosen
    Cyc base;
    std::vector<Cyc> first_column;  // A
    std::vector<Cyc> power_cache;   // C
};

// Signed-digit lookup table, rows floor(e/w) x cols ceil((L-1)/2):
//   T[i][j] = base^{(j+1) * L^i * ell^m}
struct DlogTable {
    std::vector<std::vector<Cyc>> rows;
};

// Raises r2 through ell-powers, recording the power cache and first
// column; restarts identically with r1 if a checkpoint hits 1 before
// ell^{e-1}. At most 2(e-1) ell-powerings, all squarings/cubings.
BaseSelection choose_base(const Cyc& r1, const Cyc& r2, const ParamSet& params);

// Fills each row from its first column: entry value v = j+1 comes from a
// cyclotomic squaring when v is even, a cubing when v is divisible by 3,
// and otherwise one multiplication by the row head.
DlogTable build_table(const BaseSelection& sel, const ParamSet& params);

// floor(e/w) * ceil((L-1)/2) * 2 * 8*ceil(bits/64) bytes.
std::uint64_t table_bytes(const ParamSet& params);

// Debug-only binary dump: header (ell, e_ell, w, bit_length) then
// row-major hex entries, one per line.
void dump_table(const DlogTable& table, const ParamSet& params, const std::string& path);

}  // namespace cycdl
