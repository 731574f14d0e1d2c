#include "cycdl/tables.hpp"

#include <fstream>

#include "cycdl/errors.hpp"

namespace cycdl {

namespace {

// Builds A and C for one candidate base. Returns false as soon as an
// intermediate power hits 1 before ell^{e-1} (the candidate does not
// generate mu_{ell^e}).
bool try_base(const Cyc& cand, const ParamSet& params, BaseSelection& out) {
    const unsigned e = params.e_ell;
    const unsigned m = params.shift();
    const unsigned n = params.digit_rows();

    if (cyc_is_one(cand)) return false;
    out.base = cand;
    out.power_cache.assign(1, cand);
    out.first_column.clear();
    out.first_column.reserve(n);

    Cyc t = cand;
    for (unsigned j = 1; j <= e - 1; ++j) {
        t = (params.ell == 2) ? cyc_sqr(t) : cyc_cube(t);
        if (cyc_is_one(t)) return false;  // order divides ell^j < ell^e
        out.power_cache.push_back(t);
        if (j == m) out.first_column.push_back(t);  // A[0] = base^{ell^m}
        else if (j > m && (j - m) % params.w == 0 && out.first_column.size() < n)
            out.first_column.push_back(t);
    }
    if (m == 0) {
        // A[0] is the base itself; the shifted rows above start at w.
        out.first_column.insert(out.first_column.begin(), cand);
        if (out.first_column.size() > n) out.first_column.resize(n);
        out.power_cache.push_back(cyc_one(params.field()));  // C[e] = base^{ell^e} = 1
    }
    return true;
}

}  // namespace

BaseSelection choose_base(const Cyc& r1, const Cyc& r2, const ParamSet& params) {
    BaseSelection sel;
    sel.label = 1;
    if (try_base(r2, params, sel)) return sel;
    sel.label = 0;
    if (try_base(r1, params, sel)) return sel;
    throw DegenerateInputError("neither r1 nor r2 generates mu_{ell^e_ell}");
}

DlogTable build_table(const BaseSelection& sel, const ParamSet& params) {
    const unsigned n = params.digit_rows();
    const std::uint64_t L = params.radix();
    const std::uint64_t cols = (L - 1 + 1) / 2;  // ceil((L-1)/2)
    if (sel.first_column.size() != n) throw ParamError("base selection first column has wrong length");

    DlogTable table;
    table.rows.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        auto& row = table.rows[i];
        row.reserve(cols);
        row.push_back(sel.first_column[i]);
        for (std::uint64_t j = 1; j < cols; ++j) {
            std::uint64_t v = j + 1;  // entry value: row[j] = head^{j+1}
            if (v % 2 == 0) row.push_back(cyc_sqr(row[v / 2 - 1]));
            else if (v % 3 == 0) row.push_back(cyc_cube(row[v / 3 - 1]));
            else row.push_back(cyc_mul(row[v - 2], row[0]));
        }
    }
    return table;
}

std::uint64_t table_bytes(const ParamSet& params) {
    const std::uint64_t L = params.radix();
    const std::uint64_t cols = (L - 1 + 1) / 2;
    const std::uint64_t entry = 2 * params.field().element_bytes();
    return static_cast<std::uint64_t>(params.digit_rows()) * cols * entry;
}

void dump_table(const DlogTable& table, const ParamSet& params, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParamError("cannot open table dump file " + path);
    out << params.ell << " " << params.e_ell << " " << params.w << " "
        << params.field().bit_length() << "\n";
    for (const auto& row : table.rows)
        for (const auto& cell : row) out << fp2_to_hex(cell.v) << "\n";
}

}  // namespace cycdl
