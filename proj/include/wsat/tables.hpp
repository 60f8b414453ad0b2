#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wsat {

// One reproduction row: construction built, formula evaluated, closure
// verified, certificate/oracle columns filled where feasible.
struct TableRow {
    std::string theorem;
    std::optional<int> n, s, t, k, l, m;
    std::optional<long long> formula_value;
    std::optional<long long> formula_lower;  // genst only
    std::optional<long long> construction_edges;
    std::optional<bool> closure_verified;
    std::optional<long long> certificate_rank;
    std::optional<long long> oracle_value;
    bool skipped = false;
    std::string note;

    // When every comparable field is present, they must agree and the closure
    // must verify.
    bool consistent() const;
};

struct TableSpec {
    std::string theorem;  // ktt | ktt1 | genst | clique | bip | rel
    int t_lo = 2, t_hi = 2;
    int s_lo = 2, s_hi = 2;
    int n_lo = 0;  // 0 = start at the theorem's guarantee bound
    int n_hi = 0;
    int l_lo = 0, l_hi = 0;  // bip/rel; 0 = derived defaults
    std::uint64_t seed = 0;
    int threads = 1;
    bool with_certificates = true;
    bool with_oracles = true;
};

std::vector<TableRow> tables(const TableSpec& spec);

extern const char* const kTableCsvHeader;  // fixed column order
std::string table_row_csv(const TableRow& row);
std::string table_rows_json(const std::vector<TableRow>& rows);

}  // namespace wsat
