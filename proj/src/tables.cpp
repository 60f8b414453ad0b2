#include "wsat/tables.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "wsat/algebra.hpp"
#include "wsat/bootstrap.hpp"
#include "wsat/constructions.hpp"
#include "wsat/formulas.hpp"
#include "wsat/search.hpp"

namespace wsat {

const char* const kTableCsvHeader =
    "theorem,n,s,t,k,l,m,formula,construction_edges,closure_verified,certificate_rank,oracle";

bool TableRow::consistent() const {
    if (skipped) return true;
    if (closure_verified && !*closure_verified) return false;
    if (formula_value && construction_edges && *formula_value != *construction_edges) return false;
    if (formula_value && certificate_rank && *formula_value != *certificate_rank) return false;
    if (formula_value && oracle_value && *formula_value != *oracle_value) return false;
    return true;
}

namespace {

constexpr int kOracleMaxCompleteN = 5;
constexpr int kOracleMaxBipartiteEdges = 12;

bool verify_construction(const Graph& g, const Graph& host, const Pattern& h) {
    return verify_weakly_saturated(g, host, h).is_weakly_saturated;
}

void fill_certificate(TableRow& row, int n, int t, std::uint64_t seed) {
    auto cert = certify_lower_bound(n, t, default_certificate_prime(n),
                                    ValidationMode::auto_mode(), seed);
    row.certificate_rank = cert.verdict;
}

TableRow skipped_row(std::string theorem, std::optional<int> n, std::optional<int> s,
                     std::optional<int> t, std::string note) {
    TableRow row;
    row.theorem = std::move(theorem);
    row.n = n;
    row.s = s;
    row.t = t;
    row.skipped = true;
    row.note = std::move(note);
    return row;
}

void ktt_rows(const TableSpec& spec, std::vector<TableRow>& rows) {
    for (int t = spec.t_lo; t <= spec.t_hi; ++t) {
        int guarantee = 3 * t - 3;
        int n_lo = spec.n_lo > 0 ? spec.n_lo : guarantee;
        for (int n = n_lo; n <= spec.n_hi; ++n) {
            if (n < guarantee || n < 2 * t - 1) {
                rows.push_back(skipped_row("ktt", n, std::nullopt, t, "below guarantee n >= 3t-3"));
                continue;
            }
            TableRow row;
            row.theorem = "ktt";
            row.n = n;
            row.t = t;
            row.formula_value = wsat_ktt_value(n, t);
            auto c = construct_gn(n, t);
            row.construction_edges = c.graph.edge_count();
            row.closure_verified =
                verify_construction(c.graph, complete_graph(n), Pattern::kst(t, t));
            if (spec.with_certificates && n >= 2 * t) fill_certificate(row, n, t, spec.seed);
            if (spec.with_oracles && n <= kOracleMaxCompleteN) {
                SearchOptions opt;
                opt.threads = spec.threads;
                row.oracle_value =
                    wsat_bruteforce(complete_graph(n), Pattern::kst(t, t), opt).minimum;
            }
            rows.push_back(std::move(row));
        }
    }
}

void ktt1_rows(const TableSpec& spec, std::vector<TableRow>& rows) {
    for (int t = spec.t_lo; t <= spec.t_hi; ++t) {
        int guarantee = std::max(3 * t - 3, 2 * t + 1);
        int n_lo = spec.n_lo > 0 ? spec.n_lo : guarantee;
        for (int n = n_lo; n <= spec.n_hi; ++n) {
            if (n < guarantee) {
                rows.push_back(
                    skipped_row("ktt1", n, std::nullopt, t, "below guarantee n >= max(3t-3,2t+1)"));
                continue;
            }
            TableRow row;
            row.theorem = "ktt1";
            row.n = n;
            row.t = t;
            row.formula_value = wsat_ktt1_value(n, t);
            auto c = construct_fn_ktt1(n, t);
            row.construction_edges = c.graph.edge_count();
            row.closure_verified =
                verify_construction(c.graph, complete_graph(n), Pattern::kst(t, t + 1));
            if (spec.with_oracles && n <= kOracleMaxCompleteN) {
                SearchOptions opt;
                opt.threads = spec.threads;
                row.oracle_value =
                    wsat_bruteforce(complete_graph(n), Pattern::kst(t, t + 1), opt).minimum;
            }
            rows.push_back(std::move(row));
        }
    }
}

void clique_rows(const TableSpec& spec, std::vector<TableRow>& rows) {
    for (int r = spec.t_lo; r <= spec.t_hi; ++r) {
        int n_lo = spec.n_lo > 0 ? spec.n_lo : r;
        for (int n = n_lo; n <= spec.n_hi; ++n) {
            if (r < 2 || n < r) {
                rows.push_back(skipped_row("clique", n, std::nullopt, r, "need 2 <= r <= n"));
                continue;
            }
            TableRow row;
            row.theorem = "clique";
            row.n = n;
            row.t = r;
            row.formula_value = wsat_clique_value(n, r);
            Graph g = construct_lovasz(n, r);
            row.construction_edges = g.edge_count();
            row.closure_verified = verify_construction(g, complete_graph(n), Pattern::clique(r));
            if (spec.with_oracles && n <= kOracleMaxCompleteN) {
                SearchOptions opt;
                opt.threads = spec.threads;
                row.oracle_value =
                    wsat_bruteforce(complete_graph(n), Pattern::clique(r), opt).minimum;
            }
            rows.push_back(std::move(row));
        }
    }
}

void genst_rows(const TableSpec& spec, std::vector<TableRow>& rows) {
    for (int s = spec.s_lo; s <= spec.s_hi; ++s) {
        for (int t = spec.t_lo; t <= spec.t_hi; ++t) {
            if (s >= t) continue;
            int guarantee = 2 * (s + t) - 3;
            int n_lo = spec.n_lo > 0 ? spec.n_lo : guarantee;
            for (int n = n_lo; n <= spec.n_hi; ++n) {
                if (n < guarantee) {
                    rows.push_back(skipped_row("genst", n, s, t, "below guarantee n >= 2(s+t)-3"));
                    continue;
                }
                TableRow row;
                row.theorem = "genst";
                row.n = n;
                row.s = s;
                row.t = t;
                row.formula_value = genst_upper_value(n, s, t);
                row.formula_lower = genst_lower_value(n, s, t);
                if (*row.formula_value - *row.formula_lower !=
                    static_cast<long long>(t - s - 1) * (s - 1))
                    throw std::logic_error("genst: gap identity violated");
                auto c = construct_hn(n, s, t);
                row.construction_edges = c.graph.edge_count();
                row.closure_verified =
                    verify_construction(c.graph, complete_graph(n), Pattern::kst(s, t));
                if (spec.with_oracles && n <= kOracleMaxCompleteN) {
                    SearchOptions opt;
                    opt.threads = spec.threads;
                    row.oracle_value =
                        wsat_bruteforce(complete_graph(n), Pattern::kst(s, t), opt).minimum;
                }
                rows.push_back(std::move(row));
            }
        }
    }
}

void bip_rows(const TableSpec& spec, std::vector<TableRow>& rows) {
    for (int s = spec.s_lo; s <= spec.s_hi; ++s) {
        for (int t = spec.t_lo; t <= spec.t_hi; ++t) {
            if (s > t) continue;
            int l_lo = spec.l_lo > 0 ? spec.l_lo : std::max(s, t - 1);
            int l_hi = spec.l_hi > 0 ? spec.l_hi : l_lo + 2;
            for (int l = l_lo; l <= l_hi; ++l) {
                for (int m = std::max(l, t); m <= l_hi; ++m) {
                    if (s < 2 || s > std::min(l, t) || t > m || l < t - 1) {
                        TableRow row = skipped_row("bip", std::nullopt, s, t,
                                                   "need 2 <= s <= min(l,t), t <= m, l >= t-1");
                        row.l = l;
                        row.m = m;
                        rows.push_back(std::move(row));
                        continue;
                    }
                    TableRow row;
                    row.theorem = "bip";
                    row.s = s;
                    row.t = t;
                    row.l = l;
                    row.m = m;
                    row.formula_value = wsat_bipartite_value(l, m, s, t);
                    auto c = construct_g0(l, m, s, t);
                    row.construction_edges = c.graph.edge_count();
                    auto [host, sides] = complete_bipartite(l, m);
                    (void)sides;
                    row.closure_verified = verify_construction(c.graph, host, Pattern::kst(s, t));
                    if (spec.with_oracles && l * m <= kOracleMaxBipartiteEdges) {
                        SearchOptions opt;
                        opt.threads = spec.threads;
                        row.oracle_value =
                            wsat_bruteforce_bipartite(l, m, s, t, false, opt).minimum;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
}

void rel_rows(const TableSpec& spec, std::vector<TableRow>& rows) {
    for (int t = spec.t_lo; t <= spec.t_hi; ++t) {
        int guarantee = std::max(3 * t - 3, 2 * t);
        int n_lo = spec.n_lo > 0 ? spec.n_lo : guarantee;
        for (int n = n_lo; n <= spec.n_hi; ++n) {
            if (n < guarantee) {
                rows.push_back(
                    skipped_row("rel", n, std::nullopt, t, "need n >= 3t-3 and l,m >= t"));
                continue;
            }
            int l = (spec.l_lo >= t && spec.l_lo <= n - t) ? spec.l_lo : n / 2;
            int m = n - l;
            TableRow row;
            row.theorem = "rel";
            row.n = n;
            row.t = t;
            row.l = l;
            row.m = m;
            row.formula_value = wsat_ktt_value(n, t);
            if (*row.formula_value != wsat_bipartite_value(l, m, t, t) + binom2(t))
                throw std::logic_error("rel: identity wsat(n) = wsat(K_{l,m}) + C(t,2) violated");
            auto gn = construct_gn(n, t);
            row.construction_edges = gn.graph.edge_count();
            auto g0 = construct_g0(l, m, t, t);
            auto [host, sides] = complete_bipartite(l, m);
            (void)sides;
            bool ok_gn = verify_construction(gn.graph, complete_graph(n), Pattern::kst(t, t));
            bool ok_g0 = verify_construction(g0.graph, host, Pattern::kst(t, t));
            row.closure_verified = ok_gn && ok_g0;
            if (spec.with_certificates && n >= 2 * t) fill_certificate(row, n, t, spec.seed);
            rows.push_back(std::move(row));
        }
    }
}

}  // namespace

std::vector<TableRow> tables(const TableSpec& spec) {
    std::vector<TableRow> rows;
    if (spec.theorem == "ktt")
        ktt_rows(spec, rows);
    else if (spec.theorem == "ktt1")
        ktt1_rows(spec, rows);
    else if (spec.theorem == "genst")
        genst_rows(spec, rows);
    else if (spec.theorem == "clique")
        clique_rows(spec, rows);
    else if (spec.theorem == "bip")
        bip_rows(spec, rows);
    else if (spec.theorem == "rel")
        rel_rows(spec, rows);
    else
        throw std::invalid_argument("tables: unknown theorem id '" + spec.theorem +
                                    "' (ktt|ktt1|genst|clique|bip|rel)");
    return rows;
}

namespace {

template <typename T>
std::string cell(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
    else return std::to_string(*v);
}

}  // namespace

std::string table_row_csv(const TableRow& row) {
    std::ostringstream out;
    out << row.theorem << ',' << cell(row.n) << ',' << cell(row.s) << ',' << cell(row.t) << ','
        << cell(row.k) << ',' << cell(row.l) << ',' << cell(row.m) << ',' << cell(row.formula_value)
        << ',' << cell(row.construction_edges) << ','
        << (row.skipped ? "skipped" : cell(row.closure_verified)) << ','
        << cell(row.certificate_rank) << ',' << cell(row.oracle_value);
    return out.str();
}

std::string table_rows_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableRow& row : rows) {
        nlohmann::json j;
        j["theorem"] = row.theorem;
        auto put = [&j](const char* key, const auto& opt) {
            if (opt) j[key] = *opt;
        };
        put("n", row.n);
        put("s", row.s);
        put("t", row.t);
        put("k", row.k);
        put("l", row.l);
        put("m", row.m);
        put("formula", row.formula_value);
        put("formula_lower", row.formula_lower);
        put("construction_edges", row.construction_edges);
        put("closure_verified", row.closure_verified);
        put("certificate_rank", row.certificate_rank);
        put("oracle", row.oracle_value);
        if (row.skipped) j["skipped"] = true;
        if (!row.note.empty()) j["note"] = row.note;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace wsat
