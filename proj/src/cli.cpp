#include "wsat/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "wsat/algebra.hpp"
#include "wsat/bootstrap.hpp"
#include "wsat/constructions.hpp"
#include "wsat/formulas.hpp"
#include "wsat/search.hpp"
#include "wsat/tables.hpp"

namespace wsat::cli {

namespace {

struct HostSpec {
    Graph graph;
    std::optional<SideLabeling> sides;
    std::string desc;
};

HostSpec parse_host(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("host: expected complete:N | bipartite:L,M | file:PATH");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    HostSpec host;
    host.desc = text;
    if (kind == "complete") {
        host.graph = complete_graph(std::stoi(rest));
    } else if (kind == "bipartite") {
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("host: bipartite:L,M");
        auto [g, sides] = complete_bipartite(std::stoi(rest.substr(0, comma)),
                                             std::stoi(rest.substr(comma + 1)));
        host.graph = std::move(g);
        host.sides = sides;
    } else if (kind == "file") {
        std::ifstream f(rest);
        if (!f) throw std::invalid_argument("host: cannot open file " + rest);
        auto parsed = parse_edge_list(f);
        host.graph = std::move(parsed.graph);
        host.sides = parsed.sides;
    } else {
        throw std::invalid_argument("host: unknown kind '" + kind + "'");
    }
    return host;
}

ParsedGraph read_input(const std::string& path, std::istream& in) {
    if (path == "-") return parse_edge_list(in);
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("input: cannot open file " + path);
    return parse_edge_list(f);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

void emit_blocks(std::ostream& out, const BlockLayout& layout) {
    for (const auto& [name, range] : layout.entries()) {
        out << "# block " << name << " ";
        if (range.first >= range.second)
            out << "empty";
        else
            out << range.first << ".." << range.second - 1;
        out << "\n";
    }
}

struct ConstructArgs {
    std::string family;
    int n = 0, s = 0, t = 0, k = 0, l = 0, m = 0, r = 0;
};

void run_construct(const ConstructArgs& a, std::ostream& out) {
    if (a.family == "gn") {
        auto c = construct_gn(a.n, a.t);
        out << "n " << c.graph.vertex_count() << "\n";
        emit_blocks(out, c.layout);
        for (const Edge& e : c.graph.edges()) out << e.u << " " << e.v << "\n";
    } else if (a.family == "fn") {
        auto c = construct_fn_ktt1(a.n, a.t);
        out << "n " << c.graph.vertex_count() << "\n";
        emit_blocks(out, c.layout);
        for (const Edge& e : c.graph.edges()) out << e.u << " " << e.v << "\n";
    } else if (a.family == "hn") {
        auto c = construct_hn(a.n, a.s, a.t);
        out << "n " << c.graph.vertex_count() << "\n";
        emit_blocks(out, c.layout);
        for (const Edge& e : c.graph.edges()) out << e.u << " " << e.v << "\n";
    } else if (a.family == "fkt") {
        auto c = construct_fkt(a.n, a.k, a.t);
        out << "n " << c.graph.vertex_count() << "\n";
        emit_blocks(out, c.layout);
        for (const Edge& e : c.graph.edges()) out << e.u << " " << e.v << "\n";
    } else if (a.family == "lovasz") {
        int r = a.r > 0 ? a.r : a.t;
        Graph g = construct_lovasz(a.n, r);
        BlockLayout layout;
        layout.add("X", 0, r - 2);
        layout.add("Z", r - 2, a.n);
        out << "n " << g.vertex_count() << "\n";
        emit_blocks(out, layout);
        for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    } else if (a.family == "g0") {
        auto c = construct_g0(a.l, a.m, a.s, a.t);
        out << "n " << c.graph.vertex_count() << "\n";
        out << "left " << c.sides.left_count << "\n";
        emit_blocks(out, c.layout);
        for (const Edge& e : c.graph.edges()) out << e.u << " " << e.v << "\n";
    } else {
        throw std::invalid_argument("construct: unknown family '" + a.family +
                                    "' (gn|fn|hn|fkt|lovasz|g0)");
    }
}

Graph build_named_construction(const std::string& family, const HostSpec& host,
                               const Pattern& pattern) {
    int n = host.graph.vertex_count();
    auto sizes = [&]() -> std::vector<int> {
        if (pattern.kind() != Pattern::Kind::Multipartite)
            throw std::invalid_argument("--construction: pattern must be multipartite");
        return pattern.class_sizes();
    }();
    if (family == "gn") {
        if (sizes.size() != 2 || sizes[0] != sizes[1])
            throw std::invalid_argument("--construction gn expects pattern kst:t,t");
        return construct_gn(n, sizes[0]).graph;
    }
    if (family == "fn") {
        if (sizes.size() != 2 || sizes[1] != sizes[0] + 1)
            throw std::invalid_argument("--construction fn expects pattern kst:t,t+1");
        return construct_fn_ktt1(n, sizes[0]).graph;
    }
    if (family == "hn") {
        if (sizes.size() != 2 || sizes[0] >= sizes[1])
            throw std::invalid_argument("--construction hn expects pattern kst:s,t with s < t");
        return construct_hn(n, sizes[0], sizes[1]).graph;
    }
    if (family == "fkt") {
        for (int a : sizes)
            if (a != sizes[0])
                throw std::invalid_argument("--construction fkt expects pattern ktk:t^k");
        return construct_fkt(n, static_cast<int>(sizes.size()), sizes[0]).graph;
    }
    if (family == "lovasz") {
        for (int a : sizes)
            if (a != 1) throw std::invalid_argument("--construction lovasz expects pattern clique:r");
        return construct_lovasz(n, static_cast<int>(sizes.size()));
    }
    if (family == "g0") {
        if (!host.sides) throw std::invalid_argument("--construction g0 needs a bipartite host");
        if (sizes.size() != 2) throw std::invalid_argument("--construction g0 expects kst:s,t");
        return construct_g0(host.sides->left_size(), host.sides->right_size(), sizes[0], sizes[1])
            .graph;
    }
    throw std::invalid_argument("--construction: unknown family '" + family + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"weak-saturation laboratory"};
    app.require_subcommand(0, 1);
    unsigned long long seed = 0;
    int threads = 1;
    app.add_option("--seed", seed, "seed for all randomized components")->capture_default_str();
    app.add_option("--threads", threads, "worker threads for search and sweeps")
        ->capture_default_str();

    // construct
    ConstructArgs cons;
    auto* sc_construct = app.add_subcommand("construct", "emit a named construction as an edge list");
    sc_construct->add_option("--family", cons.family, "gn|fn|hn|fkt|lovasz|g0")->required();
    sc_construct->add_option("--n", cons.n, "vertex count");
    sc_construct->add_option("--s", cons.s, "small class size");
    sc_construct->add_option("--t", cons.t, "class size t");
    sc_construct->add_option("--k", cons.k, "number of classes");
    sc_construct->add_option("--l", cons.l, "left side size");
    sc_construct->add_option("--m", cons.m, "right side size");
    sc_construct->add_option("--r", cons.r, "clique order (lovasz; defaults to --t)");

    // close / verify
    std::string host_text, pattern_text, input_path, construction, trace_path;
    bool bisaturated = false;
    auto* sc_close = app.add_subcommand("close", "compute the H-bootstrap closure of a graph");
    sc_close->add_option("--host", host_text, "complete:N | bipartite:L,M | file:PATH")->required();
    sc_close->add_option("--pattern", pattern_text, "pattern literal")->required();
    sc_close->add_option("--input", input_path, "edge-list file, or - for stdin")->required();
    sc_close->add_flag("--bisaturated", bisaturated, "side-respecting closure");
    sc_close->add_option("--trace", trace_path, "write the closure trace JSON here");

    auto* sc_verify = app.add_subcommand("verify", "verify weak saturation of a graph");
    sc_verify->add_option("--host", host_text, "complete:N | bipartite:L,M | file:PATH")->required();
    sc_verify->add_option("--pattern", pattern_text, "pattern literal")->required();
    sc_verify->add_option("--input", input_path, "edge-list file, or - for stdin");
    sc_verify->add_option("--construction", construction, "verify a named construction instead");
    sc_verify->add_flag("--bisaturated", bisaturated, "side-respecting closure");
    sc_verify->add_option("--trace", trace_path, "write the closure trace JSON here");

    // certify
    int cert_n = 0, cert_t = 0;
    unsigned long long cert_p = 0;
    std::string validate_text, json_path;
    auto* sc_certify = app.add_subcommand("certify", "rank lower-bound certificate for K_{t,t}");
    sc_certify->add_option("--n", cert_n, "host size")->required();
    sc_certify->add_option("--t", cert_t, "pattern half size")->required();
    sc_certify->add_option("--p", cert_p, "odd prime modulus > n (default: smallest prime > max(n,1000))");
    sc_certify->add_option("--validate", validate_text, "exhaustive | sampled:K (default: auto)");
    sc_certify->add_option("--json", json_path, "write the certificate JSON here");

    // search
    unsigned long long budget = 10'000'000;
    bool oriented = false;
    auto* sc_search = app.add_subcommand("search", "exact wsat by exhaustive search");
    sc_search->add_option("--host", host_text, "complete:N | bipartite:L,M")->required();
    sc_search->add_option("--pattern", pattern_text, "pattern literal")->required();
    sc_search->add_flag("--oriented", oriented, "bisaturation (bipartite hosts only)");
    sc_search->add_option("--budget", budget, "verification-call budget")->capture_default_str();
    sc_search->add_option("--json", json_path, "write the result JSON here");

    // tables
    std::string theorem, t_range = "2..2", s_range = "2..2", n_range, l_range;
    int n_max = 0;
    bool no_certificates = false, no_oracles = false;
    auto* sc_tables = app.add_subcommand("tables", "reproduce a theorem table as CSV");
    sc_tables->add_option("--theorem", theorem, "ktt|ktt1|genst|clique|bip|rel")->required();
    sc_tables->add_option("--t", t_range, "t range, e.g. 2..4");
    sc_tables->add_option("--s", s_range, "s range (genst/bip)");
    sc_tables->add_option("--n", n_range, "n range, e.g. 6..12 (default: from guarantee bound)");
    sc_tables->add_option("--n-max", n_max, "n upper end, starting at the guarantee bound");
    sc_tables->add_option("--l", l_range, "l range (bip/rel)");
    sc_tables->add_flag("--no-certificates", no_certificates, "skip certificate column");
    sc_tables->add_flag("--no-oracles", no_oracles, "skip oracle column");
    sc_tables->add_option("--json", json_path, "write rows as JSON here");

    std::vector<const char*> argv;
    argv.push_back("wsat");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(sc_construct)) {
            run_construct(cons, out);
            return 0;
        }
        if (app.got_subcommand(sc_close)) {
            HostSpec host = parse_host(host_text);
            Pattern pattern = Pattern::parse(pattern_text);
            ParsedGraph input = read_input(input_path, in);
            ClosureResult result{Graph{}, {}};
            if (bisaturated) {
                if (!host.sides)
                    throw std::invalid_argument("--bisaturated needs a bipartite host");
                if (pattern.kind() != Pattern::Kind::Multipartite ||
                    pattern.class_sizes().size() != 2)
                    throw std::invalid_argument("--bisaturated needs a kst pattern");
                result = bisaturated_closure(input.graph, *host.sides,
                                             pattern.class_sizes()[0], pattern.class_sizes()[1]);
            } else {
                result = closure(input.graph, host.graph, pattern);
            }
            bool complete = result.graph == host.graph;
            if (!trace_path.empty()) write_file(trace_path, trace_to_json(result.trace));
            out << "# closure complete: " << (complete ? "true" : "false")
                << ", added: " << result.trace.steps.size() << "\n";
            write_edge_list(out, result.graph,
                            host.sides && bisaturated ? &*host.sides : nullptr);
            return complete ? 0 : 1;
        }
        if (app.got_subcommand(sc_verify)) {
            HostSpec host = parse_host(host_text);
            Pattern pattern = Pattern::parse(pattern_text);
            Graph g;
            if (!construction.empty() && !input_path.empty())
                throw std::invalid_argument("verify: give either --input or --construction");
            if (!construction.empty()) {
                g = build_named_construction(construction, host, pattern);
            } else if (!input_path.empty()) {
                g = read_input(input_path, in).graph;
            } else {
                throw std::invalid_argument("verify: need --input or --construction");
            }
            if (bisaturated) {
                if (!host.sides)
                    throw std::invalid_argument("--bisaturated needs a bipartite host");
                if (pattern.kind() != Pattern::Kind::Multipartite ||
                    pattern.class_sizes().size() != 2)
                    throw std::invalid_argument("--bisaturated needs a kst pattern");
                auto result = bisaturated_closure(g, *host.sides, pattern.class_sizes()[0],
                                                  pattern.class_sizes()[1]);
                bool complete = result.graph == host.graph;
                if (!trace_path.empty()) write_file(trace_path, trace_to_json(result.trace));
                out << "closure_complete " << (complete ? "true" : "false") << "\n";
                out << "bisaturated " << (complete ? "true" : "false") << "\n";
                return complete ? 0 : 1;
            }
            auto verdict = verify_weakly_saturated(g, host.graph, pattern);
            if (!trace_path.empty()) write_file(trace_path, trace_to_json(verdict.trace));
            out << "pattern_free " << (verdict.is_pattern_free ? "true" : "false") << "\n";
            out << "closure_complete " << (verdict.closure_complete ? "true" : "false") << "\n";
            out << "weakly_saturated " << (verdict.is_weakly_saturated ? "true" : "false") << "\n";
            return verdict.is_weakly_saturated ? 0 : 1;
        }
        if (app.got_subcommand(sc_certify)) {
            std::uint64_t p = cert_p ? cert_p : default_certificate_prime(cert_n);
            ValidationMode mode = ValidationMode::auto_mode();
            if (!validate_text.empty()) {
                if (validate_text == "exhaustive") {
                    mode = ValidationMode::exhaustive();
                } else if (validate_text.rfind("sampled:", 0) == 0) {
                    mode = ValidationMode::sampled(std::stol(validate_text.substr(8)));
                } else {
                    throw std::invalid_argument("--validate: exhaustive | sampled:K");
                }
            }
            auto cert = certify_lower_bound(cert_n, cert_t, p, mode, seed);
            if (!json_path.empty()) write_file(json_path, cert.to_json());
            out << "p " << cert.p << "\n";
            out << "rank_full " << cert.rank_full << "\n";
            out << "rank_construction " << cert.rank_construction << "\n";
            out << "formula_value " << cert.formula_value << "\n";
            out << "validation " << cert.validation_mode << " copies " << cert.dependence_checks
                << "\n";
            out << "verdict " << cert.verdict << "\n";
            return 0;
        }
        if (app.got_subcommand(sc_search)) {
            SearchOptions opt;
            opt.budget = budget;
            opt.threads = threads;
            SearchResult result;
            HostSpec host = parse_host(host_text);
            Pattern pattern = Pattern::parse(pattern_text);
            if (host.sides) {
                if (pattern.kind() != Pattern::Kind::Multipartite ||
                    pattern.class_sizes().size() != 2)
                    throw std::invalid_argument("search: bipartite hosts need a kst pattern");
                result = wsat_bruteforce_bipartite(host.sides->left_size(),
                                                   host.sides->right_size(),
                                                   pattern.class_sizes()[0],
                                                   pattern.class_sizes()[1], oriented, opt);
            } else {
                if (oriented)
                    throw std::invalid_argument("search: --oriented needs a bipartite host");
                result = wsat_bruteforce(host.graph, pattern, opt);
            }
            if (!json_path.empty()) write_file(json_path, result.to_json());
            out << "minimum " << result.minimum << "\n";
            out << "explored " << result.explored << "\n";
            out << "vacuous " << (result.vacuous ? "true" : "false") << "\n";
            out << "# witness\n";
            write_edge_list(out, result.witness);
            return 0;
        }
        if (app.got_subcommand(sc_tables)) {
            TableSpec spec;
            spec.theorem = theorem;
            std::tie(spec.t_lo, spec.t_hi) = parse_range(t_range);
            std::tie(spec.s_lo, spec.s_hi) = parse_range(s_range);
            if (!n_range.empty()) std::tie(spec.n_lo, spec.n_hi) = parse_range(n_range);
            if (n_max > 0) spec.n_hi = n_max;
            if (spec.n_hi == 0) spec.n_hi = spec.n_lo;
            if (!l_range.empty()) std::tie(spec.l_lo, spec.l_hi) = parse_range(l_range);
            spec.seed = seed;
            spec.threads = threads;
            spec.with_certificates = !no_certificates;
            spec.with_oracles = !no_oracles;
            auto rows = tables(spec);
            if (!json_path.empty()) write_file(json_path, table_rows_json(rows));
            out << kTableCsvHeader << "\n";
            bool all_ok = true;
            for (const TableRow& row : rows) {
                out << table_row_csv(row) << "\n";
                all_ok = all_ok && row.consistent();
            }
            return all_ok ? 0 : 1;
        }
        err << app.help();
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace wsat::cli
