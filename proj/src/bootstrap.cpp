#include "wsat/bootstrap.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace wsat {

namespace {

// Detection used by the closure engine: the specialized kernel for two-class
// multipartite patterns, the generic backtracker otherwise. Equivalence of
// the two routes is property-tested.
std::optional<CopyWitness> engine_detect(const Graph& g, const Pattern& h, Edge e) {
    if (h.kind() == Pattern::Kind::Multipartite && h.class_sizes().size() == 2) {
        int a = h.class_sizes()[0], b = h.class_sizes()[1];
        int s = std::min(a, b), t = std::max(a, b);
        auto w = kst_copy_through_edge(g, s, t, e);
        if (w && a > b) std::swap(w->classes[0], w->classes[1]);
        return w;
    }
    return contains_copy_through_edge(g, h, e);
}

struct Detector {
    virtual ~Detector() = default;
    virtual std::optional<CopyWitness> operator()(const Graph& g, Edge e) const = 0;
};

struct PatternDetector final : Detector {
    const Pattern& h;
    explicit PatternDetector(const Pattern& pattern) : h(pattern) {}
    std::optional<CopyWitness> operator()(const Graph& g, Edge e) const override {
        return engine_detect(g, h, e);
    }
};

struct OrientedDetector final : Detector {
    int h_left, h_right;
    VertexSet left_mask, right_mask;
    OrientedDetector(int hl, int hr, const SideLabeling& sides)
        : h_left(hl), h_right(hr), left_mask(sides.left_set()), right_mask(sides.right_set()) {}
    std::optional<CopyWitness> operator()(const Graph& g, Edge e) const override {
        return kst_copy_through_edge_masked(g, h_left, h_right, e, left_mask, right_mask);
    }
};

ClosureResult run_closure(const Graph& g, const Detector& detect,
                          std::span<const Edge> scan_order) {
    ClosureResult out{g, {}};
    out.trace.initial_fingerprint = g.fingerprint();
    Graph& cur = out.graph;
    std::vector<bool> added(scan_order.size(), false);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < scan_order.size(); ++i) {
            if (added[i]) continue;
            Edge e = scan_order[i];
            cur.add_edge(e);
            if (auto w = detect(cur, e)) {
                out.trace.steps.push_back({e, std::move(*w)});
                added[i] = true;
                progress = true;
                break;  // restart the scan
            }
            cur.remove_edge(e);
        }
    }
    out.trace.final_fingerprint = cur.fingerprint();
    return out;
}

void check_spanning(const Graph& g, const Graph& f, const char* what) {
    if (g.vertex_count() != f.vertex_count() || !g.is_spanning_subgraph_of(f))
        throw std::invalid_argument(std::string(what) + ": G is not a spanning subgraph of F");
}

}  // namespace

ClosureResult closure(const Graph& g, const Graph& f, const Pattern& h) {
    check_spanning(g, f, "closure");
    auto missing = edge_complement_list(g, f);
    return run_closure(g, PatternDetector(h), missing);
}

ClosureResult closure_with_order(const Graph& g, const Graph& f, const Pattern& h,
                                 std::span<const Edge> scan_order) {
    check_spanning(g, f, "closure_with_order");
    auto missing = edge_complement_list(g, f);
    if (scan_order.size() != missing.size())
        throw std::invalid_argument("closure_with_order: order is not a permutation of E(F)\\E(G)");
    std::vector<Edge> sorted(scan_order.begin(), scan_order.end());
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), missing.begin()))
        throw std::invalid_argument("closure_with_order: order is not a permutation of E(F)\\E(G)");
    return run_closure(g, PatternDetector(h), scan_order);
}

ClosureResult closure_rounds(const Graph& g, const Graph& f, const Pattern& h, int threads) {
    check_spanning(g, f, "closure_rounds");
    ClosureResult out{g, {}};
    out.trace.initial_fingerprint = g.fingerprint();
    PatternDetector detect(h);
    std::vector<Edge> missing = edge_complement_list(g, f);
    while (!missing.empty()) {
        const Graph& snapshot = out.graph;
        std::vector<std::optional<CopyWitness>> found(missing.size());
        auto scan = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                Graph probe = snapshot;
                probe.add_edge(missing[i]);
                found[i] = detect(probe, missing[i]);
            }
        };
        if (threads > 1 && missing.size() > 1) {
            std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), missing.size());
            std::vector<std::thread> pool;
            std::size_t chunk = (missing.size() + nt - 1) / nt;
            for (std::size_t k = 0; k < nt; ++k) {
                std::size_t lo = k * chunk;
                std::size_t hi = std::min(missing.size(), lo + chunk);
                if (lo < hi) pool.emplace_back(scan, lo, hi);
            }
            for (auto& th : pool) th.join();
        } else {
            scan(0, missing.size());
        }
        std::vector<Edge> rest;
        bool any = false;
        for (std::size_t i = 0; i < missing.size(); ++i) {
            if (found[i]) {
                out.graph.add_edge(missing[i]);
                out.trace.steps.push_back({missing[i], std::move(*found[i])});
                any = true;
            } else {
                rest.push_back(missing[i]);
            }
        }
        if (!any) break;
        missing = std::move(rest);
    }
    out.trace.final_fingerprint = out.graph.fingerprint();
    return out;
}

SaturationVerdict verify_weakly_saturated(const Graph& g, const Graph& f, const Pattern& h) {
    check_spanning(g, f, "verify_weakly_saturated");
    SaturationVerdict verdict;
    verdict.is_pattern_free = is_pattern_free(g, h);
    auto closed = closure(g, f, h);
    verdict.closure_complete = closed.graph == f;
    verdict.trace = std::move(closed.trace);
    verdict.missing = edge_complement_list(closed.graph, f);
    verdict.is_weakly_saturated = verdict.is_pattern_free && verdict.closure_complete;
    return verdict;
}

ClosureResult bisaturated_closure(const Graph& g, const SideLabeling& sides, int h_left,
                                  int h_right) {
    if (sides.total != g.vertex_count())
        throw std::invalid_argument("bisaturated_closure: labeling size mismatch");
    for (const Edge& e : g.edges())
        if (sides.is_left(e.u) == sides.is_left(e.v))
            throw std::invalid_argument("bisaturated_closure: G has a same-side edge");
    auto [host, host_sides] = complete_bipartite(sides.left_size(), sides.right_size());
    (void)host_sides;
    auto missing = edge_complement_list(g, host);
    return run_closure(g, OrientedDetector(h_left, h_right, sides), missing);
}

bool replay_trace(const Graph& g, const ClosureTrace& trace, const Pattern& h) {
    if (trace.initial_fingerprint != 0 && g.fingerprint() != trace.initial_fingerprint)
        return false;
    Graph cur = g;
    int n = cur.vertex_count();
    for (const TraceStep& step : trace.steps) {
        if (step.edge.u < 0 || step.edge.v >= n) return false;
        if (cur.has_edge(step.edge)) return false;  // duplicate or present initially
        cur.add_edge(step.edge);
        if (!witness_valid(cur, h, step.witness, step.edge)) return false;
    }
    if (trace.final_fingerprint != 0 && cur.fingerprint() != trace.final_fingerprint)
        return false;
    return true;
}

std::string trace_to_json(const ClosureTrace& trace) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TraceStep& step : trace.steps) {
        nlohmann::json w;
        if (!step.witness.classes.empty())
            w["classes"] = step.witness.classes;
        else
            w["mapping"] = step.witness.mapping;
        arr.push_back({{"edge", {step.edge.u, step.edge.v}}, {"witness", w}});
    }
    return arr.dump(2);
}

ClosureTrace trace_from_json(const std::string& text) {
    ClosureTrace trace;
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("trace JSON: expected an array");
    for (const auto& item : arr) {
        TraceStep step;
        auto edge = item.at("edge");
        step.edge = Edge(edge.at(0).get<int>(), edge.at(1).get<int>());
        auto w = item.at("witness");
        if (w.contains("classes"))
            step.witness.classes = w.at("classes").get<std::vector<std::vector<int>>>();
        if (w.contains("mapping")) step.witness.mapping = w.at("mapping").get<std::vector<int>>();
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

}  // namespace wsat
