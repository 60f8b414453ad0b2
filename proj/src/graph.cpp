#include "wsat/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace wsat {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loop at " + std::to_string(u));
    if (adj_[static_cast<std::size_t>(u)].contains(v)) return;
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[static_cast<std::size_t>(u)].contains(v)) return;
    adj_[static_cast<std::size_t>(u)].erase(v);
    adj_[static_cast<std::size_t>(v)].erase(u);
    --edge_count_;
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[static_cast<std::size_t>(u)].next(u); v >= 0;
             v = adj_[static_cast<std::size_t>(u)].next(v))
            out.push_back(Edge(u, v));
    return out;
}

bool Graph::is_spanning_subgraph_of(const Graph& f) const {
    if (n_ != f.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (!adj_[static_cast<std::size_t>(v)].is_subset_of(f.adj_[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

std::uint64_t Graph::fingerprint() const {
    // FNV-1a over n and the adjacency words.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (const auto& s : adj_)
        for (auto w : s.words()) mix(w);
    return h;
}

VertexSet SideLabeling::left_set() const {
    VertexSet s(total);
    for (int v = 0; v < left_count; ++v) s.insert(v);
    return s;
}

VertexSet SideLabeling::right_set() const {
    VertexSet s(total);
    for (int v = left_count; v < total; ++v) s.insert(v);
    return s;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

std::pair<Graph, SideLabeling> complete_bipartite(int l, int m) {
    if (l < 0 || m < 0) throw std::invalid_argument("complete_bipartite: negative side");
    Graph g(l + m);
    for (int u = 0; u < l; ++u)
        for (int v = l; v < l + m; ++v) g.add_edge(u, v);
    return {g, SideLabeling{l, l + m}};
}

Graph cone(const Graph& g, int k, bool clique) {
    if (k < 0) throw std::invalid_argument("cone: negative k");
    int n = g.vertex_count();
    Graph out(n + k);
    for (const Edge& e : g.edges()) out.add_edge(e);
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n; ++v) out.add_edge(n + i, v);
    if (clique)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) out.add_edge(n + i, n + j);
    return out;
}

std::vector<Edge> edge_complement_list(const Graph& g, const Graph& f) {
    if (g.vertex_count() != f.vertex_count())
        throw std::invalid_argument("edge_complement_list: vertex counts differ");
    if (!g.is_spanning_subgraph_of(f))
        throw std::invalid_argument("edge_complement_list: G has an edge absent from F");
    std::vector<Edge> out;
    for (const Edge& e : f.edges())
        if (!g.has_edge(e)) out.push_back(e);
    return out;
}

ParsedGraph parse_edge_list(std::istream& in) {
    std::string line;
    std::optional<int> n;
    std::optional<int> left;
    std::vector<std::pair<int, int>> raw_edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank
        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": " + msg);
        };
        if (first == "n") {
            int value;
            if (!(ls >> value) || value < 0) fail("bad vertex count");
            if (n) fail("duplicate n line");
            n = value;
        } else if (first == "left") {
            int value;
            if (!(ls >> value) || value < 0) fail("bad left count");
            left = value;
        } else {
            int u, v;
            std::istringstream es(first);
            if (!(es >> u) || !(ls >> v)) fail("expected 'u v'");
            if (!n) fail("edge before 'n <N>' header");
            if (u == v) fail("loop edge");
            if (u < 0 || v < 0 || u >= *n || v >= *n) fail("vertex out of range");
            raw_edges.emplace_back(u, v);
        }
    }
    if (!n) throw std::invalid_argument("edge list: missing 'n <N>' header");
    ParsedGraph out{Graph(*n), std::nullopt};
    for (auto [u, v] : raw_edges) out.graph.add_edge(u, v);
    if (left) {
        if (*left > *n) throw std::invalid_argument("edge list: left count exceeds n");
        out.sides = SideLabeling{*left, *n};
    }
    return out;
}

ParsedGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const SideLabeling* sides) {
    out << "n " << g.vertex_count() << "\n";
    if (sides) out << "left " << sides->left_count << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

std::string to_edge_list(const Graph& g, const SideLabeling* sides) {
    std::ostringstream out;
    write_edge_list(out, g, sides);
    return out.str();
}

}  // namespace wsat
