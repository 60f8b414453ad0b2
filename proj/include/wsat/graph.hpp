#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsat/bitset.hpp"

namespace wsat {

// Undirected edge, normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("Edge: loop " + std::to_string(a));
    }

    auto operator<=>(const Edge&) const = default;
};

// Dense simple graph on labeled vertices 0..n-1 with bitset neighborhoods.
// Values are cheap to copy at desk scale; treat instances as immutable once
// built and shared.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
    void add_edge(int u, int v);
    void add_edge(Edge e) { add_edge(e.u, e.v); }
    void remove_edge(int u, int v);
    void remove_edge(Edge e) { remove_edge(e.u, e.v); }

    const VertexSet& neighbors(int v) const;
    int degree(int v) const { return neighbors(v).size(); }

    // All edges in lexicographic order.
    std::vector<Edge> edges() const;

    bool is_spanning_subgraph_of(const Graph& f) const;
    bool is_complete() const { return edge_count_ == static_cast<int>(n_) * (n_ - 1) / 2; }

    // Order-insensitive 64-bit fingerprint of (n, adjacency).
    std::uint64_t fingerprint() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

// Two-sided vertex labeling: vertices 0..left_count-1 are Left, the rest Right.
struct SideLabeling {
    int left_count = 0;
    int total = 0;

    bool is_left(int v) const { return v < left_count; }
    int left_size() const { return left_count; }
    int right_size() const { return total - left_count; }

    VertexSet left_set() const;
    VertexSet right_set() const;
};

Graph complete_graph(int n);

// Vertices 0..l-1 Left, l..l+m-1 Right; edge iff sides differ.
std::pair<Graph, SideLabeling> complete_bipartite(int l, int m);

// G' on n+k vertices: G unchanged, k new vertices adjacent to all of V(G),
// mutually adjacent iff clique is set.
Graph cone(const Graph& g, int k, bool clique);

// Lexicographic list of E(F) \ E(G). Requires G spanning subgraph of F.
std::vector<Edge> edge_complement_list(const Graph& g, const Graph& f);

// --- Edge-list text format -------------------------------------------------
// Line 1: "n <N>", optionally "left <L>", then one "u v" line per edge.
// Output is lexicographic; parsers accept any edge order and ignore blank
// lines and '#' comments.

struct ParsedGraph {
    Graph graph;
    std::optional<SideLabeling> sides;
};

ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g, const SideLabeling* sides = nullptr);
std::string to_edge_list(const Graph& g, const SideLabeling* sides = nullptr);

}  // namespace wsat
