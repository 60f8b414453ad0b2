#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsat/graph.hpp"

namespace wsat {

// Pattern H: either a complete multipartite signature (class sizes) or an
// explicit small graph. K_{s,t} is multipartite([s,t]); K_r is [1]*r.
class Pattern {
public:
    enum class Kind { Multipartite, Explicit };

    static Pattern multipartite(std::vector<int> sizes);
    static Pattern kst(int s, int t) { return multipartite({s, t}); }
    static Pattern clique(int r);
    static Pattern ktk(int t, int k);  // k classes of size t
    static Pattern explicit_graph(Graph g);

    // Literal syntax: kst:s,t | clique:r | multi:a1,a2,... | ktk:t^k
    static Pattern parse(std::string_view literal);

    Kind kind() const { return kind_; }
    const std::vector<int>& class_sizes() const { return sizes_; }
    const Graph& graph() const { return graph_; }

    int vertex_count() const;
    int edge_count() const;
    // Smallest degree a pattern vertex can have inside a copy.
    int min_copy_degree() const;

    std::string to_string() const;

private:
    Pattern() = default;

    Kind kind_ = Kind::Multipartite;
    std::vector<int> sizes_;
    Graph graph_;
};

// Explicit embedding certifying containment. Multipartite patterns carry the
// host-vertex classes (one per pattern class, in pattern order); explicit
// patterns carry the pattern-vertex -> host-vertex mapping.
struct CopyWitness {
    std::vector<std::vector<int>> classes;
    std::vector<int> mapping;
};

// Witness iff G (with e present) contains a copy of H whose edge set includes
// e. Exhaustive: nullopt is a proof of absence. Patterns larger than G yield
// nullopt.
std::optional<CopyWitness> contains_copy_through_edge(const Graph& g, const Pattern& h, Edge e);

// Specialized K_{s,t} kernel (s <= t), contract-equal to the generic search.
std::optional<CopyWitness> kst_copy_through_edge(const Graph& g, int s, int t, Edge e);

// Side-respecting variant: the left class (size left_size) must lie in
// left_mask and the right class in right_mask. Anchor u must be on the left.
std::optional<CopyWitness> kst_copy_through_edge_masked(const Graph& g, int left_size,
                                                        int right_size, Edge e,
                                                        const VertexSet& left_mask,
                                                        const VertexSet& right_mask);

// True iff G contains no copy of H (exhaustive).
bool is_pattern_free(const Graph& g, const Pattern& h);

// Independent re-validation of a witness: class sizes/disjointness, all
// required pattern edges present in g, anchor covered when given.
bool witness_valid(const Graph& g, const Pattern& h, const CopyWitness& w,
                   std::optional<Edge> anchor = std::nullopt);

}  // namespace wsat
