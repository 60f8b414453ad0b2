#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wsat/graph.hpp"

namespace wsat {

// Named vertex blocks as half-open index ranges [lo, hi) partitioning 0..n-1,
// in layout order.
class BlockLayout {
public:
    void add(std::string name, int lo, int hi);
    std::pair<int, int> range(const std::string& name) const;
    int size(const std::string& name) const;
    bool has(const std::string& name) const;
    VertexSet set(const std::string& name, int n) const;

    const std::vector<std::pair<std::string, std::pair<int, int>>>& entries() const {
        return blocks_;
    }

    // Verifies the blocks tile 0..n-1 in order.
    void check_partition(int n) const;

private:
    std::vector<std::pair<std::string, std::pair<int, int>>> blocks_;
};

struct Construction {
    Graph graph;
    BlockLayout layout;
};

struct BipartiteConstruction {
    Graph graph;
    SideLabeling sides;
    BlockLayout layout;
};

// X clique on t, Y independent (t-1), Z independent (n-2t+1), all of X u Z
// joined to Y. Blocks X=[0,t), Y=[t,2t-1), Z=[2t-1,n).
Construction construct_gn(int n, int t);

// X clique (t), Y (t-1) plus y*, Z (n-2t); X joined to Y u {y*}, Z joined to
// Y. Blocks X, Y, ystar, Z.
Construction construct_fn_ktt1(int n, int t);

// Blocks X (s-1), Y1 (t-s), Y2 (s-1), xstar, W (s-1), Z (n-t-2s+2);
// Y = Y1 u Y2 a clique, X joined to W u Y, x* joined to Y, Z joined to Y2.
Construction construct_hn(int n, int s, int t);

// Complete k-partite on C_1..C_k (|C_i|=t for i<k, |C_k|=t-1), X=C_1 also a
// clique, Z independent joined to Y=C_2 u .. u C_k.
Construction construct_fkt(int n, int k, int t);

// K_n minus all edges inside the block of the last n-r+2 vertices.
Graph construct_lovasz(int n, int r);

// Bipartite blocks X1 (s-1), X2 (t-s), X3 (l-t+1) | Y1 (s-1), Y2 (t-s),
// Y3 (m-t+1); edges X1-Y complete, Y1-X complete, X2-Y2 complete.
BipartiteConstruction construct_g0(int l, int m, int s, int t);

}  // namespace wsat
