#include "wsat/constructions.hpp"

#include <stdexcept>

namespace wsat {

void BlockLayout::add(std::string name, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("block " + name + ": negative size");
    blocks_.emplace_back(std::move(name), std::make_pair(lo, hi));
}

std::pair<int, int> BlockLayout::range(const std::string& name) const {
    for (const auto& [bn, r] : blocks_)
        if (bn == name) return r;
    throw std::out_of_range("block layout: no block named " + name);
}

int BlockLayout::size(const std::string& name) const {
    auto [lo, hi] = range(name);
    return hi - lo;
}

bool BlockLayout::has(const std::string& name) const {
    for (const auto& [bn, r] : blocks_)
        if (bn == name) return true;
    return false;
}

VertexSet BlockLayout::set(const std::string& name, int n) const {
    auto [lo, hi] = range(name);
    VertexSet s(n);
    for (int v = lo; v < hi; ++v) s.insert(v);
    return s;
}

void BlockLayout::check_partition(int n) const {
    int at = 0;
    for (const auto& [bn, r] : blocks_) {
        if (r.first != at) throw std::logic_error("block layout: gap before " + bn);
        at = r.second;
    }
    if (at != n) throw std::logic_error("block layout: does not cover 0..n-1");
}

namespace {

void join_ranges(Graph& g, int alo, int ahi, int blo, int bhi) {
    for (int a = alo; a < ahi; ++a)
        for (int b = blo; b < bhi; ++b) g.add_edge(a, b);
}

void clique_range(Graph& g, int lo, int hi) {
    for (int a = lo; a < hi; ++a)
        for (int b = a + 1; b < hi; ++b) g.add_edge(a, b);
}

}  // namespace

Construction construct_gn(int n, int t) {
    if (t < 2) throw std::invalid_argument("construct_gn: t must be >= 2");
    if (n < 2 * t - 1) throw std::invalid_argument("construct_gn: block Z negative (n < 2t-1)");
    Construction c{Graph(n), {}};
    int y_lo = t, y_hi = 2 * t - 1, z_lo = 2 * t - 1;
    c.layout.add("X", 0, t);
    c.layout.add("Y", y_lo, y_hi);
    c.layout.add("Z", z_lo, n);
    c.layout.check_partition(n);
    clique_range(c.graph, 0, t);
    join_ranges(c.graph, 0, t, y_lo, y_hi);
    join_ranges(c.graph, z_lo, n, y_lo, y_hi);
    return c;
}

Construction construct_fn_ktt1(int n, int t) {
    if (t < 2) throw std::invalid_argument("construct_fn_ktt1: t must be >= 2");
    if (n < 2 * t) throw std::invalid_argument("construct_fn_ktt1: block Z negative (n < 2t)");
    Construction c{Graph(n), {}};
    int y_lo = t, y_hi = 2 * t - 1, ystar = 2 * t - 1, z_lo = 2 * t;
    c.layout.add("X", 0, t);
    c.layout.add("Y", y_lo, y_hi);
    c.layout.add("ystar", ystar, ystar + 1);
    c.layout.add("Z", z_lo, n);
    c.layout.check_partition(n);
    clique_range(c.graph, 0, t);
    join_ranges(c.graph, 0, t, y_lo, ystar + 1);  // X to Y u {y*}
    join_ranges(c.graph, z_lo, n, y_lo, y_hi);    // Z to Y only
    return c;
}

Construction construct_hn(int n, int s, int t) {
    if (s < 2 || t <= s) throw std::invalid_argument("construct_hn: need 2 <= s < t");
    if (n < t + 2 * s - 2) throw std::invalid_argument("construct_hn: block Z negative");
    Construction c{Graph(n), {}};
    int x_hi = s - 1;
    int y1_lo = x_hi, y1_hi = y1_lo + (t - s);
    int y2_lo = y1_hi, y2_hi = y2_lo + (s - 1);
    int xstar = y2_hi;
    int w_lo = xstar + 1, w_hi = w_lo + (s - 1);
    int z_lo = w_hi;
    c.layout.add("X", 0, x_hi);
    c.layout.add("Y1", y1_lo, y1_hi);
    c.layout.add("Y2", y2_lo, y2_hi);
    c.layout.add("xstar", xstar, xstar + 1);
    c.layout.add("W", w_lo, w_hi);
    c.layout.add("Z", z_lo, n);
    c.layout.check_partition(n);
    clique_range(c.graph, y1_lo, y2_hi);           // Y = Y1 u Y2 clique on t-1
    join_ranges(c.graph, 0, x_hi, y1_lo, y2_hi);   // X to Y
    join_ranges(c.graph, 0, x_hi, w_lo, w_hi);     // X to W
    join_ranges(c.graph, xstar, xstar + 1, y1_lo, y2_hi);  // x* to Y
    join_ranges(c.graph, z_lo, n, y2_lo, y2_hi);   // Z to Y2
    return c;
}

Construction construct_fkt(int n, int k, int t) {
    if (k < 2 || t < 1) throw std::invalid_argument("construct_fkt: need k >= 2, t >= 1");
    if (n < t * k - 1) throw std::invalid_argument("construct_fkt: block Z negative (n < tk-1)");
    Construction c{Graph(n), {}};
    std::vector<std::pair<int, int>> classes;
    int at = 0;
    for (int i = 1; i <= k; ++i) {
        int size = (i < k) ? t : t - 1;
        c.layout.add("C" + std::to_string(i), at, at + size);
        classes.emplace_back(at, at + size);
        at += size;
    }
    int z_lo = at;
    c.layout.add("Z", z_lo, n);
    c.layout.check_partition(n);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            join_ranges(c.graph, classes[i].first, classes[i].second, classes[j].first,
                        classes[j].second);
    clique_range(c.graph, classes[0].first, classes[0].second);  // X = C1 a clique
    join_ranges(c.graph, z_lo, n, classes[0].second, z_lo);      // Z to Y = C2 u .. u Ck
    return c;
}

Graph construct_lovasz(int n, int r) {
    if (r < 2 || r > n) throw std::invalid_argument("construct_lovasz: need 2 <= r <= n");
    Graph g(n);
    int cut = r - 2;  // vertices cut..n-1 form the removed K_{n-r+2}
    clique_range(g, 0, cut);
    join_ranges(g, 0, cut, cut, n);
    return g;
}

BipartiteConstruction construct_g0(int l, int m, int s, int t) {
    if (s < 2 || s > l || s > t || t > m)
        throw std::invalid_argument("construct_g0: need 2 <= s <= min(l,t), t <= m");
    if (l - t + 1 < 0) throw std::invalid_argument("construct_g0: block X3 negative (l < t-1)");
    int n = l + m;
    BipartiteConstruction c{Graph(n), SideLabeling{l, n}, {}};
    int x1_hi = s - 1;
    int x2_hi = x1_hi + (t - s);
    int x3_hi = l;
    int y1_lo = l, y1_hi = l + (s - 1);
    int y2_hi = y1_hi + (t - s);
    c.layout.add("X1", 0, x1_hi);
    c.layout.add("X2", x1_hi, x2_hi);
    c.layout.add("X3", x2_hi, x3_hi);
    c.layout.add("Y1", y1_lo, y1_hi);
    c.layout.add("Y2", y1_hi, y2_hi);
    c.layout.add("Y3", y2_hi, n);
    c.layout.check_partition(n);
    join_ranges(c.graph, 0, x1_hi, l, n);        // X1 to all of Y
    join_ranges(c.graph, 0, l, y1_lo, y1_hi);    // Y1 to all of X
    join_ranges(c.graph, x1_hi, x2_hi, y1_hi, y2_hi);  // X2 to Y2
    return c;
}

}  // namespace wsat
