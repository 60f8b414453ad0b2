#include "wsat/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace wsat {

Pattern Pattern::multipartite(std::vector<int> sizes) {
    if (sizes.size() < 2)
        throw std::invalid_argument("pattern: a complete multipartite pattern needs k >= 2 classes");
    for (int a : sizes)
        if (a < 1) throw std::invalid_argument("pattern: class sizes must be >= 1");
    Pattern p;
    p.kind_ = Kind::Multipartite;
    p.sizes_ = std::move(sizes);
    return p;
}

Pattern Pattern::clique(int r) {
    if (r < 2) throw std::invalid_argument("pattern: clique needs r >= 2");
    return multipartite(std::vector<int>(static_cast<std::size_t>(r), 1));
}

Pattern Pattern::ktk(int t, int k) {
    if (t < 1 || k < 2) throw std::invalid_argument("pattern: ktk needs t >= 1, k >= 2");
    return multipartite(std::vector<int>(static_cast<std::size_t>(k), t));
}

Pattern Pattern::explicit_graph(Graph g) {
    if (g.edge_count() < 1) throw std::invalid_argument("pattern: explicit pattern needs an edge");
    Pattern p;
    p.kind_ = Kind::Explicit;
    p.graph_ = std::move(g);
    return p;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(sep, pos);
        if (end == std::string_view::npos) end = text.size();
        std::string tok(text.substr(pos, end - pos));
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("pattern literal: bad integer '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument("pattern literal: bad integer '" + tok + "'");
        out.push_back(value);
        pos = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

}  // namespace

Pattern Pattern::parse(std::string_view literal) {
    auto colon = literal.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("pattern literal: expected '<kind>:<params>', got '" +
                                    std::string(literal) + "'");
    std::string_view kind = literal.substr(0, colon);
    std::string_view rest = literal.substr(colon + 1);
    if (kind == "kst") {
        auto v = parse_int_list(rest, ',');
        if (v.size() != 2) throw std::invalid_argument("pattern literal: kst:s,t");
        return kst(v[0], v[1]);
    }
    if (kind == "clique") {
        auto v = parse_int_list(rest, ',');
        if (v.size() != 1) throw std::invalid_argument("pattern literal: clique:r");
        return clique(v[0]);
    }
    if (kind == "multi") {
        return multipartite(parse_int_list(rest, ','));
    }
    if (kind == "ktk") {
        auto v = parse_int_list(rest, '^');
        if (v.size() != 2) throw std::invalid_argument("pattern literal: ktk:t^k");
        return ktk(v[0], v[1]);
    }
    throw std::invalid_argument("pattern literal: unknown kind '" + std::string(kind) + "'");
}

int Pattern::vertex_count() const {
    if (kind_ == Kind::Explicit) return graph_.vertex_count();
    return std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

int Pattern::edge_count() const {
    if (kind_ == Kind::Explicit) return graph_.edge_count();
    int total = vertex_count();
    int sq = 0;
    for (int a : sizes_) sq += a * a;
    return (total * total - sq) / 2;
}

int Pattern::min_copy_degree() const {
    if (kind_ == Kind::Explicit) {
        int d = graph_.vertex_count();
        for (int v = 0; v < graph_.vertex_count(); ++v) d = std::min(d, graph_.degree(v));
        return d;
    }
    return vertex_count() - *std::max_element(sizes_.begin(), sizes_.end());
}

std::string Pattern::to_string() const {
    std::ostringstream out;
    if (kind_ == Kind::Explicit) {
        out << "explicit:" << graph_.vertex_count() << "v," << graph_.edge_count() << "e";
        return out.str();
    }
    bool all_one = std::all_of(sizes_.begin(), sizes_.end(), [](int a) { return a == 1; });
    bool all_eq = std::all_of(sizes_.begin(), sizes_.end(), [&](int a) { return a == sizes_[0]; });
    if (all_one) {
        out << "clique:" << sizes_.size();
    } else if (sizes_.size() == 2) {
        out << "kst:" << sizes_[0] << "," << sizes_[1];
    } else if (all_eq) {
        out << "ktk:" << sizes_[0] << "^" << sizes_.size();
    } else {
        out << "multi:";
        for (std::size_t i = 0; i < sizes_.size(); ++i) out << (i ? "," : "") << sizes_[i];
    }
    return out.str();
}

// --- anchored detection -----------------------------------------------------

namespace {

// Backtracker for complete multipartite patterns. Classes are filled in
// pattern order; a candidate for class c must be adjacent to every vertex
// already placed in a different class. Candidate order is largest-degree
// first, ties by index.
struct MultipartiteSearch {
    const Graph& g;
    const std::vector<int>& sizes;
    int k;
    int n;
    std::vector<std::vector<int>> chosen;
    VertexSet used;
    std::vector<int> by_order;  // vertex ids sorted by (-deg, id)

    MultipartiteSearch(const Graph& graph, const std::vector<int>& class_sizes)
        : g(graph),
          sizes(class_sizes),
          k(static_cast<int>(class_sizes.size())),
          n(graph.vertex_count()),
          chosen(class_sizes.size()),
          used(graph.vertex_count()),
          by_order(static_cast<std::size_t>(graph.vertex_count())) {
        std::iota(by_order.begin(), by_order.end(), 0);
        std::stable_sort(by_order.begin(), by_order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool fill_class(int c) {
        if (c == k) return true;
        int needed = sizes[static_cast<std::size_t>(c)] -
                     static_cast<int>(chosen[static_cast<std::size_t>(c)].size());
        if (needed == 0) return fill_class(c + 1);
        VertexSet cand = VertexSet::full(n);
        cand.subtract(used);
        for (int d = 0; d < k; ++d) {
            if (d == c) continue;
            for (int w : chosen[static_cast<std::size_t>(d)]) cand &= g.neighbors(w);
        }
        std::vector<int> list;
        for (int v : by_order)
            if (cand.contains(v)) list.push_back(v);
        if (static_cast<int>(list.size()) < needed) return false;
        return choose(c, list, 0, needed);
    }

    bool choose(int c, const std::vector<int>& list, int from, int needed) {
        if (needed == 0) return fill_class(c + 1);
        for (int i = from; i + needed <= static_cast<int>(list.size()); ++i) {
            int v = list[static_cast<std::size_t>(i)];
            chosen[static_cast<std::size_t>(c)].push_back(v);
            used.insert(v);
            if (choose(c, list, i + 1, needed - 1)) return true;
            used.erase(v);
            chosen[static_cast<std::size_t>(c)].pop_back();
        }
        return false;
    }
};

std::optional<CopyWitness> multipartite_copy_through_edge(const Graph& g,
                                                          const std::vector<int>& sizes, Edge e) {
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total > g.vertex_count()) return std::nullopt;
    int k = static_cast<int>(sizes.size());
    // Placements of the anchor endpoints into two distinct classes. Classes of
    // equal size are interchangeable, so one search per distinct ordered size
    // pair suffices.
    std::set<std::pair<int, int>> tried;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (!tried.insert({sizes[static_cast<std::size_t>(i)],
                               sizes[static_cast<std::size_t>(j)]})
                     .second)
                continue;
            MultipartiteSearch search(g, sizes);
            search.chosen[static_cast<std::size_t>(i)].push_back(e.u);
            search.chosen[static_cast<std::size_t>(j)].push_back(e.v);
            search.used.insert(e.u);
            search.used.insert(e.v);
            if (search.fill_class(0)) {
                CopyWitness w;
                w.classes = search.chosen;
                for (auto& cls : w.classes) std::sort(cls.begin(), cls.end());
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<CopyWitness> explicit_copy_through_edge(const Graph& g, const Graph& pat, Edge e) {
    int h = pat.vertex_count();
    if (h > g.vertex_count()) return std::nullopt;
    // Mapping order: the two anchored pattern vertices first, the rest by
    // degree descending, ties by index.
    std::vector<int> by_deg(static_cast<std::size_t>(h));
    std::iota(by_deg.begin(), by_deg.end(), 0);
    std::stable_sort(by_deg.begin(), by_deg.end(),
                     [&](int a, int b) { return pat.degree(a) > pat.degree(b); });

    std::vector<int> mapped(static_cast<std::size_t>(h), -1);
    VertexSet used(g.vertex_count());
    std::vector<int> order;

    auto assign = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size()) return true;
        int x = order[i];
        VertexSet cand = VertexSet::full(g.vertex_count());
        cand.subtract(used);
        for (int y = pat.neighbors(x).first(); y >= 0; y = pat.neighbors(x).next(y))
            if (mapped[static_cast<std::size_t>(y)] >= 0)
                cand &= g.neighbors(mapped[static_cast<std::size_t>(y)]);
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            mapped[static_cast<std::size_t>(x)] = v;
            used.insert(v);
            if (self(self, i + 1)) return true;
            used.erase(v);
            mapped[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    };

    for (const Edge& pe : pat.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            int pu = flip ? pe.v : pe.u;
            int pv = flip ? pe.u : pe.v;
            std::fill(mapped.begin(), mapped.end(), -1);
            used.clear();
            mapped[static_cast<std::size_t>(pu)] = e.u;
            mapped[static_cast<std::size_t>(pv)] = e.v;
            used.insert(e.u);
            used.insert(e.v);
            order.clear();
            for (int x : by_deg)
                if (x != pu && x != pv) order.push_back(x);
            if (assign(assign, 0)) {
                CopyWitness w;
                w.mapping = mapped;
                return w;
            }
        }
    }
    return std::nullopt;
}

// K_{a,b} through e, with the anchor endpoint `u` on the A side (the side
// recovered from common neighborhoods) and `v` on the B side (the side
// enumerated as a subset of N(u)). Optional masks restrict each side.
struct KstSearch {
    const Graph& g;
    int u, v;
    int a_size, b_size;
    const VertexSet* a_mask;
    VertexSet pool;  // candidates for B beyond v
    std::vector<int> b;
    std::vector<int> a_out;

    bool v_in_pool = false;

    KstSearch(const Graph& graph, int au, int av, int a_sz, int b_sz,
              const VertexSet* amask, const VertexSet* bmask)
        : g(graph), u(au), v(av), a_size(a_sz), b_size(b_sz), a_mask(amask), pool(graph.neighbors(au)) {
        if (bmask) pool &= *bmask;
        v_in_pool = pool.contains(av);
        pool.erase(av);
    }

    bool run() {
        if (!v_in_pool) return false;
        b.assign(1, v);
        VertexSet common = g.neighbors(v);
        if (a_mask) common &= *a_mask;
        return extend(common, -1);
    }

    bool extend(const VertexSet& common, int last) {
        VertexSet avail = common;
        for (int w : b) avail.erase(w);
        if (avail.size() < a_size) return false;
        if (static_cast<int>(b.size()) == b_size) {
            a_out.assign(1, u);
            for (int w = avail.first(); w >= 0 && static_cast<int>(a_out.size()) < a_size;
                 w = avail.next(w))
                if (w != u) a_out.push_back(w);
            return true;
        }
        for (int w = pool.next(last); w >= 0; w = pool.next(w)) {
            VertexSet c2 = common & g.neighbors(w);
            b.push_back(w);
            if (extend(c2, w)) return true;
            b.pop_back();
        }
        return false;
    }
};

std::optional<std::pair<std::vector<int>, std::vector<int>>> kst_oriented(
    const Graph& g, int u, int v, int a_size, int b_size, const VertexSet* a_mask,
    const VertexSet* b_mask) {
    KstSearch s(g, u, v, a_size, b_size, a_mask, b_mask);
    if (!s.run()) return std::nullopt;
    std::sort(s.a_out.begin(), s.a_out.end());
    std::sort(s.b.begin(), s.b.end());
    return std::make_pair(s.a_out, s.b);
}

// Runs detection on a graph guaranteed to contain the anchor.
template <typename Fn>
auto with_anchor_present(const Graph& g, Edge e, Fn&& fn) {
    if (g.has_edge(e)) return fn(g);
    Graph tmp = g;
    tmp.add_edge(e);
    return fn(tmp);
}

}  // namespace

std::optional<CopyWitness> contains_copy_through_edge(const Graph& g, const Pattern& h, Edge e) {
    if (e.v >= g.vertex_count())
        throw std::out_of_range("contains_copy_through_edge: anchor out of range");
    return with_anchor_present(g, e, [&](const Graph& gg) -> std::optional<CopyWitness> {
        if (h.kind() == Pattern::Kind::Multipartite)
            return multipartite_copy_through_edge(gg, h.class_sizes(), e);
        return explicit_copy_through_edge(gg, h.graph(), e);
    });
}

std::optional<CopyWitness> kst_copy_through_edge(const Graph& g, int s, int t, Edge e) {
    if (s < 1 || t < s) throw std::invalid_argument("kst_copy_through_edge: need 1 <= s <= t");
    if (e.v >= g.vertex_count())
        throw std::out_of_range("kst_copy_through_edge: anchor out of range");
    return with_anchor_present(g, e, [&](const Graph& gg) -> std::optional<CopyWitness> {
        if (s + t > gg.vertex_count()) return std::nullopt;
        // Orientation 1: e.u on the s side.
        if (auto ab = kst_oriented(gg, e.u, e.v, s, t, nullptr, nullptr))
            return CopyWitness{{ab->first, ab->second}, {}};
        // Orientation 2: e.u on the t side.
        if (s != t)
            if (auto ab = kst_oriented(gg, e.u, e.v, t, s, nullptr, nullptr))
                return CopyWitness{{ab->second, ab->first}, {}};
        return std::nullopt;
    });
}

std::optional<CopyWitness> kst_copy_through_edge_masked(const Graph& g, int left_size,
                                                        int right_size, Edge e,
                                                        const VertexSet& left_mask,
                                                        const VertexSet& right_mask) {
    if (left_size < 1 || right_size < 1)
        throw std::invalid_argument("kst_copy_through_edge_masked: sizes must be >= 1");
    if (e.v >= g.vertex_count())
        throw std::out_of_range("kst_copy_through_edge_masked: anchor out of range");
    int u, v;
    if (left_mask.contains(e.u) && right_mask.contains(e.v)) {
        u = e.u;
        v = e.v;
    } else if (left_mask.contains(e.v) && right_mask.contains(e.u)) {
        u = e.v;
        v = e.u;
    } else {
        return std::nullopt;
    }
    return with_anchor_present(g, e, [&](const Graph& gg) -> std::optional<CopyWitness> {
        if (auto ab = kst_oriented(gg, u, v, left_size, right_size, &left_mask, &right_mask))
            return CopyWitness{{ab->first, ab->second}, {}};
        return std::nullopt;
    });
}

bool is_pattern_free(const Graph& g, const Pattern& h) {
    for (const Edge& e : g.edges())
        if (contains_copy_through_edge(g, h, e)) return false;
    return true;
}

bool witness_valid(const Graph& g, const Pattern& h, const CopyWitness& w,
                   std::optional<Edge> anchor) {
    int n = g.vertex_count();
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    if (h.kind() == Pattern::Kind::Multipartite) {
        const auto& sizes = h.class_sizes();
        if (w.classes.size() != sizes.size()) return false;
        VertexSet seen(n);
        for (std::size_t c = 0; c < sizes.size(); ++c) {
            if (static_cast<int>(w.classes[c].size()) != sizes[c]) return false;
            for (int v : w.classes[c]) {
                if (!in_range(v) || seen.contains(v)) return false;
                seen.insert(v);
            }
        }
        for (std::size_t c = 0; c < w.classes.size(); ++c)
            for (std::size_t d = c + 1; d < w.classes.size(); ++d)
                for (int a : w.classes[c])
                    for (int b : w.classes[d])
                        if (!g.has_edge(a, b)) return false;
        if (anchor) {
            int cu = -1, cv = -1;
            for (std::size_t c = 0; c < w.classes.size(); ++c)
                for (int v : w.classes[c]) {
                    if (v == anchor->u) cu = static_cast<int>(c);
                    if (v == anchor->v) cv = static_cast<int>(c);
                }
            if (cu < 0 || cv < 0 || cu == cv) return false;
        }
        return true;
    }
    const Graph& pat = h.graph();
    if (static_cast<int>(w.mapping.size()) != pat.vertex_count()) return false;
    VertexSet seen(n);
    for (int v : w.mapping) {
        if (!in_range(v) || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (const Edge& pe : pat.edges())
        if (!g.has_edge(w.mapping[static_cast<std::size_t>(pe.u)],
                        w.mapping[static_cast<std::size_t>(pe.v)]))
            return false;
    if (anchor) {
        bool covered = false;
        for (const Edge& pe : pat.edges()) {
            Edge img(w.mapping[static_cast<std::size_t>(pe.u)],
                     w.mapping[static_cast<std::size_t>(pe.v)]);
            if (img == *anchor) covered = true;
        }
        if (!covered) return false;
    }
    return true;
}

}  // namespace wsat
