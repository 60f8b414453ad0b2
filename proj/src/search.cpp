#include "wsat/search.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "wsat/bootstrap.hpp"
#include "wsat/combinatorics.hpp"

namespace wsat {

namespace {

constexpr int kIsoRejectionMaxN = 7;

std::uint64_t adjacency_key(const Graph& g, const std::vector<int>& relabel) {
    int n = g.vertex_count();
    auto idx = [n](int i, int j) {  // rank of pair (i,j), i<j, in lex order
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    };
    std::uint64_t key = 0;
    for (const Edge& e : g.edges()) {
        int i = relabel[static_cast<std::size_t>(e.u)];
        int j = relabel[static_cast<std::size_t>(e.v)];
        if (i > j) std::swap(i, j);
        key |= std::uint64_t{1} << idx(i, j);
    }
    return key;
}

// Minimum adjacency bitstring over all host automorphisms: full S_n for the
// complete host, side-preserving (optionally side-swapping) permutations for
// the bipartite host.
class CanonicalForm {
public:
    CanonicalForm(int n) : n_(n) {}                          // complete host
    CanonicalForm(int l, int m, bool allow_swap)             // bipartite host
        : n_(l + m), l_(l), allow_swap_(allow_swap) {}

    std::uint64_t key(const Graph& g) const {
        std::uint64_t best = ~std::uint64_t{0};
        std::vector<int> relabel(static_cast<std::size_t>(n_));
        if (l_ < 0) {
            std::vector<int> perm(static_cast<std::size_t>(n_));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                for (int v = 0; v < n_; ++v)
                    relabel[static_cast<std::size_t>(v)] = perm[static_cast<std::size_t>(v)];
                best = std::min(best, adjacency_key(g, relabel));
            } while (std::next_permutation(perm.begin(), perm.end()));
            return best;
        }
        int r = n_ - l_;
        std::vector<int> lp(static_cast<std::size_t>(l_)), rp(static_cast<std::size_t>(r));
        std::iota(lp.begin(), lp.end(), 0);
        do {
            std::iota(rp.begin(), rp.end(), 0);
            do {
                for (int v = 0; v < l_; ++v)
                    relabel[static_cast<std::size_t>(v)] = lp[static_cast<std::size_t>(v)];
                for (int v = 0; v < r; ++v)
                    relabel[static_cast<std::size_t>(l_ + v)] = l_ + rp[static_cast<std::size_t>(v)];
                best = std::min(best, adjacency_key(g, relabel));
                if (allow_swap_ && l_ == r) {
                    for (int v = 0; v < l_; ++v)
                        relabel[static_cast<std::size_t>(v)] = l_ + lp[static_cast<std::size_t>(v)];
                    for (int v = 0; v < r; ++v)
                        relabel[static_cast<std::size_t>(l_ + v)] = rp[static_cast<std::size_t>(v)];
                    best = std::min(best, adjacency_key(g, relabel));
                }
            } while (std::next_permutation(rp.begin(), rp.end()));
        } while (std::next_permutation(lp.begin(), lp.end()));
        return best;
    }

private:
    int n_;
    int l_ = -1;
    bool allow_swap_ = false;
};

struct SearchProblem {
    Graph host;
    std::vector<Edge> host_edges;
    std::optional<Pattern> pattern;   // unoriented predicate
    std::optional<SideLabeling> sides;  // oriented predicate
    int h_left = 0, h_right = 0;
    std::string host_desc, pattern_desc;
    std::optional<CanonicalForm> canon;
    // Per-vertex degree floor for the prune: a vertex with a missing host
    // edge needs at least this many starting edges.
    std::vector<int> degree_floor;

    bool oriented() const { return sides.has_value(); }

    bool degree_ok(const Graph& g) const {
        for (int v = 0; v < g.vertex_count(); ++v) {
            int d = g.degree(v);
            if (d < degree_floor[static_cast<std::size_t>(v)] && d < host.degree(v)) return false;
        }
        return true;
    }

    bool predicate(const Graph& g, bool prune_free) const {
        if (oriented()) {
            return bisaturated_closure(g, *sides, h_left, h_right).graph == host;
        }
        if (prune_free && !is_pattern_free(g, *pattern)) return false;
        auto verdict = verify_weakly_saturated(g, host, *pattern);
        return verdict.is_weakly_saturated;
    }
};

SearchResult run_search(SearchProblem& prob, const SearchOptions& opt, int start_m) {
    SearchResult result;
    result.host_desc = prob.host_desc;
    result.pattern_desc = prob.pattern_desc;
    const int M = static_cast<int>(prob.host_edges.size());
    unsigned long long explored = 0;
    std::unordered_set<std::uint64_t> seen;
    const std::size_t batch_cap =
        opt.threads > 1 ? static_cast<std::size_t>(opt.threads) * 64 : 1;

    for (int m = start_m; m <= M; ++m) {
        seen.clear();
        std::vector<int> comb(static_cast<std::size_t>(m));
        std::iota(comb.begin(), comb.end(), 0);
        bool more = m <= M;
        if (m == 0) {
            // Single empty candidate.
            Graph g(prob.host.vertex_count());
            ++explored;
            if (prob.predicate(g, opt.prune_free)) {
                result.minimum = 0;
                result.witness = g;
                result.explored = explored;
                return result;
            }
            continue;
        }
        while (more) {
            // Gather a batch of prune-surviving candidates.
            std::vector<Graph> batch;
            while (more && batch.size() < batch_cap) {
                Graph g(prob.host.vertex_count());
                for (int i : comb) g.add_edge(prob.host_edges[static_cast<std::size_t>(i)]);
                more = next_combination(comb, M);
                if (opt.prune_degree && !prob.degree_ok(g)) continue;
                if (opt.prune_iso && prob.canon && !seen.insert(prob.canon->key(g)).second)
                    continue;
                batch.push_back(std::move(g));
            }
            if (batch.empty()) continue;
            bool truncated = false;
            if (explored + batch.size() > opt.budget) {
                std::size_t allowed = static_cast<std::size_t>(opt.budget - explored);
                batch.resize(allowed);
                truncated = true;
                if (batch.empty()) throw BudgetExceeded(m - 1, explored);
            }
            std::vector<char> ok(batch.size(), 0);
            auto eval = [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i)
                    ok[i] = prob.predicate(batch[i], opt.prune_free) ? 1 : 0;
            };
            if (opt.threads > 1 && batch.size() > 1) {
                std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(opt.threads),
                                                       batch.size());
                std::vector<std::thread> pool;
                std::size_t chunk = (batch.size() + nt - 1) / nt;
                for (std::size_t k = 0; k < nt; ++k) {
                    std::size_t lo = k * chunk, hi = std::min(batch.size(), lo + chunk);
                    if (lo < hi) pool.emplace_back(eval, lo, hi);
                }
                for (auto& th : pool) th.join();
            } else {
                eval(0, batch.size());
            }
            explored += batch.size();
            for (std::size_t i = 0; i < batch.size(); ++i) {
                if (ok[i]) {
                    result.minimum = m;
                    result.witness = std::move(batch[i]);
                    result.explored = explored;
                    return result;
                }
            }
            if (truncated) throw BudgetExceeded(m - 1, explored);
        }
    }
    throw std::runtime_error("search: no weakly saturated spanning subgraph exists for " +
                             prob.host_desc + " / " + prob.pattern_desc);
}

int kst_start_m(const Pattern& h, int host_n) {
    if (h.kind() == Pattern::Kind::Multipartite && h.class_sizes().size() == 2) {
        int s = std::min(h.class_sizes()[0], h.class_sizes()[1]);
        return static_cast<int>((static_cast<long long>(host_n) * (s - 1) + 1) / 2);
    }
    return 0;
}

}  // namespace

SearchResult wsat_bruteforce(const Graph& f, const Pattern& h, const SearchOptions& opt) {
    SearchProblem prob;
    prob.host = f;
    prob.host_edges = f.edges();
    prob.pattern = h;
    prob.host_desc = f.is_complete() ? "complete:" + std::to_string(f.vertex_count())
                                     : "graph:" + std::to_string(f.vertex_count()) + "v";
    prob.pattern_desc = h.to_string();
    if (is_pattern_free(f, h)) {
        SearchResult r;
        r.minimum = f.edge_count();
        r.witness = f;
        r.vacuous = true;
        r.host_desc = prob.host_desc;
        r.pattern_desc = prob.pattern_desc;
        return r;
    }
    if (f.vertex_count() <= kIsoRejectionMaxN && f.is_complete())
        prob.canon.emplace(f.vertex_count());
    prob.degree_floor.assign(static_cast<std::size_t>(f.vertex_count()),
                             std::max(0, h.min_copy_degree() - 1));
    return run_search(prob, opt, kst_start_m(h, f.vertex_count()));
}

SearchResult wsat_bruteforce_bipartite(int l, int m, int s, int t, bool oriented,
                                       const SearchOptions& opt) {
    if (l < 0 || m < 0 || s < 1 || t < 1)
        throw std::invalid_argument("wsat_bruteforce_bipartite: bad parameters");
    auto [host, sides] = complete_bipartite(l, m);
    SearchProblem prob;
    prob.host = host;
    prob.host_edges = host.edges();
    prob.host_desc = "bipartite:" + std::to_string(l) + "," + std::to_string(m);
    Pattern h = Pattern::kst(s, t);
    prob.pattern_desc = h.to_string() + (oriented ? " (oriented)" : "");
    if (oriented) {
        prob.sides = sides;
        prob.h_left = s;
        prob.h_right = t;
        bool fits = l >= s && m >= t;
        if (!fits) {
            SearchResult r;
            r.minimum = host.edge_count();
            r.witness = host;
            r.vacuous = true;
            r.host_desc = prob.host_desc;
            r.pattern_desc = prob.pattern_desc;
            return r;
        }
        prob.degree_floor.assign(static_cast<std::size_t>(l + m), 0);
        for (int v = 0; v < l; ++v) prob.degree_floor[static_cast<std::size_t>(v)] = t - 1;
        for (int v = l; v < l + m; ++v) prob.degree_floor[static_cast<std::size_t>(v)] = s - 1;
    } else {
        prob.pattern = h;
        if (is_pattern_free(host, h)) {
            SearchResult r;
            r.minimum = host.edge_count();
            r.witness = host;
            r.vacuous = true;
            r.host_desc = prob.host_desc;
            r.pattern_desc = prob.pattern_desc;
            return r;
        }
        prob.degree_floor.assign(static_cast<std::size_t>(l + m),
                                 std::max(0, h.min_copy_degree() - 1));
    }
    if (l + m <= kIsoRejectionMaxN)
        prob.canon.emplace(l, m, /*allow_swap=*/!oriented || s == t);
    int start = kst_start_m(h, l + m);
    return run_search(prob, opt, start);
}

std::string SearchResult::to_json() const {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : witness.edges()) edges.push_back({e.u, e.v});
    nlohmann::json j{{"host", host_desc},
                     {"pattern", pattern_desc},
                     {"minimum", minimum},
                     {"explored", explored},
                     {"vacuous", vacuous},
                     {"witness", {{"n", witness.vertex_count()}, {"edges", edges}}}};
    return j.dump(2);
}

}  // namespace wsat
