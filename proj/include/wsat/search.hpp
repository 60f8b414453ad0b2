#pragma once

#include <stdexcept>
#include <string>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

struct SearchResult {
    long long minimum = 0;
    Graph witness;
    unsigned long long explored = 0;  // verification calls spent
    bool vacuous = false;             // host is H-free; only G = F qualifies
    std::string host_desc;
    std::string pattern_desc;

    std::string to_json() const;
};

struct SearchOptions {
    unsigned long long budget = 10'000'000;  // verification-call limit
    int threads = 1;
    bool prune_degree = true;  // min-degree rule for vertices with missing host edges
    bool prune_free = true;    // H-freeness pre-filter before running the closure
    bool prune_iso = true;     // canonical-form isomorph rejection (hosts with <= 7 vertices)
};

struct BudgetExceeded : std::runtime_error {
    int last_completed_m;
    unsigned long long explored;
    BudgetExceeded(int m, unsigned long long calls)
        : std::runtime_error("search budget exceeded after completing m = " + std::to_string(m)),
          last_completed_m(m),
          explored(calls) {}
};

// Exact wsat(F,H) by ascending-m exhaustion over spanning subgraphs of F.
// The witness is the lexicographically least minimum graph surviving the
// enabled prunes. Throws BudgetExceeded when the verification budget runs out.
SearchResult wsat_bruteforce(const Graph& f, const Pattern& h, const SearchOptions& opt = {});

// Exact minimum over spanning subgraphs of K_{l,m}. oriented = true uses the
// side-respecting closure (bisaturation number w(l,m,K_{s,t}), no H-freeness
// requirement); false computes wsat(K_{l,m},K_{s,t}).
SearchResult wsat_bruteforce_bipartite(int l, int m, int s, int t, bool oriented,
                                       const SearchOptions& opt = {});

}  // namespace wsat
