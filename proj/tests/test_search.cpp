#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wsat/bootstrap.hpp"
#include "wsat/formulas.hpp"
#include "wsat/search.hpp"

using namespace wsat;

TEST_CASE("oracle values on complete hosts") {
    CHECK(wsat_bruteforce(complete_graph(4), Pattern::kst(2, 2)).minimum == 4);
    CHECK(wsat_bruteforce(complete_graph(5), Pattern::kst(2, 2)).minimum == 5);
    CHECK(wsat_bruteforce(complete_graph(4), Pattern::clique(3)).minimum == 3);
    CHECK(wsat_bruteforce(complete_graph(5), Pattern::clique(3)).minimum == 4);
    CHECK(wsat_bruteforce(complete_graph(5), Pattern::kst(2, 3)).minimum == 6);
}

TEST_CASE("witnesses verify and explored counts are reported") {
    auto r = wsat_bruteforce(complete_graph(5), Pattern::kst(2, 2));
    CHECK(verify_weakly_saturated(r.witness, complete_graph(5), Pattern::kst(2, 2))
              .is_weakly_saturated);
    CHECK(r.explored > 0);
    CHECK_FALSE(r.vacuous);
    CHECK(r.witness.edge_count() == r.minimum);
}

TEST_CASE("vacuous hosts") {
    auto r = wsat_bruteforce(complete_graph(3), Pattern::kst(2, 2));
    CHECK(r.minimum == 3);
    CHECK(r.vacuous);
    CHECK(r.witness == complete_graph(3));

    auto rb = wsat_bruteforce_bipartite(2, 2, 2, 3, true, {});
    CHECK(rb.vacuous);
    CHECK(rb.minimum == 4);
}

TEST_CASE("bipartite oracles: Alon and the unlabeled variant") {
    CHECK(wsat_bruteforce_bipartite(3, 3, 2, 2, true, {}).minimum == bisat_value(3, 3, 2, 2));
    CHECK(wsat_bruteforce_bipartite(3, 3, 2, 2, false, {}).minimum == 5);
    CHECK(wsat_bruteforce_bipartite(2, 3, 2, 3, true, {}).minimum == bisat_value(2, 3, 2, 3));
    CHECK(bisat_value(3, 3, 2, 2) == 5);
    CHECK(bisat_value(2, 3, 2, 3) == 5);
    // Alon's value also at an asymmetric instance.
    CHECK(wsat_bruteforce_bipartite(2, 4, 2, 2, true, {}).minimum == bisat_value(2, 4, 2, 2));
}

TEST_CASE("pruning rules never change the minimum") {
    struct Case {
        Graph host;
        Pattern h;
    };
    std::vector<Case> cases;
    cases.push_back({complete_graph(4), Pattern::kst(2, 2)});
    cases.push_back({complete_graph(5), Pattern::clique(3)});
    cases.push_back({complete_graph(5), Pattern::kst(2, 2)});
    for (const auto& c : cases) {
        SearchOptions base;
        long long reference = wsat_bruteforce(c.host, c.h, base).minimum;
        for (int toggle = 0; toggle < 3; ++toggle) {
            SearchOptions opt;
            if (toggle == 0) opt.prune_degree = false;
            if (toggle == 1) opt.prune_free = false;
            if (toggle == 2) opt.prune_iso = false;
            CHECK(wsat_bruteforce(c.host, c.h, opt).minimum == reference);
        }
    }
    for (bool oriented : {true, false}) {
        SearchOptions base;
        long long reference = wsat_bruteforce_bipartite(3, 3, 2, 2, oriented, base).minimum;
        for (int toggle = 0; toggle < 3; ++toggle) {
            SearchOptions opt;
            if (toggle == 0) opt.prune_degree = false;
            if (toggle == 1) opt.prune_free = false;
            if (toggle == 2) opt.prune_iso = false;
            CHECK(wsat_bruteforce_bipartite(3, 3, 2, 2, oriented, opt).minimum == reference);
        }
    }
}

TEST_CASE("monotonicity step from K_{t,t} to K_{t,t+1}") {
    for (int n : {5, 6}) {
        auto a = wsat_bruteforce(complete_graph(n), Pattern::kst(2, 2));
        auto b = wsat_bruteforce(complete_graph(n), Pattern::kst(2, 3));
        CHECK(b.minimum == a.minimum + 1);
    }
}

TEST_CASE("oracle matches the closed forms where both are in range") {
    // Theorem values at n=5: ktt, clique, and the bipartite theorem at
    // (2,2): wsat(K_{l,m},K_{2,2}) = (l+m-1)(1) + 0.
    CHECK(wsat_bruteforce(complete_graph(5), Pattern::kst(2, 2)).minimum ==
          wsat_ktt_value(5, 2));
    CHECK(wsat_bruteforce(complete_graph(5), Pattern::clique(3)).minimum ==
          wsat_clique_value(5, 3));
    CHECK(wsat_bruteforce(complete_graph(5), Pattern::kst(2, 3)).minimum ==
          wsat_ktt1_value(5, 2));
    CHECK(wsat_bruteforce_bipartite(3, 3, 2, 2, false, {}).minimum ==
          wsat_bipartite_value(3, 3, 2, 2));
    CHECK(wsat_bruteforce_bipartite(3, 4, 2, 2, false, {}).minimum ==
          wsat_bipartite_value(3, 4, 2, 2));
}

TEST_CASE("budget exhaustion reports the last completed level") {
    try {
        wsat_bruteforce(complete_graph(5), Pattern::kst(2, 2), {.budget = 3});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.last_completed_m >= 0);
        CHECK(e.explored <= 3);
    }
}

TEST_CASE("threaded search returns the same minimum") {
    SearchOptions two;
    two.threads = 2;
    CHECK(wsat_bruteforce(complete_graph(5), Pattern::kst(2, 2), two).minimum == 5);
    CHECK(wsat_bruteforce_bipartite(3, 3, 2, 2, true, two).minimum == 5);
}
