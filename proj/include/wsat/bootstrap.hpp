#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

struct TraceStep {
    Edge edge;
    CopyWitness witness;
};

// Replayable record of a closure run: additions in order, each with the
// witness copy that justified it.
struct ClosureTrace {
    std::vector<TraceStep> steps;
    std::uint64_t initial_fingerprint = 0;
    std::uint64_t final_fingerprint = 0;
};

struct ClosureResult {
    Graph graph;
    ClosureTrace trace;
};

struct SaturationVerdict {
    bool is_weakly_saturated = false;
    bool is_pattern_free = false;
    bool closure_complete = false;
    ClosureTrace trace;
    std::vector<Edge> missing;  // host edges never added (when incomplete)
};

// Maximal graph reachable from G by repeatedly adding e in E(F)\E(current)
// whose addition creates a copy of H through e. Default policy: scan the
// missing edges in lexicographic order, add the first addable one, restart
// the scan. The fixed point is policy-independent; the trace is not.
ClosureResult closure(const Graph& g, const Graph& f, const Pattern& h);

// Same process scanning in the given order (a permutation of the initially
// missing edges). Used for confluence checks and custom schedules.
ClosureResult closure_with_order(const Graph& g, const Graph& f, const Pattern& h,
                                 std::span<const Edge> scan_order);

// Round-synchronous variant: each round adds every edge addable with respect
// to the round-start graph, recorded in lexicographic order within the round.
// Reaches the same fixed point. threads > 1 evaluates a round's candidates
// concurrently against the immutable round-start snapshot.
ClosureResult closure_rounds(const Graph& g, const Graph& f, const Pattern& h, int threads = 1);

SaturationVerdict verify_weakly_saturated(const Graph& g, const Graph& f, const Pattern& h);

// Closure inside K_{l,m} for H = K_{h_left,h_right} where witnesses must put
// the h_left class in Left and the h_right class in Right. G must respect the
// sides; only cross edges are ever added.
ClosureResult bisaturated_closure(const Graph& g, const SideLabeling& sides, int h_left,
                                  int h_right);

// True iff the trace replays validly from G: each edge absent then added, its
// witness re-validating (via the patterns module) in the graph-so-far plus
// the edge. Fingerprints are enforced when nonzero.
bool replay_trace(const Graph& g, const ClosureTrace& trace, const Pattern& h);

// Trace JSON interchange: array of {"edge":[u,v],"witness":{...}}.
std::string trace_to_json(const ClosureTrace& trace);
ClosureTrace trace_from_json(const std::string& text);

}  // namespace wsat
