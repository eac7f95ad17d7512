#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "mimic/field.hpp"
#include "mimic/flow.hpp"
#include "mimic/graph.hpp"
#include "mimic/matroids.hpp"

namespace mimic {

// Vertex-cut gadget: every edge becomes a split vertex, every non-terminal
// vertex becomes a 2c-clique, terminals stay untouched. Edge cuts of size
// <= c between terminals correspond bijectively to vertex cuts of size <= c.
//
// Vertex layout: 0..k-1 terminals (in terminal order), then m split vertices
// (in edge-id order), then 2c vertices per non-terminal (ascending vertex id).
struct SplitGraph {
    int c = 0;
    int vertex_count = 0;
    std::vector<std::pair<int, int>> undirected_edges;
    std::vector<int> terminal_ids;                      // 0..k-1
    std::vector<EdgeId> edge_of_split;                  // split index -> host edge id
    std::unordered_map<EdgeId, int> split_vertex_of_edge;
    std::unordered_map<VertexId, int> clique_start_of;  // non-terminal -> first of its 2c vertices
    int split_base = 0;
    int clique_base = 0;

    int split_count() const { return static_cast<int>(edge_of_split.size()); }
    bool is_split_vertex(int v) const { return v >= split_base && v < clique_base; }
    Digraph directed() const;  // both orientations of every undirected edge
};

SplitGraph build_split_graph(const Multigraph& g, const TerminalSet& t, int c);

// Sink-only copy v' (in-edges from all in-neighbors of v) and source-only
// copy v'' (out-edges to all out-neighbors), one pair per split vertex.
// Clique vertices never lie in a minimum cut of size <= c and terminals
// correspond to their unique edges, so split vertices are the only candidates
// that matter.
struct AugmentedCopies {
    int base_vertex_count = 0;
    std::vector<int> sink_copy_of_split;    // ids in `with_sink_copies`
    std::vector<int> source_copy_of_split;  // ids in `with_source_copies`
};

struct AugmentedGraphs {
    Digraph with_sink_copies;    // all v'
    Digraph with_source_copies;  // all v''
    AugmentedCopies copies;
};

AugmentedGraphs augment_copies(const SplitGraph& s);

struct CandidateResult {
    std::vector<EdgeId> candidate_edges;  // sorted; superset of every essential split vertex's edge
    int rerandomizations = 0;
    int certification_queries = 0;
};

// The representative-set bound of the key lemma: M1 uniform of rank c on
// V(split graph), M2 the gammoid from the terminals on the sink-augmented
// graph, M3 the gammoid on the source-augmented graph truncated to rank c+d
// (paths in the source-augmented graph run toward the terminals, so M3 is the
// gammoid of its reversal). Requires every cut of size <= c to leave at most
// d terminals on its smaller side. |result| <= c * |T| * (c+d).
//
// Triples of terminal-adjacent edges are placed first; if one of them fails
// to enter the representative set the construction re-randomizes, so the kept
// terminal edges are always counted inside the rank-product bound.
CandidateResult essential_candidates(const Multigraph& g, const TerminalSet& t, int c, int d,
                                     const Fp& field, uint64_t seed);

struct CoverRoundInfo {
    int round;
    const Multigraph& graph;
    const std::vector<EdgeId>& candidates;
    const std::vector<EdgeId>& about_to_contract;
};

struct CoverResult {
    std::vector<EdgeId> cover;  // F: surviving edge ids of the input graph
    int rounds = 0;
    int contractions = 0;
    int rerandomizations = 0;
};

struct CoverOptions {
    bool batch_contract = false;  // contract every non-candidate per round (experimental)
    std::function<void(const CoverRoundInfo&)> on_round;
};

// Contraction loop: recompute the candidate set, contract the lowest-id
// non-candidate interior edge, repeat until every surviving edge is a
// candidate. Terminal-adjacent edges are never contracted. |F| <= c*|T|*(c+d).
CoverResult cover_all_c_cuts(const Multigraph& g, const TerminalSet& t, int c, int d,
                             const Fp& field, uint64_t seed, const CoverOptions& opts = {});

}  // namespace mimic
