#pragma once

#include <optional>
#include <vector>

#include "mimic/graph.hpp"

namespace mimic {

// Directed graph on vertices 0..vertex_count-1. Parallel arcs allowed.
struct Digraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> arcs;

    void add_arc(int u, int v) { arcs.push_back({u, v}); }
    Digraph reversed() const;
};

// Exact answer up to a bound: Value(v, witness) when the minimum cut is
// v <= bound, Exceeds(bound) otherwise. The witness is the cut itself (edge
// ids for edge cuts, vertex ids for vertex cuts); the partitioner and the
// verifier consume the sets, not just the values.
class CutAnswer {
public:
    static CutAnswer value(int v, std::vector<int> witness, std::vector<int> source_side = {});
    static CutAnswer exceeds(int bound);

    bool exceeded() const { return exceeded_; }
    int value() const;
    int bound() const;
    const std::vector<int>& witness() const;
    // residual-reachable side of the witness cut (contains A); edge cuts only
    const std::vector<int>& source_side() const;
    // min(cut, cap) assuming cap <= query bound
    int capped(int cap) const { return exceeded_ ? cap : std::min(value_, cap); }

private:
    bool exceeded_ = false;
    int value_ = 0;
    int bound_ = 0;
    std::vector<int> witness_;
    std::vector<int> source_side_;
};

// Minimum edge cut between vertex sets A and B, exact while <= bound.
// A or B empty yields Value(0, {}). Overlapping sets are an input error.
CutAnswer bounded_edge_mincut(const Multigraph& g, const std::vector<VertexId>& a,
                              const std::vector<VertexId>& b, int bound);

// Minimum vertex cut C between A and B in a directed graph; C may intersect
// A and B. Computed via vertex splitting and bounded max-flow. `uncuttable`
// (if >= 0) exempts one vertex from the cut, which the essentiality oracle
// uses to test whether a vertex lies in every minimum cut.
CutAnswer min_vertex_cut(const Digraph& d, const std::vector<int>& a, const std::vector<int>& b,
                         int bound, int uncuttable = -1);

// Maximum number of fully vertex-disjoint paths starting in T and ending in
// X. Zero-length paths count: a vertex in both T and X links to itself.
int max_vertex_disjoint_paths(const Digraph& d, const std::vector<int>& t, const std::vector<int>& x);

}  // namespace mimic
