#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mimic/cutcover.hpp"
#include "mimic/graph.hpp"
#include "mimic/matroids.hpp"

namespace mimic {

// Exhaustive (T,c)-equivalence check: min(mincut, c) compared over every
// terminal bipartition. Guards are hard refusals, never silent sampling.
struct EquivalenceReport {
    bool equivalent = true;
    std::vector<VertexId> failing_subset;  // lexicographically first failure
    int g_value = 0, h_value = 0;          // capped values on the failing subset
    long long subsets_checked = 0;
};

EquivalenceReport tc_equivalent(const Multigraph& g, const Multigraph& h, const TerminalSet& t,
                                int c, int guard_k = 20);

// Does F contain a full minimum cut for every terminal bipartition of value
// <= c? Minimum cuts inside F are found by testing each v-subset of F for
// cut-ness, so verification cost is |F|^c; this runs at desk scale only.
struct CoverReport {
    bool covered = true;
    std::vector<VertexId> failing_subset;
    int mincut_value = 0;
    long long subsets_checked = 0;
};

CoverReport covers_all_c_cuts(const Multigraph& g, const TerminalSet& t, const std::vector<EdgeId>& f,
                              int c, int guard_k = 20);

// A vertex is essential when some terminal bipartition with minimum vertex
// cut <= c keeps it in every minimum cut: exempting the vertex from cuts must
// strictly increase the cut value. Checked by enumeration over bipartitions.
std::vector<int> essential_vertices_bruteforce(const SplitGraph& s, int c, int guard_k = 16,
                                               int guard_vertices = 4000);

// Samples `trials` random subsets and compares representation independence
// against the vertex-disjoint-path oracle. Returns the disagreement count.
int gammoid_oracle_check(const LinearRep& rep, const Digraph& d, const std::vector<int>& sources,
                         int trials, uint64_t seed);

}  // namespace mimic
