#pragma once

#include <cstdint>
#include <vector>

#include "mimic/flow.hpp"
#include "mimic/graph.hpp"

namespace mimic {

// Seeded instance generators shared by the self-test command, the unit tests
// and the acceptance suite.

struct WeightedInstance {
    std::vector<VertexId> vertices;
    std::vector<WeightedEdge> edges;
    std::vector<VertexId> terminals;
    int c = 1;
};

struct InstanceLimits {
    int max_n = 20;
    int max_m = 40;
    int max_k = 6;
    int max_c = 4;
    int max_kc = 16;  // keeps existence-mode enumeration inside the threshold
    int max_w = 6;
};

WeightedInstance random_weighted_instance(uint64_t seed, const InstanceLimits& limits = {});

// Random core graph plus k pendant terminals of degree 1, ready for the
// cut-cover engine without the pendant reduction.
struct Degree1Instance {
    Multigraph graph;
    TerminalSet terminals;
};

Degree1Instance random_degree1_instance(uint64_t seed, int max_core, int max_m, int k);

Digraph random_digraph(uint64_t seed, int max_n, double arc_density = 0.25);

}  // namespace mimic
