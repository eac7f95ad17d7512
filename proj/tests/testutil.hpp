#pragma once

// Brute-force oracles for the unit and acceptance tests. Everything here is
// exhaustive enumeration, independent of the flow/matroid implementations it
// is used to check.

#include <algorithm>
#include <limits>
#include <vector>

#include "mimic/flow.hpp"
#include "mimic/graph.hpp"

namespace testutil {

using mimic::Digraph;
using mimic::EdgeRec;
using mimic::Multigraph;
using mimic::VertexId;

// Minimum edge cut between A and B by enumerating every vertex bipartition.
inline int bruteforce_edge_mincut(const Multigraph& g, const std::vector<VertexId>& a,
                                  const std::vector<VertexId>& b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<VertexId> free_verts;
    auto in = [](const std::vector<VertexId>& set, VertexId v) {
        return std::find(set.begin(), set.end(), v) != set.end();
    };
    for (VertexId v : g.vertices())
        if (!in(a, v) && !in(b, v)) free_verts.push_back(v);
    int best = std::numeric_limits<int>::max();
    for (uint64_t mask = 0; mask < (1ULL << free_verts.size()); ++mask) {
        std::vector<VertexId> side = a;
        for (size_t i = 0; i < free_verts.size(); ++i)
            if ((mask >> i) & 1) side.push_back(free_verts[i]);
        int cut = 0;
        for (const EdgeRec& e : g.edges())
            if (in(side, e.u) != in(side, e.v)) ++cut;
        best = std::min(best, cut);
    }
    return best;
}

// Is there a path from a live A-vertex to a live B-vertex in d minus the cut?
inline bool digraph_separated(const Digraph& d, const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& cut) {
    std::vector<char> removed(d.vertex_count, 0);
    for (int v : cut) removed[v] = 1;
    std::vector<char> seen(d.vertex_count, 0);
    std::vector<int> stack;
    for (int v : a)
        if (!removed[v]) {
            seen[v] = 1;
            stack.push_back(v);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [x, y] : d.arcs)
            if (x == u && !removed[y] && !seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    for (int v : b)
        if (!removed[v] && seen[v]) return false;
    return true;
}

// Smallest vertex cut (which may intersect A and B) up to max_size, by
// subset enumeration; -1 when none that small exists.
inline int bruteforce_vertex_cut(const Digraph& d, const std::vector<int>& a, const std::vector<int>& b,
                                 int max_size) {
    for (int size = 0; size <= std::min(max_size, d.vertex_count); ++size) {
        if (size == 0) {
            if (digraph_separated(d, a, b, {})) return 0;
            continue;
        }
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        for (;;) {
            if (digraph_separated(d, a, b, pick)) return size;
            int i = size - 1;
            while (i >= 0 && pick[i] == d.vertex_count - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return -1;
}

// All minimum vertex cuts of the given value, by subset enumeration.
inline std::vector<std::vector<int>> all_min_vertex_cuts(const Digraph& d, const std::vector<int>& a,
                                                         const std::vector<int>& b, int value) {
    std::vector<std::vector<int>> cuts;
    std::vector<int> pick(value);
    for (int i = 0; i < value; ++i) pick[i] = i;
    if (value == 0) {
        if (digraph_separated(d, a, b, {})) cuts.push_back({});
        return cuts;
    }
    for (;;) {
        if (digraph_separated(d, a, b, pick)) cuts.push_back(pick);
        int i = value - 1;
        while (i >= 0 && pick[i] == d.vertex_count - value + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < value; ++j) pick[j] = pick[j - 1] + 1;
    }
    return cuts;
}

}  // namespace testutil
