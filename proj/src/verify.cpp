#include "mimic/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mimic/flow.hpp"
#include "mimic/seeds.hpp"

namespace mimic {

namespace {

std::pair<std::vector<VertexId>, std::vector<VertexId>> bipartition(const TerminalSet& t, uint64_t mask) {
    std::vector<VertexId> s, rest;
    for (int i = 0; i < t.size(); ++i)
        ((mask >> i) & 1 ? s : rest).push_back(t[i]);
    return {std::move(s), std::move(rest)};
}

}  // namespace

EquivalenceReport tc_equivalent(const Multigraph& g, const Multigraph& h, const TerminalSet& t,
                                int c, int guard_k) {
    if (c < 1) throw InputError("connectivity bound c must be >= 1");
    int k = t.size();
    if (k > guard_k)
        throw GuardRefusal("equivalence check refused: " + std::to_string(k) + " terminals exceed the guard of " +
                           std::to_string(guard_k));
    for (VertexId v : t.order()) {
        if (!g.has_vertex(v)) throw InputError("terminal " + std::to_string(v) + " missing from first graph");
        if (!h.has_vertex(v)) throw InputError("terminal " + std::to_string(v) + " missing from second graph");
    }
    EquivalenceReport report;
    if (k < 2) return report;
    // masks with bit 0 set cover every unordered bipartition exactly once
    for (uint64_t mask = 1; mask < (1ULL << k); mask += 2) {
        if (mask == (1ULL << k) - 1) continue;
        auto [s, rest] = bipartition(t, mask);
        int gv = bounded_edge_mincut(g, s, rest, c).capped(c);
        int hv = bounded_edge_mincut(h, s, rest, c).capped(c);
        ++report.subsets_checked;
        if (gv != hv) {
            report.equivalent = false;
            report.failing_subset = s;
            report.g_value = gv;
            report.h_value = hv;
            return report;
        }
    }
    return report;
}

namespace {

// Is S separated from REST once the edges in `removed` are deleted?
bool separates(const Multigraph& g, const std::vector<VertexId>& s, const std::vector<VertexId>& rest,
               const std::vector<EdgeId>& removed) {
    std::unordered_map<VertexId, std::vector<const EdgeRec*>> adj;
    for (const EdgeRec& e : g.edges()) {
        if (std::binary_search(removed.begin(), removed.end(), e.id)) continue;
        adj[e.u].push_back(&e);
        adj[e.v].push_back(&e);
    }
    std::unordered_map<VertexId, char> seen;
    std::vector<VertexId> stack(s.begin(), s.end());
    for (VertexId v : s) seen[v] = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (const EdgeRec* e : adj[u]) {
            VertexId w = e->u == u ? e->v : e->u;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (VertexId v : rest)
        if (seen[v]) return false;
    return true;
}

bool some_min_cut_inside(const Multigraph& g, const std::vector<VertexId>& s,
                         const std::vector<VertexId>& rest, const std::vector<EdgeId>& f, int value) {
    if (value == 0) return separates(g, s, rest, {});
    int n = static_cast<int>(f.size());
    if (value > n) return false;
    std::vector<int> pick(value);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        std::vector<EdgeId> removed;
        removed.reserve(value);
        for (int i : pick) removed.push_back(f[i]);
        if (separates(g, s, rest, removed)) return true;
        int i = value - 1;
        while (i >= 0 && pick[i] == n - value + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < value; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

CoverReport covers_all_c_cuts(const Multigraph& g, const TerminalSet& t, const std::vector<EdgeId>& f,
                              int c, int guard_k) {
    if (c < 1) throw InputError("connectivity bound c must be >= 1");
    int k = t.size();
    if (k > guard_k)
        throw GuardRefusal("cover check refused: " + std::to_string(k) + " terminals exceed the guard of " +
                           std::to_string(guard_k));
    std::vector<EdgeId> fs = f;
    std::sort(fs.begin(), fs.end());
    for (EdgeId id : fs)
        if (!g.has_edge(id)) throw InputError("cover edge " + std::to_string(id) + " not in graph");

    CoverReport report;
    if (k < 2) return report;
    for (uint64_t mask = 1; mask < (1ULL << k); mask += 2) {
        if (mask == (1ULL << k) - 1) continue;
        auto [s, rest] = bipartition(t, mask);
        CutAnswer ans = bounded_edge_mincut(g, s, rest, c);
        ++report.subsets_checked;
        if (ans.exceeded()) continue;
        if (!some_min_cut_inside(g, s, rest, fs, ans.value())) {
            report.covered = false;
            report.failing_subset = s;
            report.mincut_value = ans.value();
            return report;
        }
    }
    return report;
}

std::vector<int> essential_vertices_bruteforce(const SplitGraph& s, int c, int guard_k,
                                               int guard_vertices) {
    int k = static_cast<int>(s.terminal_ids.size());
    if (k > guard_k)
        throw GuardRefusal("essentiality enumeration refused: " + std::to_string(k) + " terminals");
    if (s.vertex_count > guard_vertices)
        throw GuardRefusal("essentiality enumeration refused: " + std::to_string(s.vertex_count) + " vertices");
    Digraph d = s.directed();
    std::vector<char> essential(s.vertex_count, 0);
    if (k >= 2) {
        for (uint64_t mask = 1; mask < (1ULL << k); mask += 2) {
            if (mask == (1ULL << k) - 1) continue;
            std::vector<int> a, b;
            for (int i = 0; i < k; ++i)
                ((mask >> i) & 1 ? a : b).push_back(s.terminal_ids[i]);
            CutAnswer base = min_vertex_cut(d, a, b, c);
            if (base.exceeded()) continue;
            for (int v = 0; v < s.vertex_count; ++v) {
                if (essential[v]) continue;
                if (min_vertex_cut(d, a, b, base.value(), v).exceeded()) essential[v] = 1;
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < s.vertex_count; ++v)
        if (essential[v]) out.push_back(v);
    return out;
}

int gammoid_oracle_check(const LinearRep& rep, const Digraph& d, const std::vector<int>& sources,
                         int trials, uint64_t seed) {
    std::mt19937_64 rng(derive_seed(seed, 0x6f7263686bULL));
    int n = d.vertex_count;
    int max_size = std::min(n, rep.mat.rows() + 1);
    int disagreements = 0;
    for (int q = 0; q < trials; ++q) {
        int size = static_cast<int>(rng() % static_cast<uint64_t>(max_size + 1));
        std::vector<int> pool(n);
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < size; ++i) {
            int j = i + static_cast<int>(rng() % static_cast<uint64_t>(n - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> x(pool.begin(), pool.begin() + size);
        bool rep_ind = columns_independent(rep, x);
        bool oracle_ind = max_vertex_disjoint_paths(d, sources, x) == size;
        if (rep_ind != oracle_ind) ++disagreements;
    }
    return disagreements;
}

}  // namespace mimic
