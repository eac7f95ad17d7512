#include "mimic/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mimic/seeds.hpp"

namespace mimic {

WeightedInstance random_weighted_instance(uint64_t seed, const InstanceLimits& lim) {
    std::mt19937_64 rng(derive_seed(seed, 0x696e7374ULL));
    WeightedInstance inst;
    int n = 4 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, lim.max_n - 3)));
    inst.vertices.resize(n);
    std::iota(inst.vertices.begin(), inst.vertices.end(), 1);

    inst.c = 1 + static_cast<int>(rng() % static_cast<uint64_t>(lim.max_c));
    int k_cap = std::min(std::min(lim.max_k, n), std::max(2, lim.max_kc / inst.c));
    int k = 2 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, k_cap - 1)));
    std::vector<VertexId> pool = inst.vertices;
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(rng() % static_cast<uint64_t>(n - i));
        std::swap(pool[i], pool[j]);
    }
    inst.terminals.assign(pool.begin(), pool.begin() + k);

    int m = std::min(lim.max_m, n - 1 + static_cast<int>(rng() % static_cast<uint64_t>(lim.max_m)));
    bool mostly_connected = rng() % 5 != 0;
    if (mostly_connected) {
        // random spanning tree first, extra edges after
        std::vector<VertexId> shuffled = inst.vertices;
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
            std::swap(shuffled[i], shuffled[j]);
        }
        for (int i = 1; i < n && static_cast<int>(inst.edges.size()) < m; ++i) {
            VertexId u = shuffled[static_cast<int>(rng() % static_cast<uint64_t>(i))];
            long long w = 1 + static_cast<long long>(rng() % static_cast<uint64_t>(lim.max_w));
            inst.edges.push_back({u, shuffled[i], w});
        }
    }
    while (static_cast<int>(inst.edges.size()) < m) {
        VertexId u = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n));
        VertexId v = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n));
        if (u == v) continue;
        long long w = 1 + static_cast<long long>(rng() % static_cast<uint64_t>(lim.max_w));
        inst.edges.push_back({u, v, w});
    }
    return inst;
}

Degree1Instance random_degree1_instance(uint64_t seed, int max_core, int max_m, int k) {
    std::mt19937_64 rng(derive_seed(seed, 0x64656731ULL));
    int n = std::max(k, 2) + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, max_core)));
    Multigraph g;
    for (VertexId v = 0; v < n; ++v) g.add_vertex(v);
    int m = n - 1 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, max_m - n + 2)));
    for (int i = 1; i < n; ++i) g.add_edge(static_cast<int>(rng() % static_cast<uint64_t>(i)), i);
    for (int i = n - 1; i < m; ++i) {
        VertexId u = static_cast<int>(rng() % static_cast<uint64_t>(n));
        VertexId v = static_cast<int>(rng() % static_cast<uint64_t>(n));
        if (u != v) g.add_edge(u, v);
    }
    std::vector<VertexId> terms;
    for (int i = 0; i < k; ++i) {
        VertexId host = static_cast<int>(rng() % static_cast<uint64_t>(n));
        VertexId t = n + i;
        g.add_vertex(t);
        g.add_edge(host, t);
        terms.push_back(t);
    }
    return {std::move(g), TerminalSet(terms)};
}

Digraph random_digraph(uint64_t seed, int max_n, double arc_density) {
    std::mt19937_64 rng(derive_seed(seed, 0x64696772ULL));
    Digraph d;
    d.vertex_count = 2 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, max_n - 1)));
    uint64_t threshold = static_cast<uint64_t>(arc_density * 1000.0);
    for (int u = 0; u < d.vertex_count; ++u)
        for (int v = 0; v < d.vertex_count; ++v)
            if (u != v && rng() % 1000 < threshold) d.add_arc(u, v);
    return d;
}

}  // namespace mimic
