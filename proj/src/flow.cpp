#include "mimic/flow.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace mimic {

Digraph Digraph::reversed() const {
    Digraph r;
    r.vertex_count = vertex_count;
    r.arcs.reserve(arcs.size());
    for (auto [u, v] : arcs) r.add_arc(v, u);
    return r;
}

CutAnswer CutAnswer::value(int v, std::vector<int> witness, std::vector<int> source_side) {
    CutAnswer a;
    a.exceeded_ = false;
    a.value_ = v;
    a.witness_ = std::move(witness);
    a.source_side_ = std::move(source_side);
    return a;
}

CutAnswer CutAnswer::exceeds(int bound) {
    CutAnswer a;
    a.exceeded_ = true;
    a.bound_ = bound;
    return a;
}

int CutAnswer::value() const {
    if (exceeded_) throw InternalError("CutAnswer::value on Exceeds");
    return value_;
}

int CutAnswer::bound() const {
    if (!exceeded_) throw InternalError("CutAnswer::bound on Value");
    return bound_;
}

const std::vector<int>& CutAnswer::witness() const {
    if (exceeded_) throw InternalError("CutAnswer::witness on Exceeds");
    return witness_;
}

const std::vector<int>& CutAnswer::source_side() const {
    if (exceeded_) throw InternalError("CutAnswer::source_side on Exceeds");
    return source_side_;
}

namespace {

// Dinic with an augmentation limit: consumers only ever need values capped at
// their bound, so the solver stops as soon as the flow exceeds it.
class Dinic {
public:
    explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

    int add_arc(int u, int v, int cap, int rev_cap = 0) {
        int id = static_cast<int>(to_.size());
        to_.push_back(v);
        cap_.push_back(cap);
        next_.push_back(head_[u]);
        head_[u] = id;
        to_.push_back(u);
        cap_.push_back(rev_cap);
        next_.push_back(head_[v]);
        head_[v] = id + 1;
        return id;
    }

    // Runs until the flow would exceed `limit` or no augmenting path remains.
    long long run(int s, int t, long long limit) {
        long long flow = 0;
        while (flow <= limit && bfs(s, t)) {
            std::copy(head_.begin(), head_.end(), it_.begin());
            long long pushed;
            while (flow <= limit && (pushed = dfs(s, t, limit + 1 - flow)) > 0) flow += pushed;
        }
        return flow;
    }

    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e = head_[u]; e >= 0; e = next_[e]) {
                if (cap_[e] > 0 && !seen[to_[e]]) {
                    seen[to_[e]] = 1;
                    stack.push_back(to_[e]);
                }
            }
        }
        return seen;
    }

    int residual_cap(int arc) const { return cap_[arc]; }

private:
    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e >= 0; e = next_[e]) {
                if (cap_[e] > 0 && level_[to_[e]] < 0) {
                    level_[to_[e]] = level_[u] + 1;
                    q.push(to_[e]);
                }
            }
        }
        return level_[t] >= 0;
    }

    long long dfs(int u, int t, long long want) {
        if (u == t || want == 0) return want;
        for (int& e = it_[u]; e >= 0; e = next_[e]) {
            int v = to_[e];
            if (cap_[e] > 0 && level_[v] == level_[u] + 1) {
                long long got = dfs(v, t, std::min<long long>(want, cap_[e]));
                if (got > 0) {
                    cap_[e] -= static_cast<int>(got);
                    cap_[e ^ 1] += static_cast<int>(got);
                    return got;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_, to_, cap_, next_, level_, it_;
};

}  // namespace

CutAnswer bounded_edge_mincut(const Multigraph& g, const std::vector<VertexId>& a,
                              const std::vector<VertexId>& b, int bound) {
    if (bound < 0) throw InputError("negative cut bound");
    std::unordered_set<VertexId> aset(a.begin(), a.end());
    for (VertexId v : b)
        if (aset.count(v)) throw InputError("cut query sides overlap at vertex " + std::to_string(v));
    if (a.empty() || b.empty()) return CutAnswer::value(0, {});
    for (VertexId v : a)
        if (!g.has_vertex(v)) throw InputError("cut query vertex not in graph");
    for (VertexId v : b)
        if (!g.has_vertex(v)) throw InputError("cut query vertex not in graph");

    std::unordered_map<VertexId, int> idx;
    idx.reserve(g.vertices().size());
    for (VertexId v : g.vertices()) idx.emplace(v, static_cast<int>(idx.size()));
    int n = static_cast<int>(idx.size());
    int s = n, t = n + 1;
    Dinic dinic(n + 2);
    int big = bound + 1;
    for (const EdgeRec& e : g.edges()) dinic.add_arc(idx.at(e.u), idx.at(e.v), 1, 1);
    for (VertexId v : a) dinic.add_arc(s, idx.at(v), big);
    for (VertexId v : b) dinic.add_arc(idx.at(v), t, big);

    long long flow = dinic.run(s, t, bound);
    if (flow > bound) return CutAnswer::exceeds(bound);

    std::vector<char> reach = dinic.residual_reachable(s);
    std::vector<int> witness;
    for (const EdgeRec& e : g.edges())
        if (reach[idx.at(e.u)] != reach[idx.at(e.v)]) witness.push_back(e.id);
    std::vector<int> side;
    for (VertexId v : g.vertices())
        if (reach[idx.at(v)]) side.push_back(v);
    return CutAnswer::value(static_cast<int>(flow), std::move(witness), std::move(side));
}

CutAnswer min_vertex_cut(const Digraph& d, const std::vector<int>& a, const std::vector<int>& b,
                         int bound, int uncuttable) {
    if (bound < 0) throw InputError("negative cut bound");
    std::unordered_set<int> aset(a.begin(), a.end());
    for (int v : b)
        if (aset.count(v)) throw InputError("vertex cut query sides overlap at vertex " + std::to_string(v));
    if (a.empty() || b.empty()) return CutAnswer::value(0, {});

    int n = d.vertex_count;
    // v_in = 2v, v_out = 2v+1; source n*2, sink n*2+1
    int s = 2 * n, t = 2 * n + 1;
    Dinic dinic(2 * n + 2);
    int big = bound + 2;
    std::vector<int> internal_arc(n);
    for (int v = 0; v < n; ++v)
        internal_arc[v] = dinic.add_arc(2 * v, 2 * v + 1, v == uncuttable ? big : 1);
    for (auto [u, v] : d.arcs) dinic.add_arc(2 * u + 1, 2 * v, big);
    for (int v : a) dinic.add_arc(s, 2 * v, big);
    for (int v : b) dinic.add_arc(2 * v + 1, t, big);

    long long flow = dinic.run(s, t, bound);
    if (flow > bound) return CutAnswer::exceeds(bound);

    std::vector<char> reach = dinic.residual_reachable(s);
    std::vector<int> witness;
    for (int v = 0; v < n; ++v)
        if (reach[2 * v] && !reach[2 * v + 1]) witness.push_back(v);
    return CutAnswer::value(static_cast<int>(flow), std::move(witness));
}

int max_vertex_disjoint_paths(const Digraph& d, const std::vector<int>& t_in, const std::vector<int>& x_in) {
    std::vector<int> t_set = t_in, x_set = x_in;
    std::sort(t_set.begin(), t_set.end());
    t_set.erase(std::unique(t_set.begin(), t_set.end()), t_set.end());
    std::sort(x_set.begin(), x_set.end());
    x_set.erase(std::unique(x_set.begin(), x_set.end()), x_set.end());
    if (t_set.empty() || x_set.empty()) return 0;
    int n = d.vertex_count;
    int s = 2 * n, t = 2 * n + 1;
    Dinic dinic(2 * n + 2);
    long long limit = std::min(t_set.size(), x_set.size());
    int big = static_cast<int>(limit) + 1;
    for (int v = 0; v < n; ++v) dinic.add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : d.arcs) dinic.add_arc(2 * u + 1, 2 * v, big);
    for (int v : t_set) dinic.add_arc(s, 2 * v, 1);
    for (int v : x_set) dinic.add_arc(2 * v + 1, t, 1);
    return static_cast<int>(dinic.run(s, t, limit));
}

}  // namespace mimic
