#include "mimic/graph.hpp"

#include <algorithm>
#include <set>

namespace mimic {

void Multigraph::add_vertex(VertexId v) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it != vertices_.end() && *it == v) return;
    vertices_.insert(it, v);
}

bool Multigraph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
    EdgeId id = next_id_;
    add_edge_with_id(id, u, v);
    return id;
}

void Multigraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
    if (u == v) throw InternalError("self-loop insertion attempted");
    if (!has_vertex(u) || !has_vertex(v)) throw InternalError("edge endpoint is not a live vertex");
    if (!edges_.empty() && id <= edges_.back().id) throw InternalError("edge ids must be inserted in increasing order");
    edges_.push_back({id, u, v});
    next_id_ = std::max(next_id_, id + 1);
}

const EdgeRec& Multigraph::edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const EdgeRec& e, EdgeId x) { return e.id < x; });
    if (it == edges_.end() || it->id != id) throw InputError("unknown edge id " + std::to_string(id));
    return *it;
}

bool Multigraph::has_edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const EdgeRec& e, EdgeId x) { return e.id < x; });
    return it != edges_.end() && it->id == id;
}

VertexId Multigraph::max_vertex_id() const {
    if (vertices_.empty()) return -1;
    return vertices_.back();
}

std::vector<EdgeId> Multigraph::edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(edges_.size());
    for (const EdgeRec& e : edges_) out.push_back(e.id);
    return out;
}

std::unordered_map<VertexId, std::vector<EdgeId>> adjacency(const Multigraph& g) {
    std::unordered_map<VertexId, std::vector<EdgeId>> adj;
    adj.reserve(g.vertices().size());
    for (VertexId v : g.vertices()) adj[v];
    for (const EdgeRec& e : g.edges()) {
        adj[e.u].push_back(e.id);
        adj[e.v].push_back(e.id);
    }
    return adj;
}

std::unordered_map<VertexId, int> degrees(const Multigraph& g) {
    std::unordered_map<VertexId, int> deg;
    deg.reserve(g.vertices().size());
    for (VertexId v : g.vertices()) deg[v] = 0;
    for (const EdgeRec& e : g.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

TerminalSet::TerminalSet(std::vector<VertexId> order) : order_(std::move(order)) {
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) {
        if (!index_.emplace(order_[i], i).second)
            throw InputError("duplicate terminal " + std::to_string(order_[i]));
    }
}

bool TerminalSet::contains(VertexId v) const { return index_.count(v) > 0; }

int TerminalSet::index_of(VertexId v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

Multigraph from_weighted(const std::vector<VertexId>& vertices, const std::vector<WeightedEdge>& edges, int c) {
    if (c < 1) throw InputError("connectivity bound c must be >= 1");
    Multigraph g;
    for (VertexId v : vertices) g.add_vertex(v);
    for (const WeightedEdge& e : edges) {
        if (e.w < 1) throw InputError("edge weight must be a positive integer");
        if (!g.has_vertex(e.u) || !g.has_vertex(e.v))
            throw InputError("edge endpoint outside the declared vertex range");
        if (e.u == e.v) continue;  // loops never appear in any cut
        long long copies = std::min<long long>(e.w, static_cast<long long>(c) + 1);
        for (long long i = 0; i < copies; ++i) g.add_edge(e.u, e.v);
    }
    return g;
}

PendantResult attach_pendant_terminals(const Multigraph& g, const TerminalSet& t, int c) {
    if (c < 1) throw InputError("connectivity bound c must be >= 1");
    if (t.size() == 0) throw InputError("terminal set is empty");
    for (VertexId v : t.order())
        if (!g.has_vertex(v)) throw InputError("terminal " + std::to_string(v) + " is not a vertex");

    PendantResult out;
    out.graph = g;
    std::vector<VertexId> new_terms;
    VertexId next = g.max_vertex_id() + 1;
    for (VertexId term : t.order()) {
        std::vector<VertexId> pendants;
        for (int i = 0; i < c; ++i) {
            VertexId p = next++;
            out.graph.add_vertex(p);
            out.graph.add_edge(term, p);
            pendants.push_back(p);
            new_terms.push_back(p);
            out.map.original_of_pendant[p] = term;
        }
        out.map.groups.emplace_back(term, std::move(pendants));
    }
    out.terminals = TerminalSet(new_terms);
    return out;
}

ContractionResult contract_edges(const Multigraph& g, const std::vector<EdgeId>& to_contract) {
    // union-find over vertices, representative = min id of its class
    std::map<VertexId, VertexId> parent;
    for (VertexId v : g.vertices()) parent[v] = v;
    auto find = [&](VertexId v) {
        VertexId r = v;
        while (parent[r] != r) r = parent[r];
        while (parent[v] != r) {
            VertexId nxt = parent[v];
            parent[v] = r;
            v = nxt;
        }
        return r;
    };
    std::set<EdgeId> contracted(to_contract.begin(), to_contract.end());
    for (EdgeId id : contracted) {
        const EdgeRec& e = g.edge(id);  // throws on unknown id
        VertexId ru = find(e.u), rv = find(e.v);
        if (ru == rv) continue;
        if (ru > rv) std::swap(ru, rv);
        parent[rv] = ru;
    }
    ContractionResult res;
    for (VertexId v : g.vertices()) {
        VertexId r = find(v);
        res.vertex_map[v] = r;
        res.graph.add_vertex(r);
    }
    for (const EdgeRec& e : g.edges()) {
        if (contracted.count(e.id)) continue;
        VertexId u = res.vertex_map.at(e.u), v = res.vertex_map.at(e.v);
        if (u == v) continue;  // became a self-loop
        res.graph.add_edge_with_id(e.id, u, v);
    }
    return res;
}

Piece build_piece(const Multigraph& g, const TerminalSet& t, const std::vector<VertexId>& interior) {
    Piece piece;
    piece.interior = interior;
    std::sort(piece.interior.begin(), piece.interior.end());
    piece.interior.erase(std::unique(piece.interior.begin(), piece.interior.end()), piece.interior.end());
    for (VertexId v : piece.interior) {
        if (t.contains(v)) throw InputError("piece interior contains terminal " + std::to_string(v));
        if (!g.has_vertex(v)) throw InputError("piece interior vertex is not in the graph");
    }
    auto inside = [&](VertexId v) {
        return std::binary_search(piece.interior.begin(), piece.interior.end(), v);
    };

    for (VertexId v : piece.interior) piece.graph.add_vertex(v);

    std::vector<const EdgeRec*> interior_edges, boundary_edges;
    for (const EdgeRec& e : g.edges()) {
        bool iu = inside(e.u), iv = inside(e.v);
        if (iu && iv)
            interior_edges.push_back(&e);
        else if (iu || iv)
            boundary_edges.push_back(&e);
    }

    // Fresh terminal vertex per boundary edge, allocated in edge-id order.
    VertexId next = g.max_vertex_id() + 1;
    std::vector<VertexId> term_order;
    std::vector<std::pair<EdgeId, std::pair<VertexId, VertexId>>> pending;  // id -> (inner endpoint, terminal)
    for (const EdgeRec* e : boundary_edges) {
        VertexId inner = inside(e->u) ? e->u : e->v;
        VertexId term = next++;
        piece.graph.add_vertex(term);
        term_order.push_back(term);
        piece.boundary_edge_of_terminal[term] = e->id;
        pending.push_back({e->id, {inner, term}});
    }
    // Re-add all piece edges in id order so the edge list stays sorted.
    size_t ii = 0, bi = 0;
    while (ii < interior_edges.size() || bi < pending.size()) {
        bool take_interior = bi >= pending.size() ||
                             (ii < interior_edges.size() && interior_edges[ii]->id < pending[bi].first);
        if (take_interior) {
            piece.graph.add_edge_with_id(interior_edges[ii]->id, interior_edges[ii]->u, interior_edges[ii]->v);
            ++ii;
        } else {
            piece.graph.add_edge_with_id(pending[bi].first, pending[bi].second.first, pending[bi].second.second);
            ++bi;
        }
    }
    piece.terminals = TerminalSet(term_order);
    return piece;
}

MergeResult merge_pendant_groups_mapped(const Multigraph& h, const PendantMap& pm) {
    for (const auto& [term, pendants] : pm.groups)
        for (VertexId p : pendants)
            if (!h.has_vertex(p))
                throw InternalError("pendant vertex " + std::to_string(p) + " missing from contracted graph");

    VertexId offset = 0;
    for (const auto& [term, pendants] : pm.groups) offset = std::max(offset, term);
    offset = std::max(offset, h.max_vertex_id()) + 1;

    auto image = [&](VertexId v) -> VertexId {
        auto it = pm.original_of_pendant.find(v);
        if (it != pm.original_of_pendant.end()) return it->second;
        return v + offset;
    };

    MergeResult out;
    for (VertexId v : h.vertices()) {
        out.vertex_map[v] = image(v);
        out.graph.add_vertex(image(v));
    }
    for (const EdgeRec& e : h.edges()) {
        VertexId u = image(e.u), v = image(e.v);
        if (u == v) continue;
        out.graph.add_edge_with_id(e.id, u, v);
    }
    return out;
}

Multigraph merge_pendant_groups(const Multigraph& h, const PendantMap& pm) {
    return merge_pendant_groups_mapped(h, pm).graph;
}

}  // namespace mimic
