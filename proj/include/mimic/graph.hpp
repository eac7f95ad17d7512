#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mimic/errors.hpp"

namespace mimic {

using VertexId = int;
using EdgeId = int;

struct EdgeRec {
    EdgeId id;
    VertexId u, v;
};

// Unweighted multigraph. Edge ids are unique and stable: contraction removes
// ids, never renumbers, so provenance back to input edges survives any number
// of contractions. Self-loops are never stored.
class Multigraph {
public:
    Multigraph() = default;

    void add_vertex(VertexId v);
    bool has_vertex(VertexId v) const;
    EdgeId add_edge(VertexId u, VertexId v);
    void add_edge_with_id(EdgeId id, VertexId u, VertexId v);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<EdgeRec>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const EdgeRec& edge(EdgeId id) const;
    bool has_edge(EdgeId id) const;
    VertexId max_vertex_id() const;
    std::vector<EdgeId> edge_ids() const;

private:
    std::vector<VertexId> vertices_;  // sorted ascending
    std::vector<EdgeRec> edges_;      // sorted by id ascending
    EdgeId next_id_ = 0;
};

// edge ids incident to each vertex
std::unordered_map<VertexId, std::vector<EdgeId>> adjacency(const Multigraph& g);
std::unordered_map<VertexId, int> degrees(const Multigraph& g);

// Ordered set of terminal vertices. The order is fixed at creation and used
// for all subset enumeration, which makes runs deterministic.
class TerminalSet {
public:
    TerminalSet() = default;
    explicit TerminalSet(std::vector<VertexId> order);

    int size() const { return static_cast<int>(order_.size()); }
    VertexId operator[](int i) const { return order_[i]; }
    const std::vector<VertexId>& order() const { return order_; }
    bool contains(VertexId v) const;
    int index_of(VertexId v) const;  // -1 if absent

private:
    std::vector<VertexId> order_;
    std::unordered_map<VertexId, int> index_;
};

struct WeightedEdge {
    VertexId u, v;
    long long w;
};

// Each weight-w edge becomes min(w, c+1) parallel unit edges: multiplicities
// above c+1 cannot change any cut value capped at c. Input self-loops are
// dropped. Edge ids follow input order (loops consume no id).
Multigraph from_weighted(const std::vector<VertexId>& vertices, const std::vector<WeightedEdge>& edges, int c);

struct PendantMap {
    // original terminal -> its c pendant vertices, in terminal order
    std::vector<std::pair<VertexId, std::vector<VertexId>>> groups;
    std::unordered_map<VertexId, VertexId> original_of_pendant;
};

struct PendantResult {
    Multigraph graph;
    TerminalSet terminals;  // the |T| * c new degree-1 vertices
    PendantMap map;
};

// Degree-1 reduction: for each terminal t attach c fresh pendant vertices and
// make those the terminals. Capped cuts between corresponding terminal
// partitions are preserved.
PendantResult attach_pendant_terminals(const Multigraph& g, const TerminalSet& t, int c);

struct ContractionResult {
    Multigraph graph;
    std::map<VertexId, VertexId> vertex_map;  // total on old vertices; image = min id of class
};

// Quotient by the given edge set. Parallel edges are kept, self-loops dropped.
ContractionResult contract_edges(const Multigraph& g, const std::vector<EdgeId>& to_contract);

// One cell of a partition of V \ T, with one fresh degree-1 terminal per
// boundary edge. Edge ids in the piece graph are the host graph's ids.
struct Piece {
    std::vector<VertexId> interior;  // sorted
    Multigraph graph;
    TerminalSet terminals;                            // boundary terminals, in boundary-edge-id order
    std::map<VertexId, EdgeId> boundary_edge_of_terminal;
};

Piece build_piece(const Multigraph& g, const TerminalSet& t, const std::vector<VertexId>& interior);

// Inverse of the degree-1 reduction: identify each terminal's c pendants into
// a single vertex carrying the original terminal id. Pendant edges survive as
// parallel edges of the merged vertex. Non-pendant vertices are shifted to
// fresh ids so merged terminals can never collide with them.
Multigraph merge_pendant_groups(const Multigraph& h, const PendantMap& pm);

struct MergeResult {
    Multigraph graph;
    std::map<VertexId, VertexId> vertex_map;  // vertex of h -> vertex of graph
};
MergeResult merge_pendant_groups_mapped(const Multigraph& h, const PendantMap& pm);

struct PieceStats {
    int index = 0;
    int terminals = 0;
    int d = 0;
    int cover_size = 0;
    int rounds = 0;
    int contractions = 0;
    int rerandomizations = 0;
    bool exact_certificate = false;
};

struct BuildStats {
    std::string mode;
    std::string oracle;
    uint64_t seed = 0;
    int c = 0;
    int original_terminals = 0;
    int working_terminals = 0;  // after the degree-1 reduction
    int pieces = 0;
    int splits = 0;
    int sum_piece_terminals = 0;
    int f_size = 0;
    int h_vertices = 0;
    int h_edges = 0;
    double wall_ms = 0.0;
    std::vector<PieceStats> per_piece;
};

// Output of the full pipeline. `graph` contains the original terminal ids;
// every other vertex is a contraction class under `vertex_map`.
struct MimickingNetwork {
    Multigraph graph;
    TerminalSet terminals;
    std::map<VertexId, VertexId> vertex_map;  // original vertex -> vertex of graph
    std::vector<EdgeId> retained_edges;       // F, as ids of the pendant-attached multigraph
    BuildStats stats;
};

}  // namespace mimic
