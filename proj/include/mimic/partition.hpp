#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mimic/cutcover.hpp"
#include "mimic/field.hpp"
#include "mimic/graph.hpp"

namespace mimic {

enum class RefineMode { existence, expander };
enum class OracleMode { exact, spectral };

struct RunConfig {
    int c = 1;
    RefineMode mode = RefineMode::expander;
    OracleMode oracle = OracleMode::exact;
    uint64_t seed = 1;
    uint64_t prime = Fp::kMersenne61;
    double phi_override = 0.0;  // <= 0 selects 1 / (10 * sigma * log2 n)
    double sigma = 1.0;         // assumed sparsest-cut oracle quality
    int enum_threshold = 18;    // max terminals for exhaustive bipartition enumeration
    bool batch_contract = false;
};

// Per-piece bound d on the smaller terminal side of any cut with <= c edges,
// together with how it was obtained.
struct Certificate {
    enum class Method { existence_bound, exact_expansion, fallback };
    Method method = Method::fallback;
    long long phi_num = 0, phi_den = 1;  // certified expansion, exact_expansion only
    int d = 0;
};

struct SplitLogEntry {
    int piece_index;
    int cut_size;
    int a_terminals, b_terminals;  // terminal counts of the two new pieces
};

struct PartitionResult {
    std::vector<Piece> pieces;
    std::vector<Certificate> certificates;  // parallel to pieces
    std::vector<SplitLogEntry> splits;
};

// A cut certifying that the piece violates the existence-mode refinement
// condition: at most c edges with at least 3c terminals on both sides. None
// when no such cut exists. Enumerates terminal bipartitions, so pieces beyond
// the threshold are refused (use expander mode instead).
std::optional<std::vector<VertexId>> violating_cut_exact(const Piece& piece, int c, int enum_threshold);

PartitionResult refine_existence(const Multigraph& g, const TerminalSet& t, int c, int enum_threshold);

struct SparsestCut {
    std::vector<VertexId> side;
    long long num = 0, den = 1;  // cut size / smaller terminal side

    bool ratio_less_than(double x) const { return static_cast<double>(num) < x * static_cast<double>(den); }
};

// Exact mode minimizes mincut(A,B)/min(|A|,|B|) over terminal bipartitions,
// which equals the true terminal-expansion minimum (the optimal vertex set
// induces a bipartition whose minimum cut is no larger). Spectral mode is a
// sweep cut over a terminal-deflated diffusion vector: no guarantee, the
// ratio is reported as found.
SparsestCut sparsest_terminal_cut(const Piece& piece, OracleMode mode, int enum_threshold, uint64_t seed);

PartitionResult refine_expander(const Multigraph& g, const TerminalSet& t, int c, const RunConfig& config);

struct BuildOptions {
    RunConfig config;
    // Test hook: replaces the refiner with an externally supplied partition of
    // the non-terminals; every cell is certified by fallback.
    const std::vector<std::vector<VertexId>>* partition_override = nullptr;
    std::function<void(const CoverRoundInfo&)> cover_hook;
};

// Full pipeline: cap multiplicities, reduce terminals to degree 1, refine the
// partition, cover all c-cuts per piece, contract everything outside the
// union of the covers, and undo the degree-1 reduction.
MimickingNetwork build_network(const Multigraph& g, const TerminalSet& t, const BuildOptions& opts);
MimickingNetwork build_network(const std::vector<VertexId>& vertices, const std::vector<WeightedEdge>& edges,
                               const std::vector<VertexId>& terminals, const BuildOptions& opts);

std::string format_stats(const BuildStats& stats);

double default_phi(int n, double sigma);

}  // namespace mimic
