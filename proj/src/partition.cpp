#include "mimic/partition.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mimic/flow.hpp"
#include "mimic/seeds.hpp"

namespace mimic {

double default_phi(int n, double sigma) {
    double logn = std::log2(std::max(n, 2));
    return 1.0 / (10.0 * sigma * logn);
}

namespace {

int popcount(uint64_t x) { return static_cast<int>(__builtin_popcountll(x)); }

std::pair<std::vector<VertexId>, std::vector<VertexId>> bipartition(const TerminalSet& t, uint64_t mask) {
    std::vector<VertexId> a, b;
    for (int i = 0; i < t.size(); ++i)
        ((mask >> i) & 1 ? a : b).push_back(t[i]);
    return {std::move(a), std::move(b)};
}

std::vector<VertexId> interior_intersection(const Piece& piece, const std::vector<VertexId>& side) {
    std::vector<VertexId> out;
    for (VertexId v : side)
        if (std::binary_search(piece.interior.begin(), piece.interior.end(), v)) out.push_back(v);
    return out;
}

std::vector<VertexId> interior_difference(const Piece& piece, const std::vector<VertexId>& sub) {
    std::vector<VertexId> out;
    std::set_difference(piece.interior.begin(), piece.interior.end(), sub.begin(), sub.end(),
                        std::back_inserter(out));
    return out;
}

}  // namespace

namespace {

// Copy of the piece graph with every terminal edge replicated c extra times,
// i.e. capacity c+1. Cuts of size <= c in this graph never separate a
// terminal from its unique neighbor, so witness sides keep each terminal on
// its neighbor's side and the potential accounting of the refinement is
// exact. Any cut of <= c edges in the piece maps to such a cut after moving
// at most c stranded terminals, which costs the cut-side bound one extra c.
Multigraph pin_terminal_edges(const Piece& piece, int c) {
    Multigraph pinned = piece.graph;
    for (const EdgeRec& e : piece.graph.edges()) {
        if (piece.terminals.contains(e.u) || piece.terminals.contains(e.v))
            for (int i = 0; i < c; ++i) pinned.add_edge(e.u, e.v);
    }
    return pinned;
}

int crossing_edges(const Multigraph& g, const std::vector<VertexId>& side) {
    int count = 0;
    for (const EdgeRec& e : g.edges())
        if (std::binary_search(side.begin(), side.end(), e.u) !=
            std::binary_search(side.begin(), side.end(), e.v))
            ++count;
    return count;
}

}  // namespace

std::optional<std::vector<VertexId>> violating_cut_exact(const Piece& piece, int c, int enum_threshold) {
    int k = piece.terminals.size();
    if (k < 6 * c) return std::nullopt;  // both sides >= 3c is impossible
    if (k > enum_threshold)
        throw GuardRefusal("existence-mode refinement refused: piece has " + std::to_string(k) +
                           " terminals (threshold " + std::to_string(enum_threshold) +
                           "); use expander mode");
    Multigraph pinned = pin_terminal_edges(piece, c);
    for (uint64_t mask = 1; mask < (1ULL << k); mask += 2) {
        int pc = popcount(mask);
        if (pc < 3 * c || k - pc < 3 * c) continue;
        auto [a, b] = bipartition(piece.terminals, mask);
        CutAnswer ans = bounded_edge_mincut(pinned, a, b, c);
        if (!ans.exceeded()) {
            std::vector<VertexId> side = ans.source_side();
            std::sort(side.begin(), side.end());
            return side;
        }
    }
    return std::nullopt;
}

namespace {

struct SplitOutcome {
    Piece a, b;
    int cut_size;
};

SplitOutcome split_piece(const Multigraph& g, const TerminalSet& t, const Piece& piece,
                         const std::vector<VertexId>& side, int cut_size) {
    std::vector<VertexId> ia = interior_intersection(piece, side);
    std::sort(ia.begin(), ia.end());
    std::vector<VertexId> ib = interior_difference(piece, ia);
    if (ia.empty() || ib.empty()) throw InternalError("split produced an empty piece interior");
    return {build_piece(g, t, ia), build_piece(g, t, ib), cut_size};
}

}  // namespace

PartitionResult refine_existence(const Multigraph& g, const TerminalSet& t, int c, int enum_threshold) {
    PartitionResult res;
    std::vector<VertexId> interior;
    for (VertexId v : g.vertices())
        if (!t.contains(v)) interior.push_back(v);
    if (!interior.empty()) res.pieces.push_back(build_piece(g, t, interior));

    std::deque<size_t> queue;
    for (size_t i = 0; i < res.pieces.size(); ++i) queue.push_back(i);
    while (!queue.empty()) {
        size_t idx = queue.front();
        queue.pop_front();
        const Piece& piece = res.pieces[idx];
        auto side = violating_cut_exact(piece, c, enum_threshold);
        if (!side) continue;
        // The witness has <= c edges and >= 3c terminals on each side, so the
        // potential sum of (|T_i| - 3c) drops by 3c - 2|cut| >= c per split.
        int cut_size = crossing_edges(piece.graph, *side);
        int old_terms = piece.terminals.size();
        SplitOutcome split = split_piece(g, t, piece, *side, cut_size);
        int ka = split.a.terminals.size(), kb = split.b.terminals.size();
        if (cut_size > c || ka < 3 * c || kb < 3 * c || ka + kb != old_terms + 2 * cut_size)
            throw InternalError("existence split violated the potential accounting");
        res.splits.push_back({static_cast<int>(idx), split.cut_size, ka, kb});
        res.pieces[idx] = std::move(split.a);
        res.pieces.push_back(std::move(split.b));
        queue.push_back(idx);
        queue.push_back(res.pieces.size() - 1);
    }
    // Termination rules out stranding-free cuts with >= 3c terminals on both
    // sides; an arbitrary cut of <= c edges can move at most c terminals when
    // its stranded terminals are pinned back, so its smaller side holds fewer
    // than 4c terminals.
    res.certificates.assign(res.pieces.size(), Certificate{Certificate::Method::existence_bound, 0, 1, 4 * c});
    return res;
}

SparsestCut sparsest_terminal_cut(const Piece& piece, OracleMode mode, int enum_threshold, uint64_t seed) {
    int k = piece.terminals.size();
    if (k < 2) throw InputError("sparsest terminal cut needs at least 2 terminals");

    if (mode == OracleMode::exact) {
        if (k > enum_threshold)
            throw GuardRefusal("exact sparsest-cut oracle refused: " + std::to_string(k) +
                               " terminals (threshold " + std::to_string(enum_threshold) + ")");
        SparsestCut best;
        bool have = false;
        // Every degree-1 terminal alone has ratio 1, so cuts above k edges
        // can never win and the flow bound k is enough.
        for (uint64_t mask = 1; mask < (1ULL << k); mask += 2) {
            int pc = popcount(mask);
            if (pc == k) continue;
            auto [a, b] = bipartition(piece.terminals, mask);
            long long den = std::min<long long>(pc, k - pc);
            CutAnswer ans = bounded_edge_mincut(piece.graph, a, b, k);
            if (ans.exceeded()) continue;
            long long num = ans.value();
            if (!have || num * best.den < best.num * den) {
                best.num = num;
                best.den = den;
                best.side = ans.source_side();
                have = true;
            }
        }
        if (!have) throw InternalError("sparsest cut enumeration found no finite cut");
        return best;
    }

    // Spectral sweep: a few rounds of the lazy walk, deflated against the
    // uniform terminal vector, then the best prefix of the sorted embedding.
    std::vector<VertexId> verts = piece.graph.vertices();
    int n = static_cast<int>(verts.size());
    std::unordered_map<VertexId, int> idx;
    for (int i = 0; i < n; ++i) idx.emplace(verts[i], i);
    std::vector<std::vector<int>> nbr(n);
    for (const EdgeRec& e : piece.graph.edges()) {
        nbr[idx.at(e.u)].push_back(idx.at(e.v));
        nbr[idx.at(e.v)].push_back(idx.at(e.u));
    }
    std::vector<char> is_term(n, 0);
    for (VertexId v : piece.terminals.order()) is_term[idx.at(v)] = 1;

    std::mt19937_64 rng(derive_seed(seed, 0x73776565ULL));
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = static_cast<double>(rng() % 2001) / 1000.0 - 1.0;
    int iters = 40 + 6 * static_cast<int>(std::ceil(std::log2(std::max(n, 2))));
    std::vector<double> y(n);
    for (int it = 0; it < iters; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0;
            for (int j : nbr[i]) s += x[j];
            y[i] = nbr[i].empty() ? x[i] : 0.5 * x[i] + 0.5 * s / static_cast<double>(nbr[i].size());
        }
        double tmean = 0;
        for (int i = 0; i < n; ++i)
            if (is_term[i]) tmean += y[i];
        tmean /= k;
        double norm = 0;
        for (int i = 0; i < n; ++i) {
            y[i] -= tmean;
            norm = std::max(norm, std::fabs(y[i]));
        }
        if (norm < 1e-12) break;
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return verts[a] < verts[b];
    });
    std::vector<char> in_prefix(n, 0);
    long long cut = 0, terms_in = 0;
    SparsestCut best;
    bool have = false;
    int best_prefix = -1;
    for (int p = 0; p < n - 1; ++p) {
        int v = order[p];
        in_prefix[v] = 1;
        for (int u : nbr[v]) cut += in_prefix[u] ? -1 : 1;
        if (is_term[v]) ++terms_in;
        long long den = std::min(terms_in, static_cast<long long>(k) - terms_in);
        if (den < 1) continue;
        if (!have || cut * best.den < best.num * den) {
            best.num = cut;
            best.den = den;
            best_prefix = p;
            have = true;
        }
    }
    if (!have) throw InternalError("sweep found no terminal-separating prefix");
    best.side.clear();
    for (int p = 0; p <= best_prefix; ++p) best.side.push_back(verts[order[p]]);
    std::sort(best.side.begin(), best.side.end());
    return best;
}

PartitionResult refine_expander(const Multigraph& g, const TerminalSet& t, int c, const RunConfig& config) {
    double phi = config.phi_override > 0 ? config.phi_override : default_phi(g.vertex_count(), config.sigma);
    if (phi <= 0 || phi > 1) throw InputError("expansion parameter must lie in (0, 1]");
    double split_below = phi * config.sigma;

    PartitionResult res;
    std::vector<VertexId> interior;
    for (VertexId v : g.vertices())
        if (!t.contains(v)) interior.push_back(v);
    if (!interior.empty()) res.pieces.push_back(build_piece(g, t, interior));

    std::vector<std::optional<SparsestCut>> exact_cut_of(res.pieces.size());
    std::vector<char> fallback_forced(res.pieces.size(), 0);
    std::deque<size_t> queue;
    for (size_t i = 0; i < res.pieces.size(); ++i) queue.push_back(i);
    int round = 0;
    while (!queue.empty()) {
        size_t idx = queue.front();
        queue.pop_front();
        const Piece& piece = res.pieces[idx];
        int k = piece.terminals.size();
        if (k < 2) continue;
        SparsestCut cut = sparsest_terminal_cut(piece, config.oracle, config.enum_threshold,
                                                derive_seed(config.seed, 0x72666e65ULL, round++));
        if (config.oracle == OracleMode::exact) exact_cut_of[idx] = cut;
        if (!cut.ratio_less_than(split_below)) continue;

        std::vector<VertexId> ia = interior_intersection(piece, cut.side);
        std::vector<VertexId> ib = interior_difference(piece, ia);
        if (ia.empty() || ib.empty()) {
            // Degenerate sweep cut; certify this piece by fallback instead.
            fallback_forced[idx] = 1;
            continue;
        }
        SplitOutcome split = split_piece(g, t, piece, cut.side, static_cast<int>(cut.num));
        int ka = split.a.terminals.size(), kb = split.b.terminals.size();
        if (std::max(ka, kb) >= k) {
            // A split must strictly shrink the larger side's terminal count;
            // reject the cut and certify by fallback.
            fallback_forced[idx] = 1;
            continue;
        }
        res.splits.push_back({static_cast<int>(idx), split.cut_size, ka, kb});
        res.pieces[idx] = std::move(split.a);
        res.pieces.push_back(std::move(split.b));
        exact_cut_of[idx] = std::nullopt;
        exact_cut_of.push_back(std::nullopt);
        fallback_forced.push_back(0);
        queue.push_back(idx);
        queue.push_back(res.pieces.size() - 1);
    }

    // Certification: exact expansion where enumerable, fallback d = max(c, k_i)
    // otherwise. Fallback always satisfies the cut-side hypothesis.
    res.certificates.resize(res.pieces.size());
    for (size_t i = 0; i < res.pieces.size(); ++i) {
        const Piece& piece = res.pieces[i];
        int k = piece.terminals.size();
        Certificate& cert = res.certificates[i];
        if (k < 2) {
            cert = {Certificate::Method::exact_expansion, 1, 1, c};
            continue;
        }
        if (fallback_forced[i] || k > config.enum_threshold) {
            cert = {Certificate::Method::fallback, 0, 1, std::max(c, k)};
            continue;
        }
        SparsestCut exact = exact_cut_of[i] ? *exact_cut_of[i]
                                            : sparsest_terminal_cut(piece, OracleMode::exact,
                                                                    config.enum_threshold, config.seed);
        if (exact.num <= 0) {  // piece splits terminals at zero cost; certify by fallback
            cert = {Certificate::Method::fallback, 0, 1, std::max(c, k)};
            continue;
        }
        long long d = (static_cast<long long>(c) * exact.den + exact.num - 1) / exact.num;  // ceil(c/phi)
        cert = {Certificate::Method::exact_expansion, exact.num, exact.den,
                static_cast<int>(std::max<long long>(c, d))};
    }
    return res;
}

namespace {

PartitionResult partition_from_override(const Multigraph& g, const TerminalSet& t, int c,
                                        const std::vector<std::vector<VertexId>>& cells) {
    PartitionResult res;
    std::set<VertexId> seen;
    for (const auto& cell : cells) {
        if (cell.empty()) continue;
        for (VertexId v : cell) {
            if (t.contains(v)) throw InputError("override cell contains a terminal");
            if (!seen.insert(v).second) throw InputError("override cells overlap");
        }
        res.pieces.push_back(build_piece(g, t, cell));
    }
    for (VertexId v : g.vertices())
        if (!t.contains(v) && !seen.count(v))
            throw InputError("override cells do not cover vertex " + std::to_string(v));
    for (const Piece& piece : res.pieces)
        res.certificates.push_back(
            {Certificate::Method::fallback, 0, 1, std::max(c, piece.terminals.size())});
    return res;
}

}  // namespace

namespace {

// tags pipeline errors with the stage they came from
template <typename F>
auto stage(const char* name, F&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const InputError& e) {
        throw InputError(std::string(name) + ": " + e.what());
    } catch (const GuardRefusal& e) {
        throw GuardRefusal(std::string(name) + ": " + e.what());
    }
}

}  // namespace

MimickingNetwork build_network(const Multigraph& g, const TerminalSet& t, const BuildOptions& opts) {
    auto t_start = std::chrono::steady_clock::now();
    const RunConfig& cfg = opts.config;
    if (cfg.c < 1) throw InputError("connectivity bound c must be >= 1");
    if (t.size() == 0) throw InputError("terminal set is empty");
    Fp field(cfg.prime);

    PendantResult reduced = stage("reduce", [&] { return attach_pendant_terminals(g, t, cfg.c); });
    const Multigraph& g1 = reduced.graph;
    const TerminalSet& t1 = reduced.terminals;

    PartitionResult part = stage("refine", [&] {
        if (opts.partition_override)
            return partition_from_override(g1, t1, cfg.c, *opts.partition_override);
        if (cfg.mode == RefineMode::existence) return refine_existence(g1, t1, cfg.c, cfg.enum_threshold);
        return refine_expander(g1, t1, cfg.c, cfg);
    });

    std::set<EdgeId> cover_union;
    MimickingNetwork out;
    out.stats.mode = cfg.mode == RefineMode::existence ? "existence" : "expander";
    out.stats.oracle = cfg.oracle == OracleMode::exact ? "exact" : "spectral";
    out.stats.seed = cfg.seed;
    out.stats.c = cfg.c;
    out.stats.original_terminals = t.size();
    out.stats.working_terminals = t1.size();
    out.stats.pieces = static_cast<int>(part.pieces.size());
    out.stats.splits = static_cast<int>(part.splits.size());

    for (size_t i = 0; i < part.pieces.size(); ++i) {
        const Piece& piece = part.pieces[i];
        const Certificate& cert = part.certificates[i];
        CoverOptions copts;
        copts.batch_contract = cfg.batch_contract;
        copts.on_round = opts.cover_hook;
        CoverResult cover = stage("cover", [&] {
            return cover_all_c_cuts(piece.graph, piece.terminals, cfg.c, cert.d, field,
                                    derive_seed(cfg.seed, 0x70696365ULL, i), copts);
        });
        for (EdgeId id : cover.cover) cover_union.insert(id);
        PieceStats ps;
        ps.index = static_cast<int>(i);
        ps.terminals = piece.terminals.size();
        ps.d = cert.d;
        ps.cover_size = static_cast<int>(cover.cover.size());
        ps.rounds = cover.rounds;
        ps.contractions = cover.contractions;
        ps.rerandomizations = cover.rerandomizations;
        ps.exact_certificate = cert.method != Certificate::Method::fallback;
        out.stats.per_piece.push_back(ps);
        out.stats.sum_piece_terminals += ps.terminals;
    }

    std::vector<EdgeId> to_contract;
    for (const EdgeRec& e : g1.edges()) {
        if (cover_union.count(e.id)) continue;
        if (t1.contains(e.u) || t1.contains(e.v))
            throw InternalError("pendant edge missing from the cover union");
        to_contract.push_back(e.id);
    }
    ContractionResult contracted = contract_edges(g1, to_contract);
    MergeResult merged = merge_pendant_groups_mapped(contracted.graph, reduced.map);

    out.graph = std::move(merged.graph);
    out.terminals = t;
    for (VertexId v : g.vertices())
        out.vertex_map[v] = merged.vertex_map.at(contracted.vertex_map.at(v));
    for (const auto& [term, pendants] : reduced.map.groups)
        out.vertex_map[term] = term;  // terminal identity lives on its merged pendant group
    out.retained_edges.assign(cover_union.begin(), cover_union.end());
    out.stats.f_size = static_cast<int>(out.retained_edges.size());
    out.stats.h_vertices = out.graph.vertex_count();
    out.stats.h_edges = out.graph.edge_count();
    out.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start).count();
    return out;
}

MimickingNetwork build_network(const std::vector<VertexId>& vertices, const std::vector<WeightedEdge>& edges,
                               const std::vector<VertexId>& terminals, const BuildOptions& opts) {
    Multigraph g = from_weighted(vertices, edges, opts.config.c);
    TerminalSet t(terminals);
    for (VertexId v : t.order())
        if (!g.has_vertex(v)) throw InputError("terminal " + std::to_string(v) + " is not a vertex");
    return build_network(g, t, opts);
}

std::string format_stats(const BuildStats& s) {
    std::ostringstream out;
    out << "mode " << s.mode << "\n";
    out << "oracle " << s.oracle << "\n";
    out << "seed " << s.seed << "\n";
    out << "c " << s.c << "\n";
    out << "terminals " << s.original_terminals << "\n";
    out << "working_terminals " << s.working_terminals << "\n";
    out << "pieces " << s.pieces << "\n";
    out << "splits " << s.splits << "\n";
    out << "sum_piece_terminals " << s.sum_piece_terminals << "\n";
    out << "f_size " << s.f_size << "\n";
    out << "h_vertices " << s.h_vertices << "\n";
    out << "h_edges " << s.h_edges << "\n";
    for (const PieceStats& p : s.per_piece)
        out << "piece " << p.index << " terminals " << p.terminals << " d " << p.d << " cover " << p.cover_size
            << " rounds " << p.rounds << " contractions " << p.contractions << " rerandomizations "
            << p.rerandomizations << " certified " << (p.exact_certificate ? "exact" : "fallback") << "\n";
    out << "wall_ms " << s.wall_ms << "\n";
    return out.str();
}

}  // namespace mimic
