#include "mimic/cutcover.hpp"

#include <algorithm>
#include <numeric>

#include "mimic/seeds.hpp"

namespace mimic {

Digraph SplitGraph::directed() const {
    Digraph d;
    d.vertex_count = vertex_count;
    d.arcs.reserve(2 * undirected_edges.size());
    for (auto [u, v] : undirected_edges) {
        d.add_arc(u, v);
        d.add_arc(v, u);
    }
    return d;
}

SplitGraph build_split_graph(const Multigraph& g, const TerminalSet& t, int c) {
    if (c < 1) throw InputError("connectivity bound c must be >= 1");
    auto deg = degrees(g);
    for (VertexId v : t.order()) {
        if (!g.has_vertex(v)) throw InputError("terminal not in graph");
        if (deg.at(v) != 1)
            throw InputError("terminal " + std::to_string(v) + " has degree " + std::to_string(deg.at(v)) +
                             ", the split construction needs degree 1");
    }

    SplitGraph s;
    s.c = c;
    int k = t.size();
    for (int i = 0; i < k; ++i) s.terminal_ids.push_back(i);
    s.split_base = k;
    int m = g.edge_count();
    s.clique_base = k + m;

    std::vector<VertexId> nonterminals;
    for (VertexId v : g.vertices())
        if (!t.contains(v)) nonterminals.push_back(v);
    s.vertex_count = k + m + 2 * c * static_cast<int>(nonterminals.size());
    int next_clique = s.clique_base;
    for (VertexId v : nonterminals) {
        s.clique_start_of[v] = next_clique;
        next_clique += 2 * c;
    }

    // clique edges
    for (size_t i = 0; i < nonterminals.size(); ++i) {
        int start = s.clique_start_of.at(nonterminals[i]);
        for (int a = 0; a < 2 * c; ++a)
            for (int b = a + 1; b < 2 * c; ++b) s.undirected_edges.push_back({start + a, start + b});
    }
    // split vertices and their attachments
    for (const EdgeRec& e : g.edges()) {
        int sv = s.split_base + static_cast<int>(s.edge_of_split.size());
        s.edge_of_split.push_back(e.id);
        s.split_vertex_of_edge[e.id] = sv;
        for (VertexId end : {e.u, e.v}) {
            int ti = t.index_of(end);
            if (ti >= 0) {
                s.undirected_edges.push_back({sv, ti});
            } else {
                int start = s.clique_start_of.at(end);
                for (int a = 0; a < 2 * c; ++a) s.undirected_edges.push_back({sv, start + a});
            }
        }
    }
    return s;
}

AugmentedGraphs augment_copies(const SplitGraph& s) {
    AugmentedGraphs out;
    Digraph base = s.directed();
    out.copies.base_vertex_count = s.vertex_count;
    int m = s.split_count();

    out.with_sink_copies = base;
    out.with_sink_copies.vertex_count = s.vertex_count + m;
    out.with_source_copies = base;
    out.with_source_copies.vertex_count = s.vertex_count + m;
    for (int i = 0; i < m; ++i) {
        out.copies.sink_copy_of_split.push_back(s.vertex_count + i);
        out.copies.source_copy_of_split.push_back(s.vertex_count + i);
    }
    for (auto [u, v] : base.arcs) {
        if (s.is_split_vertex(v))  // u is an in-neighbor of v
            out.with_sink_copies.add_arc(u, s.vertex_count + (v - s.split_base));
        if (s.is_split_vertex(u))  // v is an out-neighbor of u
            out.with_source_copies.add_arc(s.vertex_count + (u - s.split_base), v);
    }
    return out;
}

namespace {

std::vector<EdgeId> terminal_adjacent_edges(const Multigraph& g, const TerminalSet& t) {
    std::vector<EdgeId> out;
    for (const EdgeRec& e : g.edges())
        if (t.contains(e.u) || t.contains(e.v)) out.push_back(e.id);
    return out;
}

}  // namespace

CandidateResult essential_candidates(const Multigraph& g, const TerminalSet& t, int c, int d,
                                     const Fp& field, uint64_t seed) {
    if (d < c) throw InputError("cut-side bound d must be at least c");
    SplitGraph split = build_split_graph(g, t, c);
    AugmentedGraphs aug = augment_copies(split);
    Digraph source_reversed = aug.with_source_copies.reversed();

    std::vector<int> m1_ground(split.vertex_count);
    std::iota(m1_ground.begin(), m1_ground.end(), 0);
    LinearRep m1 = uniform_rep(m1_ground, c, field);

    // Terminal-adjacent triples first so they are always inside the greedy
    // maximal independent set whenever the gammoid columns behave correctly.
    std::vector<EdgeId> term_edges = terminal_adjacent_edges(g, t);
    std::vector<char> is_term_edge_split(split.split_count(), 0);
    for (EdgeId id : term_edges) is_term_edge_split[split.split_vertex_of_edge.at(id) - split.split_base] = 1;

    TripleFamily family;
    family.reserve(split.split_count());
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < split.split_count(); ++i) {
            if ((pass == 0) != static_cast<bool>(is_term_edge_split[i])) continue;
            family.push_back({split.split_base + i, -1, -1});  // copies filled per attempt below
        }
    }

    CandidateResult result;
    const int max_attempts = 4;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        uint64_t attempt_seed = derive_seed(seed, 0x65737363ULL, static_cast<uint64_t>(attempt));
        GammoidResult g2 = gammoid_rep(aug.with_sink_copies, split.terminal_ids, field,
                                       derive_seed(attempt_seed, 2));
        GammoidResult g3 = gammoid_rep(source_reversed, split.terminal_ids, field,
                                       derive_seed(attempt_seed, 3));
        result.rerandomizations += g2.rerandomizations + g3.rerandomizations;
        result.certification_queries += g2.certification_queries + g3.certification_queries;

        int trunc = std::min(c + d, g3.rep.mat.rows());
        LinearRep m3 = truncate_rep(g3.rep, trunc, derive_seed(attempt_seed, 4));

        TripleFamily attempt_family = family;
        for (Triple& x : attempt_family) {
            int split_index = x.base - split.split_base;
            x.sink_copy = aug.copies.sink_copy_of_split[split_index];
            x.source_copy = aug.copies.source_copy_of_split[split_index];
        }
        TripleFamily selected = representative_set(m1, g2.rep, m3, attempt_family);

        std::vector<EdgeId> candidates;
        candidates.reserve(selected.size());
        for (const Triple& x : selected) candidates.push_back(split.edge_of_split[x.base - split.split_base]);
        std::sort(candidates.begin(), candidates.end());

        bool terminals_kept = std::includes(candidates.begin(), candidates.end(),
                                            term_edges.begin(), term_edges.end());
        if (terminals_kept) {
            long long bound = static_cast<long long>(c) * t.size() * (c + d);
            if (static_cast<long long>(candidates.size()) > bound)
                throw InternalError("candidate set exceeds the rank-product bound");
            result.candidate_edges = std::move(candidates);
            return result;
        }
        ++result.rerandomizations;
    }
    throw RandomizedFailure("terminal-adjacent triples repeatedly fell outside the representative set", seed);
}

CoverResult cover_all_c_cuts(const Multigraph& g, const TerminalSet& t, int c, int d,
                             const Fp& field, uint64_t seed, const CoverOptions& opts) {
    CoverResult result;
    Multigraph work = g;
    if (t.size() == 0) {
        // No terminal cuts exist; everything may be contracted away.
        result.cover = {};
        return result;
    }
    for (;;) {
        CandidateResult cand = essential_candidates(work, t, c, d, field,
                                                    derive_seed(seed, 0x726f756eULL,
                                                                static_cast<uint64_t>(result.rounds)));
        result.rerandomizations += cand.rerandomizations;

        std::vector<char> is_candidate_or_terminal;
        std::vector<EdgeId> noncandidates;
        {
            std::vector<EdgeId> term_edges = terminal_adjacent_edges(work, t);
            for (const EdgeRec& e : work.edges()) {
                bool keep = std::binary_search(cand.candidate_edges.begin(), cand.candidate_edges.end(), e.id) ||
                            std::binary_search(term_edges.begin(), term_edges.end(), e.id);
                if (!keep) noncandidates.push_back(e.id);
            }
        }

        std::vector<EdgeId> to_contract;
        if (!noncandidates.empty())
            to_contract = opts.batch_contract ? noncandidates
                                              : std::vector<EdgeId>{noncandidates.front()};
        if (opts.on_round) {
            CoverRoundInfo info{result.rounds, work, cand.candidate_edges, to_contract};
            opts.on_round(info);
        }
        ++result.rounds;
        if (to_contract.empty()) {
            result.cover = work.edge_ids();
            long long bound = static_cast<long long>(c) * t.size() * (c + d);
            if (static_cast<long long>(result.cover.size()) > bound)
                throw InternalError("cover exceeds the rank-product bound");
            return result;
        }
        ContractionResult contracted = contract_edges(work, to_contract);
        work = std::move(contracted.graph);
        result.contractions += static_cast<int>(to_contract.size());
    }
}

}  // namespace mimic
