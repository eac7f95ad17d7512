#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mimic/field.hpp"
#include "mimic/flow.hpp"

namespace mimic {

// Linear matroid representation: one column per ground element. A ground set
// X is independent exactly when its columns are linearly independent.
struct LinearRep {
    FieldMatrix mat;
    std::vector<int> ground;  // column index -> ground element id

    LinearRep() = default;
    LinearRep(FieldMatrix m, std::vector<int> g);

    int column_of(int ground_id) const;
    bool has_ground(int ground_id) const { return col_of_.count(ground_id) > 0; }
    int ground_size() const { return static_cast<int>(ground.size()); }

private:
    std::unordered_map<int, int> col_of_;
};

bool columns_independent(const LinearRep& rep, const std::vector<int>& ground_ids);

// Rank-c uniform matroid: c x |ground| Vandermonde matrix on distinct points,
// so every <= c columns are independent and every c+1 are dependent.
LinearRep uniform_rep(const std::vector<int>& ground, int c, const Fp& field);

struct GammoidResult {
    LinearRep rep;
    uint64_t seed_used = 0;
    int rerandomizations = 0;
    int certification_queries = 0;
};

// Gammoid of (d, sources): ground = V(d); X independent iff there are |X|
// vertex-disjoint paths from the sources to X. Built as the dual of a
// randomized transversal-matroid representation, then certified against the
// flow oracle on `cert_queries` sampled sets. Any disagreement triggers a
// re-randomization; after `max_rerandomizations` extra attempts the
// construction fails with the seed reported.
GammoidResult gammoid_rep(const Digraph& d, const std::vector<int>& sources, const Fp& field,
                          uint64_t seed, int cert_queries = 200, int max_rerandomizations = 3);

// Rank-r truncation by seeded random projection; independence of sets of
// size <= r is preserved w.h.p. r == rows leaves the representation unchanged.
LinearRep truncate_rep(const LinearRep& rep, int r, uint64_t seed);

// Block-diagonal sum. Ground ids must be pairwise disjoint.
LinearRep direct_sum(const LinearRep& r1, const LinearRep& r2, const LinearRep& r3);

// One candidate per split vertex: (v, v', v'') with components in the grounds
// of M1, M2, M3 respectively.
struct Triple {
    int base, sink_copy, source_copy;
    bool operator==(const Triple& o) const {
        return base == o.base && sink_copy == o.sink_copy && source_copy == o.source_copy;
    }
};
using TripleFamily = std::vector<Triple>;

// Representative set of the family: each triple is mapped to the tensor
// product of its three representation columns and the greedy maximal
// independent subset of those vectors is returned. Output size is at most
// rank(M1) * rank(M2) * rank(M3). Tensor vectors are materialized one at a
// time, in family order.
TripleFamily representative_set(const LinearRep& r1, const LinearRep& r2, const LinearRep& r3,
                                const TripleFamily& family);

}  // namespace mimic
