#include "mimic/matroids.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mimic/seeds.hpp"

namespace mimic {

LinearRep::LinearRep(FieldMatrix m, std::vector<int> g) : mat(std::move(m)), ground(std::move(g)) {
    if (mat.cols() != static_cast<int>(ground.size()))
        throw InternalError("LinearRep: column count != ground size");
    for (int i = 0; i < static_cast<int>(ground.size()); ++i)
        if (!col_of_.emplace(ground[i], i).second)
            throw InternalError("LinearRep: duplicate ground id " + std::to_string(ground[i]));
}

int LinearRep::column_of(int ground_id) const {
    auto it = col_of_.find(ground_id);
    if (it == col_of_.end()) throw InternalError("ground id " + std::to_string(ground_id) + " not in matroid");
    return it->second;
}

bool columns_independent(const LinearRep& rep, const std::vector<int>& ground_ids) {
    if (ground_ids.empty()) return true;
    if (static_cast<int>(ground_ids.size()) > rep.mat.rows()) return false;
    FieldMatrix sub(rep.mat.rows(), static_cast<int>(ground_ids.size()), rep.mat.field());
    for (int j = 0; j < static_cast<int>(ground_ids.size()); ++j) {
        int c = rep.column_of(ground_ids[j]);
        for (int r = 0; r < rep.mat.rows(); ++r) sub.set(r, j, rep.mat.at(r, c));
    }
    return rank(sub) == static_cast<int>(ground_ids.size());
}

LinearRep uniform_rep(const std::vector<int>& ground, int c, const Fp& field) {
    if (c < 1) throw InputError("uniform matroid rank must be >= 1");
    if (static_cast<uint64_t>(ground.size()) >= field.p())
        throw InputError("field too small for uniform matroid on " + std::to_string(ground.size()) + " elements");
    FieldMatrix m(c, static_cast<int>(ground.size()), field);
    for (int j = 0; j < static_cast<int>(ground.size()); ++j) {
        uint64_t point = static_cast<uint64_t>(j) + 1;  // distinct nonzero points
        uint64_t pw = 1;
        for (int i = 0; i < c; ++i) {
            m.set(i, j, pw);
            pw = field.mul(pw, point);
        }
    }
    return LinearRep(std::move(m), ground);
}

namespace {

// Ingleton-Piff: the gammoid of (d, sources) is the dual of the transversal
// matroid of the bipartite graph with left side V \ sources and right side V,
// where u_left ~ v_right iff v is an in-neighbor of u or v == u.
// A random Edmonds matrix represents the transversal matroid w.h.p.; dualize
// to get the gammoid on <= |sources| rows.
bool build_gammoid_once(const Digraph& d, const std::vector<char>& is_source, const Fp& field,
                        uint64_t seed, LinearRep& out) {
    int n = d.vertex_count;
    std::vector<int> left;
    for (int v = 0; v < n; ++v)
        if (!is_source[v]) left.push_back(v);
    int l = static_cast<int>(left.size());
    std::vector<int> left_index(n, -1);
    for (int i = 0; i < l; ++i) left_index[left[i]] = i;

    std::mt19937_64 rng(seed);
    FieldMatrix a(l, n, field);
    for (int i = 0; i < l; ++i) a.set(i, left[i], field.sample_nonzero(rng));
    for (auto [u, v] : d.arcs) {
        int i = left_index[v];  // arcs u -> v make u an in-neighbor of v
        if (i < 0) continue;
        a.set(i, u, field.sample_nonzero(rng));
    }

    FieldMatrix reduced = a;
    std::vector<int> pivots = row_reduce(reduced);
    if (static_cast<int>(pivots.size()) != l) return false;  // Edmonds matrix degenerated

    // Permute columns to [I | P], dualize, and undo the permutation.
    std::vector<char> is_pivot(n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<int> order = pivots;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) order.push_back(c);
    FieldMatrix permuted(l, n, field);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < l; ++r) permuted.set(r, j, reduced.at(r, order[j]));
    FieldMatrix dual_perm = dual_representation(permuted);
    FieldMatrix dual(n - l, n, field);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n - l; ++r) dual.set(r, order[j], dual_perm.at(r, j));

    std::vector<int> ground(n);
    std::iota(ground.begin(), ground.end(), 0);
    out = LinearRep(std::move(dual), std::move(ground));
    return true;
}

}  // namespace

GammoidResult gammoid_rep(const Digraph& d, const std::vector<int>& sources, const Fp& field,
                          uint64_t seed, int cert_queries, int max_rerandomizations) {
    int n = d.vertex_count;
    std::vector<char> is_source(n, 0);
    for (int s : sources) {
        if (s < 0 || s >= n) throw InputError("gammoid source outside vertex range");
        is_source[s] = 1;
    }

    GammoidResult result;
    for (int attempt = 0; attempt <= max_rerandomizations; ++attempt) {
        uint64_t attempt_seed = derive_seed(seed, 0x67616d6dULL, static_cast<uint64_t>(attempt));
        LinearRep rep;
        if (!build_gammoid_once(d, is_source, field, attempt_seed, rep)) {
            result.rerandomizations = attempt + 1;
            continue;
        }

        bool ok = true;
        int max_size = std::min(n, rep.mat.rows() + 1);
        auto agree = [&](const std::vector<int>& x) {
            ++result.certification_queries;
            bool rep_independent = columns_independent(rep, x);
            bool oracle_independent = max_vertex_disjoint_paths(d, sources, x) == static_cast<int>(x.size());
            return rep_independent == oracle_independent;
        };
        // Sets larger than rank+1 are dependent on both sides, so the whole
        // relevant query space is the subsets of size <= max_size. When that
        // space fits in the budget, certify it exhaustively; a returned
        // representation then agrees with the oracle on every relevant set.
        long long space = 0;
        for (int s = 0; s <= max_size && space <= cert_queries; ++s) {
            long long binom = 1;
            for (int i = 0; i < s; ++i) binom = std::min<long long>(binom * (n - i) / (i + 1), cert_queries + 1);
            space += binom;
        }
        if (space <= cert_queries) {
            std::vector<int> x;
            std::function<bool(int, int)> enumerate = [&](int start, int remaining) {
                if (remaining == 0) return agree(x);
                for (int v = start; v <= n - remaining; ++v) {
                    x.push_back(v);
                    bool good = enumerate(v + 1, remaining - 1);
                    x.pop_back();
                    if (!good) return false;
                }
                return true;
            };
            for (int s = 0; s <= max_size && ok; ++s) ok = enumerate(0, s);
        } else {
            std::mt19937_64 rng(derive_seed(attempt_seed, 0x63657274ULL));
            for (int q = 0; q < cert_queries && ok; ++q) {
                int size = static_cast<int>(rng() % static_cast<uint64_t>(max_size + 1));
                std::vector<int> pool(n);
                std::iota(pool.begin(), pool.end(), 0);
                for (int i = 0; i < size; ++i) {
                    int j = i + static_cast<int>(rng() % static_cast<uint64_t>(n - i));
                    std::swap(pool[i], pool[j]);
                }
                std::vector<int> x(pool.begin(), pool.begin() + size);
                ok = agree(x);
            }
        }
        if (ok) {
            result.rep = std::move(rep);
            result.seed_used = attempt_seed;
            return result;
        }
        result.rerandomizations = attempt + 1;
    }
    throw RandomizedFailure("gammoid representation failed certification after " +
                                std::to_string(max_rerandomizations + 1) + " attempts",
                            seed);
}

LinearRep truncate_rep(const LinearRep& rep, int r, uint64_t seed) {
    if (r > rep.mat.rows()) throw InputError("truncation rank exceeds representation rows");
    if (r == rep.mat.rows()) return rep;
    return LinearRep(random_projection(rep.mat, r, seed), rep.ground);
}

LinearRep direct_sum(const LinearRep& r1, const LinearRep& r2, const LinearRep& r3) {
    const Fp& f = r1.mat.field();
    if (!(f == r2.mat.field()) || !(f == r3.mat.field())) throw InternalError("direct_sum field mismatch");
    std::vector<int> ground;
    ground.reserve(r1.ground.size() + r2.ground.size() + r3.ground.size());
    for (const LinearRep* r : {&r1, &r2, &r3})
        ground.insert(ground.end(), r->ground.begin(), r->ground.end());
    {
        std::vector<int> check = ground;
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end())
            throw InternalError("direct_sum ground sets collide");
    }
    int rows = r1.mat.rows() + r2.mat.rows() + r3.mat.rows();
    int cols = static_cast<int>(ground.size());
    FieldMatrix m(rows, cols, f);
    int row_off = 0, col_off = 0;
    for (const LinearRep* r : {&r1, &r2, &r3}) {
        for (int i = 0; i < r->mat.rows(); ++i)
            for (int j = 0; j < r->mat.cols(); ++j) m.set(row_off + i, col_off + j, r->mat.at(i, j));
        row_off += r->mat.rows();
        col_off += r->mat.cols();
    }
    return LinearRep(std::move(m), std::move(ground));
}

TripleFamily representative_set(const LinearRep& r1, const LinearRep& r2, const LinearRep& r3,
                                const TripleFamily& family) {
    const Fp& f = r1.mat.field();
    int d1 = r1.mat.rows(), d2 = r2.mat.rows(), d3 = r3.mat.rows();
    long long dim = static_cast<long long>(d1) * d2 * d3;
    IncrementalColumnBasis basis(static_cast<int>(dim), f);
    TripleFamily selected;
    std::vector<uint64_t> w(static_cast<size_t>(std::max<long long>(dim, 0)));
    for (const Triple& x : family) {
        int c1 = r1.column_of(x.base), c2 = r2.column_of(x.sink_copy), c3 = r3.column_of(x.source_copy);
        size_t idx = 0;
        for (int i1 = 0; i1 < d1; ++i1) {
            uint64_t a = r1.mat.at(i1, c1);
            for (int i2 = 0; i2 < d2; ++i2) {
                uint64_t ab = f.mul(a, r2.mat.at(i2, c2));
                for (int i3 = 0; i3 < d3; ++i3) w[idx++] = f.mul(ab, r3.mat.at(i3, c3));
            }
        }
        if (basis.try_add(w)) selected.push_back(x);
    }
    return selected;
}

}  // namespace mimic
