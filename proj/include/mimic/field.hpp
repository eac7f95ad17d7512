#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mimic/errors.hpp"

namespace mimic {

// Arithmetic modulo a prime p < 2^62. The default prime is the Mersenne prime
// 2^61 - 1, which keeps Schwartz-Zippel failure probabilities of the
// randomized constructions below 1e-12 at the scales this library targets and
// admits a division-free reduction. Smaller primes are accepted (the CLI uses
// them to exercise the failure paths).
class Fp {
public:
    static constexpr uint64_t kMersenne61 = (1ULL << 61) - 1;

    explicit Fp(uint64_t p = kMersenne61);

    uint64_t p() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }

    uint64_t mul(uint64_t a, uint64_t b) const {
        if (mersenne_) {
            __uint128_t z = static_cast<__uint128_t>(a) * b;
            uint64_t lo = static_cast<uint64_t>(z) & kMersenne61;
            uint64_t hi = static_cast<uint64_t>(z >> 61);
            uint64_t s = lo + hi;
            s = (s & kMersenne61) + (s >> 61);
            return s >= kMersenne61 ? s - kMersenne61 : s;
        }
        return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p_);
    }

    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const;  // a != 0

    uint64_t reduce(uint64_t x) const { return x % p_; }
    uint64_t reduce_signed(long long x) const;

    // Sampling is via mt19937_64 so identical seeds give identical runs on
    // every platform.
    uint64_t sample(std::mt19937_64& rng) const { return rng() % p_; }
    uint64_t sample_nonzero(std::mt19937_64& rng) const { return 1 + rng() % (p_ - 1); }

    bool operator==(const Fp& o) const { return p_ == o.p_; }

private:
    uint64_t p_;
    bool mersenne_;
};

bool is_prime_u64(uint64_t n);

// Dense row-major matrix over Fp. Dimensions stay small (bounded by the
// rank products of the matroid constructions), so no sparsity is exploited.
class FieldMatrix {
public:
    FieldMatrix() : rows_(0), cols_(0) {}
    FieldMatrix(int rows, int cols, const Fp& field);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Fp& field() const { return field_; }

    uint64_t at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, uint64_t v) { data_[static_cast<size_t>(r) * cols_ + c] = v; }

    uint64_t* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
    const uint64_t* row(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }

    std::vector<uint64_t> column(int c) const;
    FieldMatrix transposed() const;

    static FieldMatrix identity(int n, const Fp& field);
    static FieldMatrix random(int rows, int cols, const Fp& field, uint64_t seed);

private:
    int rows_, cols_;
    Fp field_;
    std::vector<uint64_t> data_;
};

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);

// Row echelon form in place with the first-nonzero-in-row-major-order pivot
// rule (deterministic). Returns the pivot column indices in order.
std::vector<int> row_reduce(FieldMatrix& m);

int rank(const FieldMatrix& m);

// Greedy-by-index maximal set of linearly independent columns. Deterministic;
// its size equals rank(m).
std::vector<int> maximal_independent_columns(const FieldMatrix& m);

// Representation of the dual matroid: input must be [I_r | P]; the result is
// [-P^T | I_{n-r}] on the same column order.
FieldMatrix dual_representation(const FieldMatrix& m);

// Seeded uniform r x rows(m) matrix times m. Independence of column sets of
// size <= r is preserved with probability >= 1 - cols*rows/p.
FieldMatrix random_projection(const FieldMatrix& m, int r, uint64_t seed);

// Streaming variant of maximal_independent_columns: columns are offered one
// at a time and accepted when independent of the columns accepted so far.
class IncrementalColumnBasis {
public:
    explicit IncrementalColumnBasis(int dim, const Fp& field) : dim_(dim), field_(field) {}

    bool try_add(std::vector<uint64_t> v);
    int size() const { return static_cast<int>(basis_.size()); }

private:
    int dim_;
    Fp field_;
    std::vector<std::vector<uint64_t>> basis_;  // reduced, unit leading entry
    std::vector<int> pivot_;                    // leading index per basis vector
};

}  // namespace mimic
