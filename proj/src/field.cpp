#include "mimic/field.hpp"

#include <algorithm>

namespace mimic {

namespace {

uint64_t mulmod_generic(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_generic(r, a, p);
        a = mulmod_generic(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit integers.
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_generic(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Fp::Fp(uint64_t p) : p_(p), mersenne_(p == kMersenne61) {
    if (p < 2 || p >= (1ULL << 62)) throw InputError("field prime out of range: " + std::to_string(p));
    if (!is_prime_u64(p)) throw InputError("field modulus is not prime: " + std::to_string(p));
}

uint64_t Fp::pow(uint64_t a, uint64_t e) const { return powmod(a % p_, e, p_); }

uint64_t Fp::inv(uint64_t a) const {
    a %= p_;
    if (a == 0) throw InternalError("division by zero in Fp");
    return powmod(a, p_ - 2, p_);
}

uint64_t Fp::reduce_signed(long long x) const {
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<uint64_t>(r);
}

FieldMatrix::FieldMatrix(int rows, int cols, const Fp& field)
    : rows_(rows), cols_(cols), field_(field), data_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw InternalError("negative matrix dimension");
}

std::vector<uint64_t> FieldMatrix::column(int c) const {
    std::vector<uint64_t> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix t(cols_, rows_, field_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

FieldMatrix FieldMatrix::identity(int n, const Fp& field) {
    FieldMatrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FieldMatrix FieldMatrix::random(int rows, int cols, const Fp& field, uint64_t seed) {
    FieldMatrix m(rows, cols, field);
    std::mt19937_64 rng(seed);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, field.sample(rng));
    return m;
}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.rows()) throw InternalError("matmul dimension mismatch");
    if (!(a.field() == b.field())) throw InternalError("matmul field mismatch");
    const Fp& f = a.field();
    FieldMatrix out(a.rows(), b.cols(), f);
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            const uint64_t* brow = b.row(k);
            uint64_t* orow = out.row(i);
            for (int j = 0; j < b.cols(); ++j) orow[j] = f.add(orow[j], f.mul(aik, brow[j]));
        }
    }
    return out;
}

std::vector<int> row_reduce(FieldMatrix& m) {
    const Fp& f = m.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < m.cols(); ++j) {
                uint64_t t = m.at(r, j);
                m.set(r, j, m.at(pr, j));
                m.set(pr, j, t);
            }
        }
        uint64_t piv_inv = f.inv(m.at(r, c));
        uint64_t* prow = m.row(r);
        for (int j = c; j < m.cols(); ++j) prow[j] = f.mul(prow[j], piv_inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            uint64_t factor = m.at(i, c);
            if (factor == 0) continue;
            uint64_t* irow = m.row(i);
            for (int j = c; j < m.cols(); ++j) irow[j] = f.sub(irow[j], f.mul(factor, prow[j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const FieldMatrix& m) {
    FieldMatrix copy = m;
    return static_cast<int>(row_reduce(copy).size());
}

std::vector<int> maximal_independent_columns(const FieldMatrix& m) {
    IncrementalColumnBasis basis(m.rows(), m.field());
    std::vector<int> selected;
    for (int c = 0; c < m.cols(); ++c) {
        if (basis.try_add(m.column(c))) selected.push_back(c);
    }
    return selected;
}

FieldMatrix dual_representation(const FieldMatrix& m) {
    const Fp& f = m.field();
    int r = m.rows(), n = m.cols();
    if (r > n) throw InternalError("dual_representation: more rows than columns");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (m.at(i, j) != (i == j ? 1u : 0u))
                throw InternalError("dual_representation: input is not in [I | P] form");
    FieldMatrix dual(n - r, n, f);
    for (int i = 0; i < n - r; ++i) {
        for (int j = 0; j < r; ++j) dual.set(i, j, f.neg(m.at(j, r + i)));  // -P^T
        dual.set(i, r + i, 1);
    }
    return dual;
}

FieldMatrix random_projection(const FieldMatrix& m, int r, uint64_t seed) {
    if (r > m.rows()) throw InputError("random_projection: target rank exceeds row count");
    FieldMatrix proj = FieldMatrix::random(r, m.rows(), m.field(), seed);
    return matmul(proj, m);
}

bool IncrementalColumnBasis::try_add(std::vector<uint64_t> v) {
    if (static_cast<int>(v.size()) != dim_) throw InternalError("basis vector dimension mismatch");
    for (size_t b = 0; b < basis_.size(); ++b) {
        uint64_t coeff = v[pivot_[b]];
        if (coeff == 0) continue;
        const std::vector<uint64_t>& bw = basis_[b];
        for (int i = pivot_[b]; i < dim_; ++i) v[i] = field_.sub(v[i], field_.mul(coeff, bw[i]));
    }
    int lead = -1;
    for (int i = 0; i < dim_; ++i) {
        if (v[i] != 0) {
            lead = i;
            break;
        }
    }
    if (lead < 0) return false;
    uint64_t inv = field_.inv(v[lead]);
    for (int i = lead; i < dim_; ++i) v[i] = field_.mul(v[i], inv);
    // Insert keeping pivots sorted so that reduction passes stay cheap.
    size_t pos = 0;
    while (pos < pivot_.size() && pivot_[pos] < lead) ++pos;
    basis_.insert(basis_.begin() + pos, std::move(v));
    pivot_.insert(pivot_.begin() + pos, lead);
    return true;
}

}  // namespace mimic
