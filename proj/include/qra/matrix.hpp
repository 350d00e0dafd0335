#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qra/errors.hpp"

namespace qra {

template <class S>
using Vec = std::vector<S>;

// Dense row-major matrix over a commutative ring S.  S needs a default
// constructor giving zero, +=, *, unary -, == and is_zero().  The routines
// further down additionally need S::inverse() and are meant for field scalars.
template <class S>
class Mat {
public:
    Mat() = default;
    Mat(long rows, long cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows * cols)) {}

    static Mat zero(long rows, long cols) { return Mat(rows, cols); }

    static Mat identity(long n, const S& one) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    static Mat diag(const Vec<S>& d) {
        Mat m(static_cast<long>(d.size()), static_cast<long>(d.size()));
        for (long i = 0; i < m.r_; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    long rows() const { return r_; }
    long cols() const { return c_; }

    S& at(long i, long j) { return a_[static_cast<size_t>(i * c_ + j)]; }
    const S& at(long i, long j) const { return a_[static_cast<size_t>(i * c_ + j)]; }

    bool is_zero() const {
        for (const S& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (long i = 0; i < r_; ++i)
            for (long j = 0; j < c_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }

    Mat& operator+=(const Mat& o) {
        check_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    Mat& operator-=(const Mat& o) {
        check_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += -o.a_[i];
        return *this;
    }

    Mat operator-() const {
        Mat m(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
        return m;
    }

    Mat& scale(const S& c) {
        for (S& x : a_) x = x * c;
        return *this;
    }

    Mat transpose() const {
        Mat m(c_, r_);
        for (long i = 0; i < r_; ++i)
            for (long j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    bool operator==(const Mat&) const = default;

private:
    long r_ = 0, c_ = 0;
    std::vector<S> a_;

    void check_shape(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw QraError("matrix shape mismatch");
    }
};

template <class S>
Mat<S> operator+(Mat<S> a, const Mat<S>& b) { return a += b; }

template <class S>
Mat<S> operator-(Mat<S> a, const Mat<S>& b) { return a -= b; }

template <class S>
Mat<S> operator*(const Mat<S>& a, const Mat<S>& b) {
    if (a.cols() != b.rows()) throw QraError("matrix product shape mismatch");
    Mat<S> m(a.rows(), b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long k = 0; k < a.cols(); ++k) {
            const S& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (long j = 0; j < b.cols(); ++j) m.at(i, j) += x * b.at(k, j);
        }
    return m;
}

template <class S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) {
    return a * b - b * a;
}

template <class S>
Mat<S> mat_pow(const Mat<S>& a, long e, const S& one) {
    if (a.rows() != a.cols()) throw QraError("power of a non-square matrix");
    if (e < 0) throw QraError("negative matrix power");
    Mat<S> m = Mat<S>::identity(a.rows(), one);
    for (long i = 0; i < e; ++i) m = m * a;
    return m;
}

// Kronecker product with the flattening (i, j) -> i * b.rows() + j.
template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> m(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            const S& x = a.at(i, j);
            if (x.is_zero()) continue;
            for (long k = 0; k < b.rows(); ++k)
                for (long l = 0; l < b.cols(); ++l) {
                    const S& y = b.at(k, l);
                    if (y.is_zero()) continue;
                    m.at(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return m;
}

// coordinate vectors flattened like kron(): index i*b.size() + j
template <class S>
Vec<S> kron_vec(const Vec<S>& a, const Vec<S>& b) {
    Vec<S> r(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

template <class S>
Vec<S> mat_vec(const Mat<S>& a, const Vec<S>& v) {
    if (a.cols() != static_cast<long>(v.size())) throw QraError("matrix-vector shape mismatch");
    Vec<S> r(static_cast<size_t>(a.rows()));
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            const S& x = a.at(i, j);
            if (!x.is_zero()) r[static_cast<size_t>(i)] += x * v[static_cast<size_t>(j)];
        }
    return r;
}

template <class S>
bool vec_is_zero(const Vec<S>& v) {
    for (const S& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class S>
Vec<S> unit_vec(long dim, long i, const S& one) {
    Vec<S> v(static_cast<size_t>(dim));
    v[static_cast<size_t>(i)] = one;
    return v;
}

// Incrementally maintained reduced row echelon basis of a subspace of S^dim.
// Pivot of each stored vector is its first nonzero coordinate, normalized to 1
// and eliminated from all other stored vectors.
template <class S>
class SpanBasis {
public:
    explicit SpanBasis(long dim) : dim_(dim) {}

    long dim() const { return static_cast<long>(rows_.size()); }
    long ambient_dim() const { return dim_; }

    // reduces v against the basis in place; result has zeros at all pivots
    void reduce(Vec<S>& v) const {
        for (const auto& [p, row] : rows_) {
            const S c = v[static_cast<size_t>(p)];
            if (c.is_zero()) continue;
            for (long j = p; j < dim_; ++j)
                v[static_cast<size_t>(j)] += -(c * row[static_cast<size_t>(j)]);
        }
    }

    bool contains(Vec<S> v) const {
        reduce(v);
        return vec_is_zero(v);
    }

    // returns true when v enlarged the span
    bool add(Vec<S> v) {
        reduce(v);
        long p = -1;
        for (long j = 0; j < dim_; ++j)
            if (!v[static_cast<size_t>(j)].is_zero()) {
                p = j;
                break;
            }
        if (p < 0) return false;
        const S inv = v[static_cast<size_t>(p)].inverse();
        for (long j = p; j < dim_; ++j) v[static_cast<size_t>(j)] = v[static_cast<size_t>(j)] * inv;
        for (auto& [q, row] : rows_) {
            const S c = row[static_cast<size_t>(p)];
            if (c.is_zero()) continue;
            for (long j = p; j < dim_; ++j)
                row[static_cast<size_t>(j)] += -(c * v[static_cast<size_t>(j)]);
        }
        rows_.emplace(p, std::move(v));
        return true;
    }

    const std::map<long, Vec<S>>& rows() const { return rows_; }

    std::vector<long> free_coords() const {
        std::vector<long> f;
        for (long j = 0; j < dim_; ++j)
            if (!rows_.count(j)) f.push_back(j);
        return f;
    }

private:
    long dim_;
    std::map<long, Vec<S>> rows_;
};

// Smallest subspace containing the seeds and invariant under every generator.
template <class S>
SpanBasis<S> invariant_span(const std::vector<Mat<S>>& gens, const std::vector<Vec<S>>& seeds,
                            long dim) {
    SpanBasis<S> span(dim);
    std::vector<Vec<S>> frontier;
    for (const Vec<S>& s : seeds) {
        Vec<S> v = s;
        if (span.add(v)) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<Vec<S>> next;
        for (const Vec<S>& v : frontier)
            for (const Mat<S>& g : gens) {
                Vec<S> w = mat_vec(g, v);
                if (span.add(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return span;
}

// Closure of a single seed with, for every basis vector reached, the raw
// vector and how it was produced: (generator index, parent position), with
// (-1, -1) for the seed itself.  Raw vectors are linearly independent and
// span the closure, so they transport to any module with matching generators.
template <class S>
struct ClosureBasis {
    std::vector<Vec<S>> raw;
    std::vector<std::pair<long, long>> steps;
    SpanBasis<S> span;
};

template <class S>
ClosureBasis<S> closure_basis(const std::vector<Mat<S>>& gens, const Vec<S>& seed, long dim) {
    ClosureBasis<S> cb{{}, {}, SpanBasis<S>(dim)};
    if (!cb.span.add(seed)) return cb;
    cb.raw.push_back(seed);
    cb.steps.emplace_back(-1, -1);
    for (size_t k = 0; k < cb.raw.size(); ++k)
        for (size_t g = 0; g < gens.size(); ++g) {
            Vec<S> w = mat_vec(gens[g], cb.raw[k]);
            if (cb.span.add(w)) {
                cb.raw.push_back(std::move(w));
                cb.steps.emplace_back(static_cast<long>(g), static_cast<long>(k));
            }
        }
    return cb;
}

// ---- field-scalar linear algebra ----

template <class S>
long rref_in_place(Mat<S>& m, std::vector<long>* pivot_cols = nullptr) {
    long rank = 0;
    for (long j = 0; j < m.cols() && rank < m.rows(); ++j) {
        long piv = -1;
        for (long i = rank; i < m.rows(); ++i)
            if (!m.at(i, j).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (long l = 0; l < m.cols(); ++l) std::swap(m.at(piv, l), m.at(rank, l));
        const S inv = m.at(rank, j).inverse();
        for (long l = j; l < m.cols(); ++l) m.at(rank, l) = m.at(rank, l) * inv;
        for (long i = 0; i < m.rows(); ++i) {
            if (i == rank) continue;
            const S c = m.at(i, j);
            if (c.is_zero()) continue;
            for (long l = j; l < m.cols(); ++l) m.at(i, l) += -(c * m.at(rank, l));
        }
        if (pivot_cols) pivot_cols->push_back(j);
        ++rank;
    }
    return rank;
}

template <class S>
long rank(Mat<S> m) {
    return rref_in_place(m);
}

template <class S>
std::vector<Vec<S>> kernel_basis(Mat<S> m, const S& one) {
    std::vector<long> pivots;
    rref_in_place(m, &pivots);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Vec<S>> basis;
    for (long f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        Vec<S> v(static_cast<size_t>(m.cols()));
        v[static_cast<size_t>(f)] = one;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<long>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class S>
std::optional<Mat<S>> inverse_matrix(const Mat<S>& a, const S& one) {
    if (a.rows() != a.cols()) throw QraError("inverse of a non-square matrix");
    const long n = a.rows();
    Mat<S> aug(n, 2 * n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = one;
    }
    std::vector<long> pivots;
    rref_in_place(aug, &pivots);
    if (static_cast<long>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    Mat<S> inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Columns are the given vectors.
template <class S>
Mat<S> mat_from_columns(const std::vector<Vec<S>>& cols, long dim) {
    Mat<S> m(dim, static_cast<long>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (long i = 0; i < dim; ++i) m.at(i, static_cast<long>(j)) = cols[j][static_cast<size_t>(i)];
    return m;
}

}  // namespace qra
