#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mtheta/scalars.hpp"

namespace mtheta::groups {

// Scalar-domain helpers. Fp carries its modulus in every element, so "zero of
// the same domain" needs a sample element; Rat ignores the sample.
inline scalars::Rat zero_like(const scalars::Rat&) { return scalars::Rat(0); }
inline scalars::Rat one_like(const scalars::Rat&) { return scalars::Rat(1); }
inline scalars::Fp zero_like(const scalars::Fp& s) { return scalars::Fp(0, s.modulus()); }
inline scalars::Fp one_like(const scalars::Fp& s) { return scalars::Fp(1, s.modulus()); }

inline bool is_zero(const scalars::Rat& x) { return x == 0; }
inline bool is_zero(const scalars::Fp& x) { return x.is_zero(); }

// Dense rectangular matrix over one exact scalar domain K (Rat or Fp).
// A copy of one scalar is kept as the domain sample so that empty blocks
// (e.g. a x 0 slices) still know their domain.
template <class K>
class Matrix {
public:
    Matrix(long rows, long cols, const K& fill)
        : rows_(rows), cols_(cols), sample_(fill),
          e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
    }

    static Matrix identity(long n, const K& one) {
        Matrix m(n, n, zero_like(one));
        for (long i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    static Matrix zero(long rows, long cols, const K& domain_sample) {
        return Matrix(rows, cols, zero_like(domain_sample));
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    K& at(long i, long j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
    const K& at(long i, long j) const { return e_[static_cast<size_t>(i * cols_ + j)]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix out = *this;
        for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = out.e_[i] + o.e_[i];
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix out = *this;
        for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = out.e_[i] - o.e_[i];
        return out;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (auto& v : out.e_) v = -v;
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out = zero(rows_, o.cols_, sample_);
        for (long i = 0; i < rows_; ++i)
            for (long t = 0; t < cols_; ++t) {
                const K& a = at(i, t);
                if (is_zero(a)) continue;
                for (long j = 0; j < o.cols_; ++j)
                    out.at(i, j) = out.at(i, j) + a * o.at(t, j);
            }
        return out;
    }

    Matrix scaled(const K& c) const {
        Matrix out = *this;
        for (auto& v : out.e_) v = c * v;
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_, sample_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    Matrix block(long r0, long c0, long h, long w) const {
        if (r0 < 0 || c0 < 0 || h < 0 || w < 0 || r0 + h > rows_ || c0 + w > cols_)
            throw std::invalid_argument("block out of range");
        Matrix out(h, w, sample_);
        for (long i = 0; i < h; ++i)
            for (long j = 0; j < w; ++j) out.at(i, j) = at(r0 + i, c0 + j);
        return out;
    }

    void set_block(long r0, long c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
            throw std::invalid_argument("block out of range");
        for (long i = 0; i < b.rows_; ++i)
            for (long j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
    }

    K trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        K t = zero_like(sample_);
        for (long i = 0; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero_matrix() const {
        for (const auto& v : e_)
            if (!is_zero(v)) return false;
        return true;
    }

    // Gauss-Jordan inverse; throws if singular.
    Matrix inverse() const {
        if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
        long n = rows_;
        Matrix a = *this;
        Matrix inv = identity(n, one_like(sample_));
        for (long col = 0; col < n; ++col) {
            long piv = -1;
            for (long r = col; r < n; ++r)
                if (!is_zero(a.at(r, col))) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::domain_error("singular matrix");
            if (piv != col) {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            K dinv = one_like(sample_) / a.at(col, col);
            a.scale_row(col, dinv);
            inv.scale_row(col, dinv);
            for (long r = 0; r < n; ++r) {
                if (r == col || is_zero(a.at(r, col))) continue;
                K f = a.at(r, col);
                a.add_scaled_row(r, col, -f);
                inv.add_scaled_row(r, col, -f);
            }
        }
        return inv;
    }

    K determinant() const {
        if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
        Matrix a = *this;
        long n = rows_;
        K det = one_like(sample_);
        for (long col = 0; col < n; ++col) {
            long piv = -1;
            for (long r = col; r < n; ++r)
                if (!is_zero(a.at(r, col))) {
                    piv = r;
                    break;
                }
            if (piv < 0) return zero_like(sample_);
            if (piv != col) {
                a.swap_rows(piv, col);
                det = -det;
            }
            det = det * a.at(col, col);
            K dinv = one_like(sample_) / a.at(col, col);
            a.scale_row(col, dinv);
            for (long r = col + 1; r < n; ++r) {
                if (is_zero(a.at(r, col))) continue;
                a.add_scaled_row(r, col, -a.at(r, col));
            }
        }
        return det;
    }

    // Rank by exact row reduction.
    long rank() const {
        Matrix a = *this;
        long rank = 0;
        for (long col = 0; col < cols_ && rank < rows_; ++col) {
            long piv = -1;
            for (long r = rank; r < rows_; ++r)
                if (!is_zero(a.at(r, col))) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            a.swap_rows(piv, rank);
            K dinv = one_like(sample_) / a.at(rank, col);
            a.scale_row(rank, dinv);
            for (long r = 0; r < rows_; ++r) {
                if (r == rank || is_zero(a.at(r, col))) continue;
                a.add_scaled_row(r, rank, -a.at(r, col));
            }
            ++rank;
        }
        return rank;
    }

    const K& sample() const { return sample_; }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    void swap_rows(long a, long b) {
        for (long j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void scale_row(long r, const K& c) {
        for (long j = 0; j < cols_; ++j) at(r, j) = c * at(r, j);
    }
    void add_scaled_row(long dst, long src, const K& c) {
        for (long j = 0; j < cols_; ++j) at(dst, j) = at(dst, j) + c * at(src, j);
    }

    long rows_, cols_;
    K sample_;
    std::vector<K> e_;
};

// Entrywise domain change for matrices with small integer entries
// (Weyl elements, forms).
template <class K>
Matrix<K> from_integer_matrix(const Matrix<scalars::Rat>& m, const K& one) {
    Matrix<K> out = Matrix<K>::zero(m.rows(), m.cols(), one);
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            const scalars::Rat& v = m.at(i, j);
            if (v.get_den() != 1) throw std::invalid_argument("non-integer entry");
            long n = v.get_num().get_si();
            K acc = zero_like(one);
            K step = n >= 0 ? one : -one;
            for (long t = 0; t < (n >= 0 ? n : -n); ++t) acc = acc + step;
            out.at(i, j) = acc;
        }
    return out;
}

}  // namespace mtheta::groups
