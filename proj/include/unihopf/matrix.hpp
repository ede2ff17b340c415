#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "unihopf/rational.hpp"

namespace unihopf {

using Vec = std::vector<Rational>;

// Dense row-major matrix of exact rationals. Dimensions here are desk scale,
// so no sparsity machinery; the few genuinely large kernel computations go
// through the sparse column routines at the bottom of this header.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw DimensionError("Matrix::from_rows: ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const {
        Vec v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("Matrix: shape mismatch in +");
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("Matrix: shape mismatch in -");
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }

    friend Matrix operator*(const Rational& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = c * a.e_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("Matrix: shape mismatch in *");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << "[";
        for (int i = 0; i < m.rows_; ++i) {
            os << (i ? "; " : "");
            for (int j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m.at(i, j);
        }
        return os << "]";
    }

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

inline Vec mat_vec(const Matrix& m, const Vec& v) {
    if (m.cols() != static_cast<int>(v.size()))
        throw DimensionError("mat_vec: shape mismatch");
    Vec r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
    return r;
}

inline Vec vec_mat(const Vec& v, const Matrix& m) {
    if (m.rows() != static_cast<int>(v.size()))
        throw DimensionError("vec_mat: shape mismatch");
    Vec r(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec vec_scale(const Rational& c, const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vec_add: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vec_sub: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// Kronecker product; index (i,j) of the result flattens as i*b.rows()+j
// rows-wise (and likewise for columns), matching the word-concatenation
// indexing used throughout.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    if (!b.at(p, q).is_zero())
                        r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return r;
}

inline Vec kron_vec(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

inline Matrix stack_rows(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw DimensionError("stack_rows: column mismatch");
    const int cols = a.rows() != 0 ? a.cols() : b.cols();
    Matrix r(a.rows() + b.rows(), cols);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < cols; ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

// Reduced row echelon form. The result is the unique RREF of the row space,
// independent of elimination order, which is what makes subspace equality a
// syntactic comparison downstream.
inline Matrix rref(const Matrix& m) {
    Matrix a = m;
    const int rows = a.rows(), cols = a.cols();
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int piv = -1;
        for (int i = lead; i < rows; ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(lead, j));
        const Rational inv = Rational(1) / a.at(lead, col);
        for (int j = col; j < cols; ++j)
            if (!a.at(lead, j).is_zero()) a.at(lead, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == lead) continue;
            const Rational f = a.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < cols; ++j)
                if (!a.at(lead, j).is_zero()) a.at(i, j) -= f * a.at(lead, j);
        }
        ++lead;
    }
    return a;
}

inline std::vector<int> pivot_columns(const Matrix& r) {
    std::vector<int> piv;
    for (int i = 0; i < r.rows(); ++i) {
        int j = 0;
        while (j < r.cols() && r.at(i, j).is_zero()) ++j;
        if (j < r.cols()) piv.push_back(j);
    }
    return piv;
}

inline int rank(const Matrix& m) { return static_cast<int>(pivot_columns(rref(m)).size()); }

// Unique solution x of a*x = b, if any; nullopt when inconsistent. Throws
// when the solution exists but is not unique (callers here always expect
// full column rank).
inline std::optional<Vec> solve_unique(const Matrix& a, const Vec& b) {
    if (a.rows() != static_cast<int>(b.size()))
        throw DimensionError("solve_unique: shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const Matrix r = rref(aug);
    const auto piv = pivot_columns(r);
    for (int p : piv)
        if (p == a.cols()) return std::nullopt; // inconsistent
    if (static_cast<int>(piv.size()) != a.cols())
        throw Error("solve_unique: solution not unique");
    Vec x(a.cols());
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(static_cast<int>(i), a.cols());
    return x;
}

// ----- sparse kernels ------------------------------------------------------
//
// Kernel of a column-sparse linear map with a huge row space (cobar
// differentials, intertwiner systems). Columns are inserted one at a time
// into an echelon set keyed by leading row index; a column that reduces to
// zero yields, through its augmentation, a kernel vector over the original
// column indices.

using SparseVec = std::vector<std::pair<int, Rational>>; // sorted by index, nonzero values

inline void sparse_axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
    SparseVec out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            Rational v = c * src[j].second;
            if (!v.is_zero()) out.emplace_back(src[j].first, std::move(v));
            ++j;
        } else {
            Rational v = dst[i].second + c * src[j].second;
            if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

class SparseKernelAccumulator {
public:
    explicit SparseKernelAccumulator(int ncols) : ncols_(ncols) {}

    // Feed the image vector of unit vector #idx (idx must increase across calls).
    void add_column(int idx, SparseVec col) {
        SparseVec aug{{idx, Rational(1)}};
        while (!col.empty()) {
            auto it = echelon_.find(col.front().first);
            if (it == echelon_.end()) break;
            const Rational c = -col.front().second; // pivot of stored column is 1
            sparse_axpy(col, c, it->second.first);
            sparse_axpy(aug, c, it->second.second);
        }
        if (col.empty()) {
            kernel_rows_.push_back(std::move(aug));
        } else {
            const Rational inv = Rational(1) / col.front().second;
            for (auto& [r, v] : col) v *= inv;
            for (auto& [r, v] : aug) v *= inv;
            const int lead = col.front().first;
            echelon_.emplace(lead, std::make_pair(std::move(col), std::move(aug)));
        }
    }

    // Kernel basis as dense rows over the ncols coordinates.
    std::vector<Vec> kernel() const {
        std::vector<Vec> out;
        for (const auto& kr : kernel_rows_) {
            Vec v(ncols_);
            for (const auto& [i, c] : kr) v[i] = c;
            out.push_back(std::move(v));
        }
        return out;
    }

    int rank() const { return static_cast<int>(echelon_.size()); }

private:
    int ncols_;
    std::map<int, std::pair<SparseVec, SparseVec>> echelon_; // lead row -> (column, augmentation)
    std::vector<SparseVec> kernel_rows_;
};

} // namespace unihopf
