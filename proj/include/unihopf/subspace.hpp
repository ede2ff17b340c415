#pragma once

#include <optional>
#include <vector>

#include "unihopf/matrix.hpp"

namespace unihopf {

// Subspace of k^n, stored as its unique reduced-row-echelon basis with rows
// ordered by pivot column. Equality of subspaces is therefore a syntactic
// comparison of the stored matrices.
class Subspace {
public:
    Subspace() : ambient_(0), basis_(0, 0) {}

    static Subspace zero(int ambient) { return Subspace(ambient, Matrix(0, ambient)); }

    static Subspace full(int ambient) { return Subspace(ambient, Matrix::identity(ambient)); }

    // Canonicalizes the row space of `rows`.
    static Subspace from_rows(const Matrix& rows) {
        const Matrix r = rref(rows);
        const int rk = static_cast<int>(pivot_columns(r).size());
        Matrix b(rk, rows.cols());
        for (int i = 0; i < rk; ++i)
            for (int j = 0; j < rows.cols(); ++j) b.at(i, j) = r.at(i, j);
        return Subspace(rows.cols(), b);
    }

    static Subspace from_vectors(const std::vector<Vec>& vs, int ambient) {
        Matrix m(static_cast<int>(vs.size()), ambient);
        for (size_t i = 0; i < vs.size(); ++i) {
            if (static_cast<int>(vs[i].size()) != ambient)
                throw DimensionError("Subspace::from_vectors: length mismatch");
            for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = vs[i][j];
        }
        return from_rows(m);
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(int i) const { return basis_.row(i); }

    // Coordinates of v in the canonical basis when v lies in the subspace.
    // In RREF the candidate coordinates can be read off the pivot columns.
    std::optional<Vec> membership(const Vec& v) const {
        if (static_cast<int>(v.size()) != ambient_)
            throw DimensionError("Subspace::membership: ambient mismatch");
        const auto piv = pivot_columns(basis_);
        Vec coeff(dim());
        for (int i = 0; i < dim(); ++i) coeff[i] = v[piv[i]];
        Vec rec(ambient_);
        for (int i = 0; i < dim(); ++i)
            if (!coeff[i].is_zero())
                for (int j = 0; j < ambient_; ++j)
                    if (!basis_.at(i, j).is_zero()) rec[j] += coeff[i] * basis_.at(i, j);
        if (rec != v) return std::nullopt;
        return coeff;
    }

    bool contains(const Vec& v) const { return membership(v).has_value(); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_)
            throw DimensionError("Subspace::contains: ambient mismatch");
        for (int i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

    int ambient_;
    Matrix basis_; // RREF, no zero rows
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("sum: ambient mismatch");
    return Subspace::from_rows(stack_rows(a.basis(), b.basis()));
}

// Zassenhaus: row-reduce [A A; B 0]; rows with vanishing left block carry an
// intersection basis in the right block.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("intersect: ambient mismatch");
    const int n = a.ambient_dim();
    Matrix z(a.dim() + b.dim(), 2 * n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            z.at(i, j) = a.basis().at(i, j);
            z.at(i, n + j) = a.basis().at(i, j);
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < n; ++j) z.at(a.dim() + i, j) = b.basis().at(i, j);
    const Matrix r = rref(z);
    std::vector<Vec> rows;
    for (int i = 0; i < r.rows(); ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (!r.at(i, j).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vec v(n);
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            v[j] = r.at(i, n + j);
            if (!v[j].is_zero()) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(v));
    }
    return Subspace::from_vectors(rows, n);
}

// Right null space {v : m v = 0}, canonical basis.
inline Subspace kernel(const Matrix& m) {
    const Matrix r = rref(m);
    const auto piv = pivot_columns(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v(m.cols());
        v[j] = Rational(1);
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(static_cast<int>(i), j);
        basis.push_back(std::move(v));
    }
    return Subspace::from_vectors(basis, m.cols());
}

// Column space, canonical basis; ambient is the row count of m.
inline Subspace image(const Matrix& m) { return Subspace::from_rows(m.transpose()); }

// Canonical complement of `sub` inside `whole` (sub must be contained in
// whole): the RREF rows of `whole` whose pivots are not pivots of `sub`.
inline Matrix echelon_complement(const Subspace& sub, const Subspace& whole) {
    const auto pw = pivot_columns(whole.basis());
    const auto ps = pivot_columns(sub.basis());
    std::vector<bool> in_sub(whole.ambient_dim(), false);
    for (int p : ps) in_sub[p] = true;
    std::vector<Vec> rows;
    for (size_t i = 0; i < pw.size(); ++i)
        if (!in_sub[pw[i]]) rows.push_back(whole.basis().row(static_cast<int>(i)));
    Matrix out(static_cast<int>(rows.size()), whole.ambient_dim());
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < whole.ambient_dim(); ++j) out.at(static_cast<int>(i), j) = rows[i][j];
    return out;
}

} // namespace unihopf
