#pragma once

#include "unihopf/subspace.hpp"
#include "unihopf/words.hpp"

namespace unihopf {

inline int int_pow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Matrix of id^{⊗k} ⊗ M ⊗ id^{⊗l} on V^{⊗(k+2+l)}, for M : V^{⊗2} → W.
// Rows are indexed (word of weight k, W index, word of weight l) flattened
// in that order; columns by enumerate_words(d, k+2+l). This realizes maps
// that act on two adjacent tensor slots, such as the quotient by J on the
// last two factors in the T_n recursion.
inline Matrix induced_positional_map(const Matrix& m, int k, int l, int d) {
    if (m.cols() != d * d)
        throw DimensionError("induced_positional_map: cols(M) must be d^2");
    const int r = m.rows();
    const int dk = int_pow(d, k), dl = int_pow(d, l);
    Matrix out(dk * r * dl, int_pow(d, k + 2 + l));
    for (int a = 0; a < dk; ++a)
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                const int pq = p * d + q;
                for (int w = 0; w < r; ++w) {
                    const Rational& c = m.at(w, pq);
                    if (c.is_zero()) continue;
                    for (int b = 0; b < dl; ++b) {
                        const int row = (a * r + w) * dl + b;
                        const int col = ((a * d + p) * d + q) * dl + b;
                        out.at(row, col) = c;
                    }
                }
            }
    return out;
}

// Matrix of M restricted to `source`, expressed in the canonical bases of
// source and target. M must send every basis vector of source into target.
inline Matrix restrict_map(const Matrix& m, const Subspace& source, const Subspace& target) {
    if (m.cols() != source.ambient_dim() || m.rows() != target.ambient_dim())
        throw DimensionError("restrict_map: shape mismatch with ambients");
    Matrix out(target.dim(), source.dim());
    for (int j = 0; j < source.dim(); ++j) {
        const Vec img = mat_vec(m, source.basis_vector(j));
        const auto coords = target.membership(img);
        if (!coords)
            throw Error("restrict_map: image of source basis vector " + std::to_string(j) +
                        " is not contained in target");
        for (int i = 0; i < target.dim(); ++i) out.at(i, j) = (*coords)[i];
    }
    return out;
}

} // namespace unihopf
