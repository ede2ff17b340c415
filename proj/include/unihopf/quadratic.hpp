#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unihopf/free_shuffle.hpp"
#include "unihopf/positional.hpp"
#include "unihopf/tower.hpp"

namespace unihopf {

// Quadratic data (H¹, H², ∪): d1 = dim H¹, d2 = dim H², and the cup matrix
// of shape d2 × d1² with column (i-1)*d1+(j-1) reading e_i⊗e_j. The standing
// hypothesis is that the cup kills every symmetric tensor, so J = ker(∪)
// contains Sym²V.
struct QuadraticData {
    int d1 = 0;
    int d2 = 0;
    Matrix cup; // d2 × d1²
};

// First violating pair (i,j), 1-based, if cup(e_i⊗e_j + e_j⊗e_i) ≠ 0.
inline std::optional<std::pair<int, int>> validate_quadratic(const QuadraticData& q) {
    if (q.cup.rows() != q.d2 || q.cup.cols() != q.d1 * q.d1)
        throw DimensionError("validate_quadratic: cup shape mismatch");
    for (int i = 0; i < q.d1; ++i)
        for (int j = i; j < q.d1; ++j)
            for (int r = 0; r < q.d2; ++r) {
                Rational v = q.cup.at(r, i * q.d1 + j) + q.cup.at(r, j * q.d1 + i);
                if (i == j) v = q.cup.at(r, i * q.d1 + i);
                if (!v.is_zero()) return std::make_pair(i + 1, j + 1);
            }
    return std::nullopt;
}

inline void require_valid(const QuadraticData& q) {
    if (const auto bad = validate_quadratic(q))
        throw ValidationError("quadratic data: cup does not kill the symmetric tensor at pair (" +
                              std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
}

// J = ker(∪) ⊆ V⊗V.
inline Subspace kernel_J(const QuadraticData& q) {
    require_valid(q);
    return kernel(q.cup);
}

// The kernel tower T_0 = k, T_1 = V, T_n = ker(T_{n-1}⊗V → T_{n-2}⊗(V²/J)),
// the quotient acting on the last two tensor slots. Each T_n is canonical in
// V^{⊗n}. Quotienting by J and applying the cup have the same kernel, so the
// positional map is built from the cup matrix directly.
struct TnTower {
    QuadraticData quadratic;
    std::vector<Subspace> spaces; // spaces[n] ⊆ V^{⊗n}

    std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& s : spaces) d.push_back(s.dim());
        return d;
    }
};

inline TnTower tn_tower(const QuadraticData& q, int n_max) {
    require_valid(q);
    const int d = q.d1;
    TnTower t{q, {}};
    t.spaces.push_back(Subspace::full(1));
    if (n_max >= 1) t.spaces.push_back(Subspace::full(d));
    for (int n = 2; n <= n_max; ++n) {
        const Subspace source =
            Subspace::from_rows(kron(t.spaces[n - 1].basis(), Matrix::identity(d)));
        const Matrix big = induced_positional_map(q.cup, n - 2, 0, d);
        const Subspace target = Subspace::full(big.rows());
        const Matrix restricted = restrict_map(big, source, target);
        const Subspace k = kernel(restricted);
        std::vector<Vec> vecs;
        for (int i = 0; i < k.dim(); ++i) {
            Vec v(source.ambient_dim());
            const Vec coords = k.basis_vector(i);
            for (int j = 0; j < source.dim(); ++j)
                if (!coords[j].is_zero())
                    v = vec_add(v, vec_scale(coords[j], source.basis_vector(j)));
            vecs.push_back(std::move(v));
        }
        t.spaces.push_back(Subspace::from_vectors(vecs, source.ambient_dim()));
    }
    return t;
}

// Geometry presets realizing the quadratic data of the main examples.
inline QuadraticData preset_curve(int g) {
    if (g < 0) throw ValidationError("preset curve: genus must be >= 0");
    return {g, 0, Matrix(0, g * g)};
}

// Abelian: H² = Λ²V and cup = antisymmetrization e_i⊗e_j ↦ e_i∧e_j, rows
// ordered by pairs (i<j) lexicographically.
inline QuadraticData preset_abelian(int g) {
    if (g < 0) throw ValidationError("preset abelian: dimension must be >= 0");
    const int d2 = g * (g - 1) / 2;
    Matrix cup(d2, g * g);
    int row = 0;
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j, ++row) {
            cup.at(row, i * g + j) = Rational(1);
            cup.at(row, j * g + i) = Rational(-1);
        }
    return {g, d2, cup};
}

// Random valid data: a random matrix on the antisymmetric part and zero on
// Sym², which satisfies the symmetric-tensor hypothesis by construction.
inline QuadraticData random_quadratic(int d1, std::mt19937_64& rng, int d2_max = 3) {
    const QuadraticData antisym = preset_abelian(d1);
    const int lam = antisym.d2;
    const int d2 = lam == 0 ? 0 : rand_below(rng, std::min(d2_max, lam) + 1);
    Matrix r(d2, lam);
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j < lam; ++j) r.at(i, j) = Rational(rand_below(rng, 5) - 2);
    return {d1, d2, r * antisym.cup};
}

// --- the sub-Hopf algebra H(V,J) ---------------------------------------------

// Weight-n basis = canonical basis of T_n; product, coproduct and antipode
// are the shuffle tables of H(V) restricted to the tower. Construction fails
// loudly if any restricted operation leaves the tower: for valid quadratic
// data closure always holds, so a violation is an implementation bug, not a
// data problem.
inline GradedHopf build_quad_hopf(const TnTower& t, int N) {
    if (static_cast<int>(t.spaces.size()) <= N)
        throw ValidationError("build_quad_hopf: tower shorter than truncation");
    const int d = t.quadratic.d1;

    GradedHopf h;
    h.truncation = N;
    h.labels.resize(N + 1);
    h.coproduct.resize(N + 1);
    h.antipode.resize(N + 1);
    h.labels[0] = {"1"};

    auto word_of_row = [&](int w, int i) -> std::optional<Word> {
        // label basis vectors that are plain words by the word itself
        const Vec v = t.spaces[w].basis_vector(i);
        int found = -1;
        for (int j = 0; j < static_cast<int>(v.size()); ++j) {
            if (v[j].is_zero()) continue;
            if (found >= 0 || v[j] != Rational(1)) return std::nullopt;
            found = j;
        }
        if (found < 0) return std::nullopt;
        const auto words = enumerate_words(d, w);
        return words[found];
    };
    for (int w = 1; w <= N; ++w)
        for (int i = 0; i < t.spaces[w].dim(); ++i) {
            const auto asWord = word_of_row(w, i);
            h.labels[w].push_back(asWord ? asWord->str()
                                         : "t" + std::to_string(w) + "." + std::to_string(i));
        }

    // product tables: shuffle in word coordinates, then membership in T_{a+b}
    for (int a = 1; a <= N; ++a)
        for (int b = 1; a + b <= N; ++b) {
            auto& table = h.product[{a, b}];
            table.resize(t.spaces[a].dim());
            const auto words_a = enumerate_words(d, a);
            const auto words_b = enumerate_words(d, b);
            for (int i = 0; i < t.spaces[a].dim(); ++i) {
                table[i].resize(t.spaces[b].dim());
                const Vec u = t.spaces[a].basis_vector(i);
                for (int j = 0; j < t.spaces[b].dim(); ++j) {
                    const Vec v = t.spaces[b].basis_vector(j);
                    GradedVector prod{d, {}};
                    for (size_t p = 0; p < words_a.size(); ++p) {
                        if (u[p].is_zero()) continue;
                        for (size_t q = 0; q < words_b.size(); ++q) {
                            if (v[q].is_zero()) continue;
                            const GradedVector s = shuffle_words(words_a[p], words_b[q], d);
                            for (const auto& [w, c] : s.terms) prod.add(w, u[p] * v[q] * c);
                        }
                    }
                    const auto coords = t.spaces[a + b].membership(prod.component_coords(a + b));
                    if (!coords)
                        throw InternalConsistencyError(
                            "build_quad_hopf: product " + h.labels[a][i] + "*" + h.labels[b][j] +
                            " leaves T_" + std::to_string(a + b));
                    for (int k = 0; k < t.spaces[a + b].dim(); ++k)
                        if (!(*coords)[k].is_zero()) table[i][j].emplace_back(k, (*coords)[k]);
                }
            }
        }

    // coproduct: the (a,b) deconcatenation component of an element of
    // V^{⊗(a+b)} is the element itself read in V^{⊗a}⊗V^{⊗b}; expressing it
    // in the T_a⊗T_b product basis is a linear solve against Kronecker rows.
    for (int w = 0; w <= N; ++w) {
        h.coproduct[w].resize(h.dim(w));
        h.antipode[w].resize(h.dim(w));
        for (int i = 0; i < h.dim(w); ++i) {
            if (w == 0) {
                h.coproduct[0][0].push_back({0, 0, 0, 0, Rational(1)});
                h.antipode[0][0].emplace_back(0, Rational(1));
                continue;
            }
            const Vec x = t.spaces[w].basis_vector(i);
            h.coproduct[w][i].push_back({0, 0, w, i, Rational(1)});
            h.coproduct[w][i].push_back({w, i, 0, 0, Rational(1)});
            for (int a = 1; a < w; ++a) {
                const int b = w - a;
                const Matrix krows = kron(t.spaces[a].basis(), t.spaces[b].basis());
                const auto coords = solve_unique(krows.transpose(), x);
                if (!coords)
                    throw InternalConsistencyError("build_quad_hopf: Δ(" + h.labels[w][i] +
                                                   ") leaves T_" + std::to_string(a) + "⊗T_" +
                                                   std::to_string(b));
                for (int p = 0; p < t.spaces[a].dim(); ++p)
                    for (int q = 0; q < t.spaces[b].dim(); ++q) {
                        const Rational& c = (*coords)[p * t.spaces[b].dim() + q];
                        if (!c.is_zero()) h.coproduct[w][i].push_back({a, p, b, q, c});
                    }
            }

            // antipode: signed reversal, then membership in T_w
            const auto words = enumerate_words(d, w);
            Vec rev(x.size());
            for (size_t p = 0; p < words.size(); ++p)
                if (!x[p].is_zero()) rev[word_index(words[p].reversed(), d)] = x[p];
            const Rational sign = (w % 2 == 0) ? Rational(1) : Rational(-1);
            const auto coords = t.spaces[w].membership(vec_scale(sign, rev));
            if (!coords)
                throw InternalConsistencyError("build_quad_hopf: S(" + h.labels[w][i] +
                                               ") leaves T_" + std::to_string(w));
            for (int k = 0; k < t.spaces[w].dim(); ++k)
                if (!(*coords)[k].is_zero()) h.antipode[w][i].emplace_back(k, (*coords)[k]);
        }
    }
    return h;
}

inline std::vector<int> graded_dims(const GradedHopf& h) {
    std::vector<int> d;
    for (int w = 0; w <= h.truncation; ++w) d.push_back(h.dim(w));
    return d;
}

// Embedding H(V,J) ↪ H(V) of flattened truncated spaces: block per weight,
// columns are the T_w basis vectors in word coordinates.
inline Matrix embedding_into_free(const TnTower& t, const GradedHopf& hsub,
                                  const GradedHopf& hfree) {
    Matrix e(hfree.total_dim(), hsub.total_dim());
    e.at(0, 0) = Rational(1);
    for (int w = 1; w <= hsub.truncation; ++w)
        for (int i = 0; i < hsub.dim(w); ++i) {
            const Vec v = t.spaces[w].basis_vector(i);
            for (int j = 0; j < static_cast<int>(v.size()); ++j)
                e.at(hfree.offset(w) + j, hsub.offset(w) + i) = v[j];
        }
    return e;
}

// Quadratic data intrinsic to a Hopf algebra: H¹ = primitives, H² = cobar
// degree-2 classes (all weights up to the truncation), cup [p]⊗[q] = class
// of p⊗q. This is the Ext^{≤2} data the quadratic approximation consumes.
inline QuadraticData quadratic_from_cohomology(const GradedHopf& h) {
    const PrimitiveBasis pb = primitive_basis(h);
    const CohomologyReport h2 = cobar_cohomology(h, 2, h.truncation);
    std::vector<int> class_offset(h.truncation + 2, 0);
    for (int w = 0; w <= h.truncation; ++w) class_offset[w + 1] = class_offset[w] + h2.dims[w];
    const int d2 = class_offset[h.truncation + 1];

    QuadraticData q{pb.dim(), d2, Matrix(d2, pb.dim() * pb.dim())};
    for (int i = 0; i < pb.dim(); ++i)
        for (int j = 0; j < pb.dim(); ++j) {
            const int w = pb.weights[i] + pb.weights[j];
            if (w > h.truncation)
                throw TruncationError("quadratic_from_cohomology: cup weight exceeds truncation");
            const Vec cls = cup_class(h, h2, pb.weights[i], pb.vectors[i], pb.weights[j],
                                      pb.vectors[j]);
            for (int r = 0; r < static_cast<int>(cls.size()); ++r)
                q.cup.at(class_offset[w] + r, i * pb.dim() + j) = cls[r];
        }
    return q;
}

// --- the canonical maps τ_n and ξ_n -------------------------------------------

// τ_n : Ext¹(E_n,1) → Ext¹(E_{n-1},1) ⊗ Ext¹(1,1) restricts a canonical
// cocycle to the free part of E_n (whose basis is identified with the
// canonical Ext¹(E_{n-1},1) classes by the tower construction); the
// restricted components are primitives. ξ_n composes the τ's down to
// Prim^{⊗n}; ξ_1 = id. Both are injective with image(ξ_n) ⊆ T_n, which the
// callers assert.
struct TowerMaps {
    PrimitiveBasis prims;
    std::vector<Matrix> tau; // tau[n], n >= 2; tau[0], tau[1] unused
    std::vector<Matrix> xi;  // xi[n], n >= 1; rows indexed by primitive tuples

    const Matrix& tau_map(int n) const {
        if (n < 2 || n >= static_cast<int>(tau.size()))
            throw ValidationError("tau_map: weight out of computed range");
        return tau[n];
    }
    const Matrix& xi_map(int n) const {
        if (n < 1 || n >= static_cast<int>(xi.size()))
            throw ValidationError("xi_map: weight out of computed range");
        return xi[n];
    }
};

// ξ_n with its target read in T_n coordinates rather than V^{⊗n}; the same
// map under the inclusion T_n ⊆ V^{⊗n}.
inline Matrix xi_into_tower(const TowerMaps& maps, const TnTower& t, int n) {
    const Matrix& xi = maps.xi_map(n);
    Matrix out(t.spaces[n].dim(), xi.cols());
    for (int c = 0; c < xi.cols(); ++c) {
        Vec col(xi.rows());
        for (int r = 0; r < xi.rows(); ++r) col[r] = xi.at(r, c);
        const auto coords = t.spaces[n].membership(col);
        if (!coords)
            throw InternalConsistencyError("xi_into_tower: image escapes T_" + std::to_string(n));
        for (int r = 0; r < t.spaces[n].dim(); ++r) out.at(r, c) = (*coords)[r];
    }
    return out;
}

inline TowerMaps compute_tower_maps(const GradedHopf& h, const PointedTower& t, int n_max) {
    if (n_max > t.height())
        throw ValidationError("compute_tower_maps: tower shorter than requested level");
    TowerMaps maps;
    maps.prims = primitive_basis(h);
    const int dp = maps.prims.dim();
    const int D = h.total_dim();

    // primitive coordinates of a flattened Hopf vector
    Matrix primCols(D, dp);
    for (int p = 0; p < dp; ++p) {
        const int w = maps.prims.weights[p];
        for (int j = 0; j < h.dim(w); ++j) primCols.at(h.offset(w) + j, p) = maps.prims.vectors[p][j];
    }

    maps.tau.resize(n_max + 1);
    maps.xi.resize(n_max + 1);
    if (n_max >= 1) maps.xi[1] = Matrix::identity(dp);

    std::vector<int> ext_dim(n_max + 2, 0);
    ext_dim[1] = dp; // Ext¹(E_1,1) = primitives

    for (int n = 2; n <= n_max; ++n) {
        const CoeffCohomology coh = cohomology_with_coefficients(dual_comodule(t.level(n).E));
        const int rn = coh.dim;
        const int rprev = t.level(n).free_rank; // = dim Ext¹(E_{n-1},1)
        ext_dim[n] = rn;

        Matrix tau(rprev * dp, rn);
        for (int col = 0; col < rn; ++col)
            for (int j = 0; j < rprev; ++j) {
                Vec hvec(D);
                for (int g = 1; g < D; ++g) hvec[g] = coh.reps.at(col, j * (D - 1) + (g - 1));
                const auto coords = solve_unique(primCols, hvec);
                if (!coords)
                    throw InternalConsistencyError(
                        "compute_tower_maps: restricted cocycle is not primitive at level " +
                        std::to_string(n));
                for (int p = 0; p < dp; ++p) tau.at(j * dp + p, col) = (*coords)[p];
            }
        maps.tau[n] = tau;

        // ξ_n = (τ_2 ⊗ id^{n-2}) ∘ ... ∘ (τ_{n-1} ⊗ id) ∘ τ_n
        Matrix xi = tau;
        for (int k = n - 1; k >= 2; --k)
            xi = kron(maps.tau[k], Matrix::identity(int_pow(dp, n - k))) * xi;
        maps.xi[n] = std::move(xi);
    }
    return maps;
}

} // namespace unihopf
