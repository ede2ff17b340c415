#pragma once

#include <random>

#include "unihopf/comodule.hpp"

namespace unihopf {

// --- universal extensions ---------------------------------------------------

// Extension 0 → k^r ⊗ 1 → U → E → 0 built from r cocycle rows of the
// coefficient complex on E^∨. Basis order: adjoined trivial part first, then
// E. A cocycle c gives the map c̃ : E → H̄ with c̃(v_e) = Σ_g c[(e,g)] h_g;
// coassociativity of the extension needs the antipode applied to the Hopf
// leg, ρ_U(v) = ρ_E(v) + Σ_j t_j ⊗ S(c̃_j(v)).
struct ExtensionResult {
    Comodule U;
    Matrix inclusion;  // (r+m) × r
    Matrix projection; // m × (r+m)
    Matrix cocycles;   // the r cocycle rows used (E^∨⊗H̄ coordinates)
};

inline ExtensionResult extension_from_cocycles(const Comodule& e, const Matrix& cocycles) {
    const GradedHopf& h = *e.hopf;
    const int D = h.total_dim();
    const int m = e.dim;
    const int r = cocycles.rows();
    if (cocycles.cols() != m * (D - 1))
        throw DimensionError("extension_from_cocycles: cocycle coordinate mismatch");

    Comodule u;
    u.hopf = e.hopf;
    u.dim = r + m;
    u.coaction.emplace(std::make_pair(0, 0), Matrix::identity(r + m));

    auto block = [&u, r, m](const std::pair<int, int>& key) -> Matrix& {
        auto it = u.coaction.find(key);
        if (it == u.coaction.end()) it = u.coaction.emplace(key, Matrix(r + m, r + m)).first;
        return it->second;
    };

    for (const auto& [key, mat] : e.coaction) {
        if (key == std::make_pair(0, 0)) continue;
        Matrix& b = block(key);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) b.at(r + i, r + j) = mat.at(i, j);
    }
    for (int j = 0; j < r; ++j)
        for (int v = 0; v < m; ++v) {
            HopfElem ctil;
            for (int g = 1; g < D; ++g) {
                const Rational& c = cocycles.at(j, v * (D - 1) + (g - 1));
                if (c.is_zero()) continue;
                const auto [w, i] = h.unflat(g);
                elem_add(ctil, w, i, c);
            }
            const HopfElem s = antipode_apply(h, ctil);
            for (const auto& [k, c] : s) block(k).at(j, r + v) = c;
        }
    for (auto it = u.coaction.begin(); it != u.coaction.end();)
        it = it->second.is_zero() ? u.coaction.erase(it) : std::next(it);

    const auto chk = check_comodule(u);
    if (!chk.ok)
        throw InternalConsistencyError("extension_from_cocycles: invalid comodule: " + chk.detail);

    ExtensionResult out{std::move(u), Matrix(r + m, r), Matrix(m, r + m), cocycles};
    for (int i = 0; i < r; ++i) out.inclusion.at(i, i) = Rational(1);
    for (int i = 0; i < m; ++i) out.projection.at(i, r + i) = Rational(1);
    return out;
}

// Universal extension U(E): adjoin one trivial line per canonical basis
// class of Ext¹(E,1) = H¹(G, E^∨). dim U = dim E + dim Ext¹(E,1).
inline ExtensionResult universal_extension(const Comodule& e) {
    const CoeffCohomology coh = cohomology_with_coefficients(dual_comodule(e));
    return extension_from_cocycles(e, coh.reps);
}

// --- the iterated tower ------------------------------------------------------

struct TowerLevel {
    Comodule E;
    Vec point;
    Matrix projection;   // E_n -> E_{n-1}; empty at the bottom level
    int free_rank = 0;   // dim of the adjoined trivial part = dim Ext¹(E_{n-1},1)
    Matrix ext_cocycles; // canonical cocycle representatives used for this level
};

struct PointedTower {
    const GradedHopf* hopf = nullptr;
    std::vector<TowerLevel> levels; // levels[n-1] = (E_n, e_n)

    const TowerLevel& level(int n) const { return levels.at(n - 1); }
    int height() const { return static_cast<int>(levels.size()); }
    std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& l : levels) d.push_back(l.E.dim);
        return d;
    }
};

// E_1 = (1, e_1), E_n = U(E_{n-1}) pointed by the zero-component lift
// e_n = (0, e_{n-1}) in the direct-sum coordinates of the extension.
// Levels beyond truncation+1 would need extension classes of weight above
// the truncation, which the truncated complexes cannot see; refused rather
// than silently stabilized.
inline PointedTower iterated_tower(const GradedHopf& h, int n_max) {
    if (n_max < 1) throw ValidationError("iterated_tower: need n_max >= 1");
    if (n_max > h.truncation + 1)
        throw TruncationError("iterated_tower: level " + std::to_string(n_max) +
                              " exceeds the truncation-supported depth " +
                              std::to_string(h.truncation + 1));
    PointedTower t;
    t.hopf = &h;
    TowerLevel l1{trivial_comodule(h, 1), Vec{Rational(1)}, Matrix(), 0, Matrix()};
    t.levels.push_back(std::move(l1));
    for (int n = 2; n <= n_max; ++n) {
        const TowerLevel& prev = t.levels.back();
        ExtensionResult ue = universal_extension(prev.E);
        Vec point(ue.U.dim);
        for (int i = 0; i < prev.E.dim; ++i) point[ue.U.dim - prev.E.dim + i] = prev.point[i];
        t.levels.push_back(TowerLevel{std::move(ue.U), std::move(point), std::move(ue.projection),
                                      ue.inclusion.cols(), std::move(ue.cocycles)});
    }
    return t;
}

// --- pointed morphisms -------------------------------------------------------

// Affine solution set of {φ : Δ_B ∘ φ = (φ⊗id) ∘ Δ_A, φ(a) = b}. The
// intertwining condition is imposed for a generating set of the dual
// algebra, which suffices because k ↦ M_k is multiplicative.
struct PointedHomSet {
    bool solvable = false;
    Matrix particular;   // dimB × dimA, meaningful when solvable
    Subspace homogeneous; // pointed-at-zero comodule maps, in vec coordinates

    bool singleton() const { return solvable && homogeneous.dim() == 0; }
};

namespace tower_detail {

inline Matrix component_combination(const Comodule& f, const Vec& dual_vec) {
    const GradedHopf& h = *f.hopf;
    Matrix m(f.dim, f.dim);
    for (const auto& [key, mat] : f.coaction) {
        const Rational& c = dual_vec[h.flat(key.first, key.second)];
        if (!c.is_zero()) m = m + c * mat;
    }
    return m;
}

} // namespace tower_detail

inline PointedHomSet hom_pointed(const Comodule& a, const Vec& pa, const Comodule& b,
                                 const Vec& pb,
                                 const std::vector<Vec>* generators_hint = nullptr) {
    const GradedHopf& h = *a.hopf;
    if (static_cast<int>(pa.size()) != a.dim || static_cast<int>(pb.size()) != b.dim)
        throw DimensionError("hom_pointed: point length mismatch");

    const std::vector<Vec> gens_local =
        generators_hint ? std::vector<Vec>() : dual_algebra_generators(h);
    const std::vector<Vec>& gens = generators_hint ? *generators_hint : gens_local;

    std::vector<Matrix> ma, mb;
    for (const auto& g : gens) {
        ma.push_back(tower_detail::component_combination(a, g));
        mb.push_back(tower_detail::component_combination(b, g));
    }

    // unknowns: φ[p][q] at p*a.dim+q, plus one homogenizing coordinate t
    const int nu = b.dim * a.dim;
    const long ng = static_cast<long>(gens.size());
    auto eq = [&](long f, long i, long j) { return (f * b.dim + i) * a.dim + j; };
    const long point_base = ng * b.dim * a.dim;

    SparseKernelAccumulator acc(nu + 1);
    for (int p = 0; p < b.dim; ++p)
        for (int q = 0; q < a.dim; ++q) {
            std::map<long, Rational> col;
            for (long f = 0; f < ng; ++f) {
                // Σ_p' N[i][p'] φ[p'][j]: appears at (i, j=q) with coeff N[i][p]
                for (int i = 0; i < b.dim; ++i)
                    if (!mb[f].at(i, p).is_zero()) col[eq(f, i, q)] += mb[f].at(i, p);
                // − Σ_q' φ[i][q'] M[q'][j]: appears at (i=p, j) with coeff −M[q][j]
                for (int j = 0; j < a.dim; ++j)
                    if (!ma[f].at(q, j).is_zero()) col[eq(f, p, j)] -= ma[f].at(q, j);
            }
            if (!pa[q].is_zero()) col[point_base + p] += pa[q];
            SparseVec sv;
            for (const auto& [row, c] : col)
                if (!c.is_zero()) sv.emplace_back(static_cast<int>(row), c);
            acc.add_column(p * a.dim + q, std::move(sv));
        }
    {
        std::map<long, Rational> col;
        for (int i = 0; i < b.dim; ++i)
            if (!pb[i].is_zero()) col[point_base + i] -= pb[i];
        SparseVec sv;
        for (const auto& [row, c] : col)
            if (!c.is_zero()) sv.emplace_back(static_cast<int>(row), c);
        acc.add_column(nu, std::move(sv));
    }

    const Subspace k = Subspace::from_vectors(acc.kernel(), nu + 1);

    PointedHomSet out;
    int pivot_row = -1;
    for (int i = 0; i < k.dim(); ++i)
        if (!k.basis().at(i, nu).is_zero()) { pivot_row = i; break; }
    if (pivot_row < 0) return out; // no solution

    Vec part = vec_scale(Rational(1) / k.basis().at(pivot_row, nu), k.basis_vector(pivot_row));
    out.solvable = true;
    out.particular = Matrix(b.dim, a.dim);
    for (int p = 0; p < b.dim; ++p)
        for (int q = 0; q < a.dim; ++q) out.particular.at(p, q) = part[p * a.dim + q];

    std::vector<Vec> hom;
    for (int i = 0; i < k.dim(); ++i) {
        Vec v = k.basis_vector(i);
        if (!v[nu].is_zero()) v = vec_sub(v, vec_scale(v[nu], part));
        v.resize(nu);
        if (!vec_is_zero(v)) hom.push_back(std::move(v));
    }
    out.homogeneous = Subspace::from_vectors(hom, nu);
    return out;
}

// Reference implementation imposing the intertwiner condition for every
// Hopf basis element; the generator-based solver is checked against this on
// small instances.
inline PointedHomSet hom_pointed_full(const Comodule& a, const Vec& pa, const Comodule& b,
                                      const Vec& pb) {
    const GradedHopf& h = *a.hopf;
    std::vector<Vec> gens;
    for (int g = 1; g < h.total_dim(); ++g) {
        Vec v(h.total_dim());
        v[g] = Rational(1);
        gens.push_back(std::move(v));
    }
    return hom_pointed(a, pa, b, pb, &gens);
}

// The unique pointed morphism E_{m+n} → E_m ⊗ E_n sending e_{m+n} to
// e_m⊗e_n. Non-existence or non-uniqueness would falsify the depth bound
// plus the iterated-extension universal property, so both abort.
inline Matrix tower_product(const PointedTower& t, int m, int n,
                            const std::vector<Vec>* generators_hint = nullptr) {
    if (m < 1 || n < 1 || m + n > t.height())
        throw ValidationError("tower_product: level out of range");
    const Comodule target = tensor_comodule(t.level(m).E, t.level(n).E);
    const Vec point = kron_vec(t.level(m).point, t.level(n).point);
    const PointedHomSet hom =
        hom_pointed(t.level(m + n).E, t.level(m + n).point, target, point, generators_hint);
    if (!hom.solvable)
        throw InternalConsistencyError("tower_product: no pointed morphism E_" +
                                       std::to_string(m + n) + " -> E_" + std::to_string(m) +
                                       "⊗E_" + std::to_string(n));
    if (hom.homogeneous.dim() != 0)
        throw InternalConsistencyError("tower_product: pointed morphism not unique at (" +
                                       std::to_string(m) + "," + std::to_string(n) + ")");
    return hom.particular;
}

// Matrix-coefficient realization Φ_n : E_n^∨ → H, φ ↦ (φ⊗id)Δ(e_n); its
// image is C_{n-1}H and it intertwines the tower products with the Hopf
// multiplication.
inline Matrix matrix_coefficient_map(const PointedTower& t, int n) {
    const GradedHopf& h = *t.hopf;
    const TowerLevel& l = t.level(n);
    Matrix phi(h.total_dim(), l.E.dim);
    for (const auto& [key, m] : l.E.coaction) {
        const Vec img = mat_vec(m, l.point);
        const int g = h.flat(key.first, key.second);
        for (int j = 0; j < l.E.dim; ++j) phi.at(g, j) = img[j];
    }
    return phi;
}

// --- randomized comodules for the fuzz batteries ------------------------------

inline int rand_below(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<unsigned long>(n));
}

inline Rational rand_small_rational(std::mt19937_64& rng) {
    const int num = rand_below(rng, 7) - 3;
    const int den = 1 + rand_below(rng, 2);
    return Rational(num, den);
}

// Random pointed nilpotent comodule of depth <= depth_max: an iterated
// extension by trivial pieces along random cocycles (random combinations of
// the canonical classes plus a random coboundary shift).
inline std::pair<Comodule, Vec> random_nilpotent_pointed(const GradedHopf& h,
                                                         std::mt19937_64& rng, int depth_max) {
    Comodule f = trivial_comodule(h, 1 + rand_below(rng, 2));
    for (int step = 1; step < depth_max; ++step) {
        const Comodule fd = dual_comodule(f);
        const CoeffCohomology coh = cohomology_with_coefficients(fd);
        if (coh.dim == 0) break;
        const int r = 1 + rand_below(rng, 2);
        Matrix rows(r, coh.reps.cols());
        for (int i = 0; i < r; ++i) {
            Vec v(coh.reps.cols());
            for (int c = 0; c < coh.dim; ++c) {
                const Rational coeff = rand_small_rational(rng);
                if (coeff.is_zero()) continue;
                v = vec_add(v, vec_scale(coeff, coh.reps.row(c)));
            }
            if (coh.coboundaries.dim() > 0) {
                const Rational coeff = rand_small_rational(rng);
                v = vec_add(v, vec_scale(coeff, coh.coboundaries.basis_vector(
                                                    rand_below(rng, coh.coboundaries.dim()))));
            }
            for (int j = 0; j < rows.cols(); ++j) rows.at(i, j) = v[j];
        }
        f = extension_from_cocycles(f, rows).U;
    }
    Vec point(f.dim);
    for (auto& x : point) x = rand_small_rational(rng);
    return {std::move(f), std::move(point)};
}

} // namespace unihopf
