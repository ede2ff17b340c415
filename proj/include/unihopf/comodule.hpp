#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unihopf/conil.hpp"
#include "unihopf/hopf.hpp"

namespace unihopf {

// Finite-dimensional right comodule over a truncated GradedHopf. The
// coaction is stored componentwise: Δ_F(v) = Σ_k (M_k v) ⊗ h_k with one
// matrix per Hopf basis element; zero components are omitted and the unit
// component is the identity (that is the counit law). Coassociativity says
// k ↦ M_k is an algebra map from the dual algebra into End(F), i.e.
// M_k M_l = Σ_m c^m_{kl} M_m where Δh_m = Σ c^m_{kl} h_k⊗h_l.
struct Comodule {
    const GradedHopf* hopf = nullptr;
    int dim = 0;
    std::map<std::pair<int, int>, Matrix> coaction; // (w,i) -> dim×dim

    const Matrix* component(int w, int i) const {
        auto it = coaction.find({w, i});
        return it == coaction.end() ? nullptr : &it->second;
    }
};

inline Comodule trivial_comodule(const GradedHopf& h, int n) {
    Comodule f;
    f.hopf = &h;
    f.dim = n;
    if (n > 0) f.coaction.emplace(std::make_pair(0, 0), Matrix::identity(n));
    return f;
}

inline Comodule direct_sum(const Comodule& a, const Comodule& b) {
    Comodule s;
    s.hopf = a.hopf;
    s.dim = a.dim + b.dim;
    auto put = [&s, &a, &b](const std::pair<int, int>& key) {
        const Matrix* ma = a.component(key.first, key.second);
        const Matrix* mb = b.component(key.first, key.second);
        Matrix m(s.dim, s.dim);
        if (ma)
            for (int i = 0; i < a.dim; ++i)
                for (int j = 0; j < a.dim; ++j) m.at(i, j) = ma->at(i, j);
        if (mb)
            for (int i = 0; i < b.dim; ++i)
                for (int j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = mb->at(i, j);
        if (!m.is_zero()) s.coaction.emplace(key, std::move(m));
    };
    for (const auto& [key, m] : a.coaction) put(key);
    for (const auto& [key, m] : b.coaction)
        if (!a.component(key.first, key.second)) put(key);
    return s;
}

struct ComoduleCheck {
    bool ok = true;
    std::string detail;
};

// Verifies the counit and coassociativity laws exactly on the basis.
inline ComoduleCheck check_comodule(const Comodule& f) {
    const GradedHopf& h = *f.hopf;
    if (f.dim == 0) return {};
    const Matrix* unit = f.component(0, 0);
    if (!unit || *unit != Matrix::identity(f.dim))
        return {false, "counit law fails: unit component is not the identity"};
    for (const auto& [key, m] : f.coaction)
        if (m.rows() != f.dim || m.cols() != f.dim)
            return {false, "coaction matrix shape mismatch"};

    // Σ_m c^m_{kl} M_m for all pairs (k,l) seen in coproducts of supported m
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Matrix> rhs;
    for (const auto& [key, m] : f.coaction)
        for (const auto& t : h.coproduct[key.first][key.second]) {
            auto pk = std::make_pair(std::make_pair(t.w1, t.i1), std::make_pair(t.w2, t.i2));
            auto it = rhs.find(pk);
            if (it == rhs.end()) it = rhs.emplace(pk, Matrix(f.dim, f.dim)).first;
            it->second = it->second + t.c * m;
        }
    // pairs where both factors act nontrivially
    for (const auto& [k1, m1] : f.coaction)
        for (const auto& [k2, m2] : f.coaction) {
            auto pk = std::make_pair(k1, k2);
            const Matrix prod = m1 * m2;
            auto it = rhs.find(pk);
            const Matrix& want = it == rhs.end() ? Matrix(f.dim, f.dim) : it->second;
            if (prod != want)
                return {false, "coassociativity fails at pair (" + h.labels[k1.first][k1.second] +
                                   ", " + h.labels[k2.first][k2.second] + ")"};
            if (it != rhs.end()) rhs.erase(it);
        }
    for (const auto& [pk, m] : rhs) {
        // remaining pairs must have M_k M_l = 0 with at least one factor absent
        const Matrix* m1 = f.component(pk.first.first, pk.first.second);
        const Matrix* m2 = f.component(pk.second.first, pk.second.second);
        if (!m1 || !m2) {
            if (!m.is_zero())
                return {false, "coassociativity fails at pair (" +
                                   h.labels[pk.first.first][pk.first.second] + ", " +
                                   h.labels[pk.second.first][pk.second.second] + ")"};
        }
    }
    return {};
}

// Dual comodule: the coaction on F^∨ is twisted by the antipode so that the
// evaluation F ⊗ F^∨ → 1 is a comodule map. In coordinates
// N_l = Σ_k s_{lk} M_k^T with S(h_k) = Σ_l s_{lk} h_l.
inline Comodule dual_comodule(const Comodule& f) {
    const GradedHopf& h = *f.hopf;
    Comodule d;
    d.hopf = f.hopf;
    d.dim = f.dim;
    for (const auto& [key, m] : f.coaction) {
        const Matrix mt = m.transpose();
        for (const auto& [l, s] : h.antipode[key.first][key.second]) {
            auto dk = std::make_pair(key.first, l);
            auto it = d.coaction.find(dk);
            if (it == d.coaction.end())
                d.coaction.emplace(dk, s * mt);
            else
                it->second = it->second + s * mt;
        }
    }
    for (auto it = d.coaction.begin(); it != d.coaction.end();)
        it = it->second.is_zero() ? d.coaction.erase(it) : std::next(it);
    return d;
}

// Diagonal coaction on A⊗B using the Hopf product on the right legs.
// Raises TruncationError when two acting components multiply past the
// truncation weight.
inline Comodule tensor_comodule(const Comodule& a, const Comodule& b) {
    const GradedHopf& h = *a.hopf;
    Comodule t;
    t.hopf = a.hopf;
    t.dim = a.dim * b.dim;
    for (const auto& [ka, ma] : a.coaction)
        for (const auto& [kb, mb] : b.coaction) {
            if (ka.first + kb.first > h.truncation)
                throw TruncationError("tensor_comodule: coaction weight " +
                                      std::to_string(ka.first + kb.first) + " exceeds truncation");
            const HopfElem prod = multiply_basis(h, ka.first, ka.second, kb.first, kb.second);
            if (prod.empty()) continue;
            const Matrix kr = kron(ma, mb);
            for (const auto& [km, c] : prod) {
                auto it = t.coaction.find(km);
                if (it == t.coaction.end())
                    t.coaction.emplace(km, c * kr);
                else
                    it->second = it->second + c * kr;
            }
        }
    for (auto it = t.coaction.begin(); it != t.coaction.end();)
        it = it->second.is_zero() ? t.coaction.erase(it) : std::next(it);
    return t;
}

// {v : Δ_F(v) = v⊗1}: the maximal trivial sub-comodule, as the joint kernel
// of the non-unit components.
inline Subspace coinvariants(const Comodule& f) {
    int rows = 0;
    for (const auto& [key, m] : f.coaction)
        if (key != std::make_pair(0, 0)) rows += f.dim;
    Matrix stack(rows, f.dim);
    int off = 0;
    for (const auto& [key, m] : f.coaction) {
        if (key == std::make_pair(0, 0)) continue;
        for (int i = 0; i < f.dim; ++i)
            for (int j = 0; j < f.dim; ++j) stack.at(off + i, j) = m.at(i, j);
        off += f.dim;
    }
    return kernel(stack);
}

namespace comodule_detail {

// Quotient F/S for a subcomodule S: quotient coordinates are the non-pivot
// standard coordinates of S's canonical basis; π reduces mod S, σ sections.
struct QuotientData {
    Comodule quotient;
    Matrix projection; // q×dim
    Matrix section;    // dim×q
};

inline QuotientData quotient_comodule(const Comodule& f, const Subspace& s) {
    const auto piv = pivot_columns(s.basis());
    std::vector<bool> is_piv(f.dim, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<int> np;
    for (int j = 0; j < f.dim; ++j)
        if (!is_piv[j]) np.push_back(j);
    const int q = static_cast<int>(np.size());

    Matrix proj(q, f.dim);
    for (int r = 0; r < q; ++r) {
        proj.at(r, np[r]) = Rational(1);
        for (int i = 0; i < s.dim(); ++i)
            proj.at(r, piv[i]) = proj.at(r, piv[i]) - s.basis().at(i, np[r]);
    }
    Matrix sec(f.dim, q);
    for (int r = 0; r < q; ++r) sec.at(np[r], r) = Rational(1);

    QuotientData out{{f.hopf, q, {}}, proj, sec};
    for (const auto& [key, m] : f.coaction) {
        Matrix mq = proj * (m * sec);
        if (!mq.is_zero()) out.quotient.coaction.emplace(key, std::move(mq));
    }
    return out;
}

} // namespace comodule_detail

// Minimal length of a filtration with trivial quotients, computed by the
// socle filtration (iterated coinvariants of quotients), which is
// depth-minimizing. Rejects comodules whose socle stabilizes early.
inline int depth(const Comodule& f) {
    if (f.dim == 0) return 0;
    Subspace s = Subspace::zero(f.dim);
    int steps = 0;
    while (s.dim() < f.dim) {
        const auto q = comodule_detail::quotient_comodule(f, s);
        const Subspace soc = coinvariants(q.quotient);
        if (soc.dim() == 0)
            throw NotNilpotentError("depth: socle filtration stabilized at dim " +
                                    std::to_string(s.dim()) + " of " + std::to_string(f.dim));
        std::vector<Vec> vecs;
        for (int i = 0; i < s.dim(); ++i) vecs.push_back(s.basis_vector(i));
        for (int i = 0; i < soc.dim(); ++i) vecs.push_back(mat_vec(q.section, soc.basis_vector(i)));
        s = Subspace::from_vectors(vecs, f.dim);
        ++steps;
    }
    return steps;
}

// Checks that a depth-n comodule coacts into F ⊗ C_{n-1}. Returns a witness
// description on failure instead of throwing: the factorization always holds
// for genuine comodules, so the caller decides what a failure means.
inline std::optional<std::string> verify_conil_factorization(const Comodule& f,
                                                             const ConilFiltration& c) {
    const GradedHopf& h = *f.hopf;
    const int n = depth(f);
    if (n == 0) return std::nullopt;
    if (n - 1 >= static_cast<int>(c.levels.size()))
        throw ValidationError("verify_conil_factorization: filtration too short");
    const Subspace& level = c.levels[n - 1];
    for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j) {
            Vec g(h.total_dim());
            bool nonzero = false;
            for (const auto& [key, m] : f.coaction)
                if (!m.at(j, i).is_zero()) {
                    g[h.flat(key.first, key.second)] = m.at(j, i);
                    nonzero = true;
                }
            if (nonzero && !level.contains(g))
                return "coaction component (" + std::to_string(i) + " -> " + std::to_string(j) +
                       ") escapes C_" + std::to_string(n - 1);
        }
    return std::nullopt;
}

// Degree-1 cohomology of the coefficient complex
//   F → F⊗H̄ → F⊗H̄⊗H̄,
//   d⁰v = Δ_F(v) − v⊗1,   d¹(v⊗h) = (Δ_F(v) − v⊗1)⊗h − v⊗Δ̄h.
// With F = E^∨ this computes Ext¹(E,1) = H¹(G, E^∨); the canonical cocycle
// representatives (echelon complement of the coboundaries) feed the
// universal-extension constructor, which keeps U(E) reproducible.
struct CoeffCohomology {
    int dim = 0;
    Matrix reps;           // dim × (F.dim * (D-1)) canonical cocycle representatives
    Subspace cocycles;     // in F⊗H̄ coordinates
    Subspace coboundaries; // likewise
};

inline CoeffCohomology cohomology_with_coefficients(const Comodule& f) {
    const GradedHopf& h = *f.hopf;
    const int D = h.total_dim();
    const int m = f.dim;
    const int n1 = m * (D - 1); // F⊗H̄, coordinate (v, g) -> v*(D-1) + (g-1)

    // d⁰ columns
    std::vector<Vec> boundaries;
    for (int v = 0; v < m; ++v) {
        Vec col(n1);
        for (const auto& [key, mat] : f.coaction) {
            if (key == std::make_pair(0, 0)) continue;
            const int g = h.flat(key.first, key.second);
            for (int j = 0; j < m; ++j)
                if (!mat.at(j, v).is_zero()) col[j * (D - 1) + (g - 1)] = mat.at(j, v);
        }
        boundaries.push_back(std::move(col));
    }
    const Subspace bnd = Subspace::from_vectors(boundaries, n1);

    // d¹ as sparse columns over C² coordinates (v, g1, g2)
    SparseKernelAccumulator acc(n1);
    auto flat2 = [&](long v, long g1, long g2) {
        return (v * (D - 1) + (g1 - 1)) * (D - 1) + (g2 - 1);
    };
    for (int v = 0; v < m; ++v)
        for (int g = 1; g < D; ++g) {
            const auto [wg, ig] = h.unflat(g);
            std::map<long, Rational> col;
            for (const auto& [key, mat] : f.coaction) {
                if (key == std::make_pair(0, 0)) continue;
                const int gk = h.flat(key.first, key.second);
                for (int j = 0; j < m; ++j)
                    if (!mat.at(j, v).is_zero()) col[flat2(j, gk, g)] += mat.at(j, v);
            }
            for (const auto& t : h.coproduct[wg][ig]) {
                if (t.w1 == 0 || t.w2 == 0) continue;
                col[flat2(v, h.flat(t.w1, t.i1), h.flat(t.w2, t.i2))] -= t.c;
            }
            SparseVec sv;
            for (const auto& [row, c] : col)
                if (!c.is_zero()) sv.emplace_back(static_cast<int>(row), c);
            acc.add_column(v * (D - 1) + (g - 1), std::move(sv));
        }
    const Subspace z = Subspace::from_vectors(acc.kernel(), n1);
    if (!z.contains(bnd))
        throw InternalConsistencyError("cohomology_with_coefficients: d¹∘d⁰ ≠ 0");

    CoeffCohomology out;
    out.cocycles = z;
    out.coboundaries = bnd;
    out.reps = echelon_complement(bnd, z);
    out.dim = out.reps.rows();
    return out;
}

// dim Hom(F, 1) = dim of comodule maps to the trivial comodule.
inline int hom_to_trivial_dim(const Comodule& f) {
    return coinvariants(dual_comodule(f)).dim();
}

} // namespace unihopf
