#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unihopf/hopf.hpp"

namespace unihopf {

// Everything in this header is weight-graded: the reduced coproduct and the
// dual-algebra product are weight-homogeneous, so each filtration level and
// each cohomology group splits by weight and is computed exactly there;
// truncation at N never contaminates weights <= N.

namespace coalg_detail {

// Matrix of the (a, w-a) component of Δ on H_w: rows indexed (i,j) flattened
// as i*dim(b)+j, columns by the weight-w basis.
inline Matrix coproduct_block(const GradedHopf& h, int w, int a) {
    const int b = w - a;
    Matrix m(h.dim(a) * h.dim(b), h.dim(w));
    for (int col = 0; col < h.dim(w); ++col)
        for (const auto& t : h.coproduct[w][col])
            if (t.w1 == a && t.w2 == b)
                m.at(t.i1 * h.dim(b) + t.i2, col) = m.at(t.i1 * h.dim(b) + t.i2, col) + t.c;
    return m;
}

// Reduced coproduct on H_w (w >= 1), stacked over blocks a = 1..w-1.
inline Matrix delta_bar_matrix(const GradedHopf& h, int w) {
    int rows = 0;
    for (int a = 1; a < w; ++a) rows += h.dim(a) * h.dim(w - a);
    Matrix m(rows, h.dim(w));
    int off = 0;
    for (int a = 1; a < w; ++a) {
        const Matrix blk = coproduct_block(h, w, a);
        for (int i = 0; i < blk.rows(); ++i)
            for (int j = 0; j < blk.cols(); ++j) m.at(off + i, j) = blk.at(i, j);
        off += blk.rows();
    }
    return m;
}

// Matrix R with ker R = sub: reduce-mod-sub in the ambient coordinates,
// (Rv)_j = v_j - Σ_i v[piv_i]·B[i][j].
inline Matrix mod_subspace_matrix(const Subspace& sub) {
    const int n = sub.ambient_dim();
    Matrix r = Matrix::identity(n);
    const auto piv = pivot_columns(sub.basis());
    for (int i = 0; i < sub.dim(); ++i)
        for (int j = 0; j < n; ++j)
            r.at(j, piv[i]) = r.at(j, piv[i]) - sub.basis().at(i, j);
    return r;
}

// Assemble per-weight subspaces into one subspace of the flattened truncated
// space. Blocks are already canonical, so the stack is the canonical basis.
inline Subspace flatten_graded(const GradedHopf& h, const std::vector<Subspace>& by_weight) {
    std::vector<Vec> rows;
    for (int w = 0; w <= h.truncation; ++w) {
        for (int i = 0; i < by_weight[w].dim(); ++i) {
            Vec v(h.total_dim());
            for (int j = 0; j < h.dim(w); ++j) v[h.offset(w) + j] = by_weight[w].basis().at(i, j);
            rows.push_back(std::move(v));
        }
    }
    return Subspace::from_vectors(rows, h.total_dim());
}

} // namespace coalg_detail

// Conilpotency filtration C_0 ⊆ C_1 ⊆ ... of a coaugmented coalgebra:
// C_n = k·1 ⊕ ker of the (n+1)-fold reduced coproduct on the augmentation
// ideal. Levels are subspaces of the flattened truncated space.
struct ConilFiltration {
    const GradedHopf* hopf = nullptr;
    std::vector<Subspace> levels;

    int level_dim(int n) const { return levels[n].dim(); }
    std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& l : levels) d.push_back(l.dim());
        return d;
    }
    // dim C_n - dim C_{n-1}
    std::vector<int> graded_dims() const {
        std::vector<int> g;
        for (size_t n = 0; n < levels.size(); ++n)
            g.push_back(levels[n].dim() - (n ? levels[n - 1].dim() : 0));
        return g;
    }
};

// Primary algorithm: per weight, C_n = Δ̄^{-1}(C̄_{n-1} ⊗ I), seeded with
// C_0 = k·1. Uses only the reduced-coproduct tables.
inline ConilFiltration conil_filtration(const GradedHopf& h, int max_level) {
    using namespace coalg_detail;
    const int N = h.truncation;
    ConilFiltration f{&h, {}};

    // per-weight levels; weight 0 is always the unit line
    std::vector<Subspace> prev(N + 1);
    prev[0] = Subspace::full(h.dim(0));
    for (int w = 1; w <= N; ++w) prev[w] = Subspace::zero(h.dim(w));
    f.levels.push_back(flatten_graded(h, prev));

    for (int n = 1; n <= max_level; ++n) {
        std::vector<Subspace> cur(N + 1);
        cur[0] = Subspace::full(h.dim(0));
        for (int w = 1; w <= N; ++w) {
            if (w <= n) { // fewer than n+1 nonempty blocks exist
                cur[w] = Subspace::full(h.dim(w));
                continue;
            }
            // stack (q_a ⊗ id) ∘ Δ̄_{a,b} over all splits
            std::vector<Matrix> blocks;
            int rows = 0;
            for (int a = 1; a < w; ++a) {
                const Matrix q = mod_subspace_matrix(prev[a]);
                const Matrix blk = kron(q, Matrix::identity(h.dim(w - a))) *
                                   coproduct_block(h, w, a);
                rows += blk.rows();
                blocks.push_back(blk);
            }
            Matrix m(rows, h.dim(w));
            int off = 0;
            for (const auto& blk : blocks) {
                for (int i = 0; i < blk.rows(); ++i)
                    for (int j = 0; j < blk.cols(); ++j) m.at(off + i, j) = blk.at(i, j);
                off += blk.rows();
            }
            cur[w] = kernel(m);
        }
        f.levels.push_back(flatten_graded(h, cur));
        prev = std::move(cur);
    }
    return f;
}

namespace coalg_detail {

// Per-weight bases of the powers (I^∨)^p of the augmentation ideal of the
// dual algebra, p = 1..max_power. powers[p][w] has rows = dual vectors in
// H_w^∨ coordinates.
inline std::vector<std::vector<Subspace>> dual_ideal_powers(const GradedHopf& h, int max_power) {
    const int N = h.truncation;
    std::vector<std::vector<Subspace>> powers(max_power + 1);

    powers[1].resize(N + 1);
    powers[1][0] = Subspace::zero(h.dim(0));
    for (int w = 1; w <= N; ++w) powers[1][w] = Subspace::full(h.dim(w));

    // convolution with a unit dual: (f · δ_{(b,j)})[m] over H_{a+b}
    auto right_mult = [&h](const Vec& f, int a, int b, int j) {
        Vec g(h.dim(a + b));
        for (int m = 0; m < h.dim(a + b); ++m)
            for (const auto& t : h.coproduct[a + b][m])
                if (t.w1 == a && t.w2 == b && t.i2 == j && !f[t.i1].is_zero())
                    g[m] += f[t.i1] * t.c;
        return g;
    };

    for (int p = 2; p <= max_power; ++p) {
        powers[p].resize(N + 1);
        for (int w = 0; w <= N; ++w) {
            std::vector<Vec> span;
            for (int b = 1; b < w; ++b) {
                const int a = w - b;
                const Subspace& fa = powers[p - 1][a];
                for (int i = 0; i < fa.dim(); ++i)
                    for (int j = 0; j < h.dim(b); ++j)
                        span.push_back(right_mult(fa.basis_vector(i), a, b, j));
            }
            powers[p][w] = Subspace::from_vectors(span, h.dim(w));
        }
    }
    return powers;
}

} // namespace coalg_detail

// Independent oracle: the annihilator formulation. Forms the dual algebra on
// the truncated space via convolution, takes powers of its augmentation
// ideal, and annihilates them under the basis pairing.
inline ConilFiltration conil_filtration_annihilator(const GradedHopf& h, int max_level) {
    using namespace coalg_detail;
    const int N = h.truncation;
    const auto powers = dual_ideal_powers(h, max_level + 1);

    ConilFiltration f{&h, {}};
    for (int n = 0; n <= max_level; ++n) {
        std::vector<Subspace> by_weight(N + 1);
        for (int w = 0; w <= N; ++w) {
            const Subspace& pw = powers[n + 1][w];
            // Ann under the pairing = null space of the power's basis rows
            by_weight[w] = kernel(pw.basis());
        }
        f.levels.push_back(flatten_graded(h, by_weight));
    }
    return f;
}

// Primitive elements {h in the augmentation ideal : Δ̄h = 0}, per weight.
inline std::vector<Subspace> primitives_by_weight(const GradedHopf& h) {
    std::vector<Subspace> out(h.truncation + 1);
    out[0] = Subspace::zero(h.dim(0));
    for (int w = 1; w <= h.truncation; ++w)
        out[w] = kernel(coalg_detail::delta_bar_matrix(h, w));
    return out;
}

inline Subspace primitives(const GradedHopf& h) {
    return coalg_detail::flatten_graded(h, primitives_by_weight(h));
}

// A canonical ordered basis of the primitives, remembering weights; this is
// the computational stand-in for Ext^1(1,1).
struct PrimitiveBasis {
    std::vector<int> weights;  // weight of each basis primitive
    std::vector<Vec> vectors;  // coordinates in H_{weight}
    int dim() const { return static_cast<int>(weights.size()); }
};

inline PrimitiveBasis primitive_basis(const GradedHopf& h) {
    PrimitiveBasis pb;
    const auto by_weight = primitives_by_weight(h);
    for (int w = 1; w <= h.truncation; ++w)
        for (int i = 0; i < by_weight[w].dim(); ++i) {
            pb.weights.push_back(w);
            pb.vectors.push_back(by_weight[w].basis_vector(i));
        }
    return pb;
}

// Cohomology of the reduced cobar complex k → H̄ → H̄⊗H̄ → H̄^⊗3 with
// d¹h = Δ̄h and d²(a⊗b) = Δ̄a⊗b − a⊗Δ̄b, reported weight by weight.
// Representatives are the canonical echelon complement of the coboundaries
// inside the cocycles; in degree 1 there are no coboundaries and H¹ is the
// primitive space.
struct CohomologyReport {
    int degree = 1;
    std::vector<int> dims;         // dims[w], w = 0..up_to_weight
    std::vector<Matrix> reps;      // canonical representatives, rows in C^degree_w coords
    std::vector<Subspace> cocycles;
    std::vector<Subspace> coboundaries;
};

namespace coalg_detail {

// Ordered compositions of w into `parts` positive weights.
inline std::vector<std::vector<int>> compositions(int w, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == parts - 1) {
            if (rem >= 1) {
                cur[pos] = rem;
                out.push_back(cur);
            }
            return;
        }
        for (int a = 1; rem - a >= parts - 1 - pos; ++a) {
            cur[pos] = a;
            self(self, pos + 1, rem - a);
        }
    };
    if (parts >= 1 && w >= parts) rec(rec, 0, w);
    return out;
}

inline int block_dim(const GradedHopf& h, const std::vector<int>& comp) {
    int d = 1;
    for (int a : comp) d *= h.dim(a);
    return d;
}

inline int cochain_dim(const GradedHopf& h, int w, int parts) {
    int total = 0;
    for (const auto& comp : compositions(w, parts)) total += block_dim(h, comp);
    return total;
}

// d²: ⊕_{a+b=w} I_a⊗I_b → ⊕_{a+b+c=w} I_a⊗I_b⊗I_c
inline Matrix cobar_d2(const GradedHopf& h, int w) {
    const auto c2 = compositions(w, 2);
    const auto c3 = compositions(w, 3);
    std::vector<int> off2(c2.size() + 1, 0), off3(c3.size() + 1, 0);
    for (size_t i = 0; i < c2.size(); ++i) off2[i + 1] = off2[i] + block_dim(h, c2[i]);
    for (size_t i = 0; i < c3.size(); ++i) off3[i + 1] = off3[i] + block_dim(h, c3[i]);
    auto idx3 = [&](int a, int b, int c) {
        for (size_t i = 0; i < c3.size(); ++i)
            if (c3[i][0] == a && c3[i][1] == b && c3[i][2] == c) return static_cast<int>(i);
        throw Error("cobar_d2: missing composition");
    };

    Matrix m(off3.back(), off2.back());
    for (size_t blk = 0; blk < c2.size(); ++blk) {
        const int a = c2[blk][0], b = c2[blk][1];
        // Δ̄a ⊗ id_b
        for (int a1 = 1; a1 < a; ++a1) {
            const int a2 = a - a1;
            const Matrix piece = kron(coproduct_block(h, a, a1), Matrix::identity(h.dim(b)));
            const int r0 = off3[idx3(a1, a2, b)];
            for (int i = 0; i < piece.rows(); ++i)
                for (int j = 0; j < piece.cols(); ++j)
                    if (!piece.at(i, j).is_zero())
                        m.at(r0 + i, off2[blk] + j) = m.at(r0 + i, off2[blk] + j) + piece.at(i, j);
        }
        // − id_a ⊗ Δ̄b
        for (int b1 = 1; b1 < b; ++b1) {
            const int b2 = b - b1;
            const Matrix piece = kron(Matrix::identity(h.dim(a)), coproduct_block(h, b, b1));
            const int r0 = off3[idx3(a, b1, b2)];
            for (int i = 0; i < piece.rows(); ++i)
                for (int j = 0; j < piece.cols(); ++j)
                    if (!piece.at(i, j).is_zero())
                        m.at(r0 + i, off2[blk] + j) = m.at(r0 + i, off2[blk] + j) - piece.at(i, j);
        }
    }
    return m;
}

} // namespace coalg_detail

inline CohomologyReport cobar_cohomology(const GradedHopf& h, int degree, int up_to_weight) {
    using namespace coalg_detail;
    if (degree != 1 && degree != 2)
        throw ValidationError("cobar_cohomology: degree must be 1 or 2");
    if (up_to_weight > h.truncation)
        throw TruncationError("cobar_cohomology: weight exceeds truncation");

    CohomologyReport rep;
    rep.degree = degree;
    for (int w = 0; w <= up_to_weight; ++w) {
        if (w == 0) {
            rep.dims.push_back(0);
            rep.reps.emplace_back(0, degree == 1 ? h.dim(0) : 0);
            rep.cocycles.push_back(Subspace::zero(degree == 1 ? 0 : 0));
            rep.coboundaries.push_back(Subspace::zero(degree == 1 ? 0 : 0));
            continue;
        }
        if (degree == 1) {
            const Subspace z = kernel(delta_bar_matrix(h, w));
            rep.dims.push_back(z.dim());
            rep.reps.push_back(z.basis());
            rep.cocycles.push_back(z);
            rep.coboundaries.push_back(Subspace::zero(h.dim(w)));
        } else {
            const Subspace z = kernel(cobar_d2(h, w));
            // image of d¹ = Δ̄ : I_w → C²_w
            const Subspace b = image(delta_bar_matrix(h, w));
            if (!z.contains(b))
                throw InternalConsistencyError("cobar: d² ∘ d¹ ≠ 0 at weight " + std::to_string(w));
            rep.dims.push_back(z.dim() - b.dim());
            rep.reps.push_back(echelon_complement(b, z));
            rep.cocycles.push_back(z);
            rep.coboundaries.push_back(b);
        }
    }
    return rep;
}

// Cup product of two degree-1 classes: [p]⊗[q] represented by the 2-cocycle
// p⊗q, expressed in the canonical H² representatives at weight wt p + wt q.
inline Vec cup_class(const GradedHopf& h, const CohomologyReport& h2,
                     int wp, const Vec& p, int wq, const Vec& q) {
    using namespace coalg_detail;
    const int w = wp + wq;
    if (w > h.truncation) throw TruncationError("cup_class: weight exceeds truncation");
    // coordinates of p⊗q in C²_w
    const auto c2 = compositions(w, 2);
    Vec cochain(cochain_dim(h, w, 2));
    int off = 0;
    for (const auto& comp : c2) {
        if (comp[0] == wp && comp[1] == wq) {
            const Vec kr = kron_vec(p, q);
            for (size_t i = 0; i < kr.size(); ++i) cochain[off + i] = kr[i];
        }
        off += block_dim(h, comp);
    }
    // express in span(coboundaries ∪ reps); the class is the reps part
    const Matrix& reps = h2.reps[w];
    const Subspace& bnd = h2.coboundaries[w];
    Matrix gens = stack_rows(bnd.basis(), reps);
    const auto coords = solve_unique(gens.transpose(), cochain);
    if (!coords)
        throw InternalConsistencyError("cup_class: product of cocycles is not a cocycle");
    Vec cls(reps.rows());
    for (int i = 0; i < reps.rows(); ++i) cls[i] = (*coords)[bnd.dim() + i];
    return cls;
}

// Checks C_n(Hsub) = C_n(Hamb) ∩ Hsub along an injective coalgebra embedding
// of truncated Hopf algebras, level by level.
struct ConilIntersectionReport {
    bool ok = true;
    int first_bad_level = -1;
    std::string detail;
};

inline ConilIntersectionReport conil_intersection_check(const GradedHopf& hsub,
                                                        const GradedHopf& hamb,
                                                        const Matrix& embedding, int max_level) {
    if (embedding.rows() != hamb.total_dim() || embedding.cols() != hsub.total_dim())
        throw DimensionError("conil_intersection_check: embedding shape mismatch");
    if (rank(embedding) != hsub.total_dim())
        throw ValidationError("conil_intersection_check: embedding not injective");

    // coalgebra compatibility: Δ_amb(E e) = (E⊗E)(Δ_sub e) on every basis element
    for (int w = 0; w <= hsub.truncation; ++w)
        for (int i = 0; i < hsub.dim(w); ++i) {
            const Vec col = mat_vec(embedding, elem_to_vec(hsub, basis_elem(w, i)));
            const TensorElem lhs = comultiply(hamb, vec_to_elem(hamb, col));
            TensorElem rhs;
            for (const auto& t : hsub.coproduct[w][i]) {
                const Vec l = mat_vec(embedding, elem_to_vec(hsub, basis_elem(t.w1, t.i1)));
                const Vec r = mat_vec(embedding, elem_to_vec(hsub, basis_elem(t.w2, t.i2)));
                const HopfElem le = vec_to_elem(hamb, l), re = vec_to_elem(hamb, r);
                for (const auto& [kl, cl] : le)
                    for (const auto& [kr, cr] : re)
                        tensor_add(rhs, kl.first, kl.second, kr.first, kr.second, t.c * cl * cr);
            }
            if (lhs != rhs)
                throw ValidationError("conil_intersection_check: embedding is not a coalgebra map at " +
                                      hsub.labels[w][i]);
        }

    const ConilFiltration fsub = conil_filtration(hsub, max_level);
    const ConilFiltration famb = conil_filtration(hamb, max_level);
    const Subspace img = image(embedding);

    for (int n = 0; n <= max_level; ++n) {
        std::vector<Vec> pushed;
        for (int i = 0; i < fsub.levels[n].dim(); ++i)
            pushed.push_back(mat_vec(embedding, fsub.levels[n].basis_vector(i)));
        const Subspace lhs = Subspace::from_vectors(pushed, hamb.total_dim());
        const Subspace rhs = intersect(famb.levels[n], img);
        if (lhs != rhs)
            return {false, n,
                    "C_" + std::to_string(n) + ": pushed dim " + std::to_string(lhs.dim()) +
                        " vs intersection dim " + std::to_string(rhs.dim())};
    }
    return {};
}

// A generating set of the augmentation ideal of the truncated dual algebra:
// per weight, a complement of (I^∨)² inside H_w^∨, returned as dense vectors
// over the flattened dual. A comodule map needs to intertwine only these.
inline std::vector<Vec> dual_algebra_generators(const GradedHopf& h) {
    const auto powers = coalg_detail::dual_ideal_powers(h, 2);
    std::vector<Vec> gens;
    for (int w = 1; w <= h.truncation; ++w) {
        const Matrix comp = echelon_complement(powers[2][w], Subspace::full(h.dim(w)));
        for (int i = 0; i < comp.rows(); ++i) {
            Vec g(h.total_dim());
            for (int j = 0; j < h.dim(w); ++j) g[h.offset(w) + j] = comp.at(i, j);
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

} // namespace unihopf
