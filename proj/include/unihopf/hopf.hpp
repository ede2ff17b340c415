#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "unihopf/subspace.hpp"

namespace unihopf {

// Sparse linear combination over the basis of a GradedHopf, keyed by
// (weight, index within weight).
using HopfElem = std::map<std::pair<int, int>, Rational>;

inline void elem_add(HopfElem& e, int w, int i, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(w, i);
    auto it = e.find(key);
    if (it == e.end()) {
        e.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

// One term of a coproduct: c · (left basis element) ⊗ (right basis element).
struct TensorTerm {
    int w1, i1, w2, i2;
    Rational c;
};

// Formal sum of tensor pairs, keyed by ((w1,i1),(w2,i2)).
using TensorElem = std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Rational>;

inline void tensor_add(TensorElem& t, int w1, int i1, int w2, int i2, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(std::make_pair(w1, i1), std::make_pair(w2, i2));
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

// Weight-truncated connected graded Hopf algebra given by structure-constant
// tables. Weight 0 is the single unit label "1"; the counit is projection to
// weight 0 and the unit is the weight-0 basis element, so neither needs a
// table. Product tables exist for every pair of positive weights a,b with
// a+b <= truncation; the coproduct and antipode are weight-homogeneous.
//
// Tables are plain data on purpose: the same container carries the shuffle
// algebra, its quadratic sub-Hopf algebras, and the Heisenberg coordinate
// ring, and the axiom checker can grind through all of them mechanically.
struct GradedHopf {
    int truncation = 0;
    std::vector<std::vector<std::string>> labels; // labels[w][i]

    // product[{a,b}][i][j] = sparse expansion of e_{a,i} * e_{b,j} at weight a+b
    std::map<std::pair<int, int>, std::vector<std::vector<std::vector<std::pair<int, Rational>>>>> product;
    // coproduct[w][i] = full Δ(e_{w,i}) including the 1⊗x and x⊗1 terms
    std::vector<std::vector<std::vector<TensorTerm>>> coproduct;
    // antipode[w][i] = sparse weight-w expansion of S(e_{w,i})
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> antipode;

    int dim(int w) const {
        return (w >= 0 && w <= truncation) ? static_cast<int>(labels[w].size()) : 0;
    }
    int total_dim() const {
        int t = 0;
        for (int w = 0; w <= truncation; ++w) t += dim(w);
        return t;
    }
    int offset(int w) const {
        int t = 0;
        for (int v = 0; v < w; ++v) t += dim(v);
        return t;
    }
    // Global index of basis element (w,i) in the flattened truncated space.
    int flat(int w, int i) const { return offset(w) + i; }
    std::pair<int, int> unflat(int g) const {
        for (int w = 0; w <= truncation; ++w) {
            if (g < dim(w)) return {w, g};
            g -= dim(w);
        }
        throw DimensionError("GradedHopf::unflat: index out of range");
    }

    friend bool operator==(const GradedHopf& a, const GradedHopf& b) {
        return a.truncation == b.truncation && a.labels == b.labels &&
               structure_equal(a, b);
    }

    // Table equality ignoring labels.
    friend bool structure_equal(const GradedHopf& a, const GradedHopf& b) {
        if (a.truncation != b.truncation) return false;
        for (int w = 0; w <= a.truncation; ++w)
            if (a.dim(w) != b.dim(w)) return false;
        return a.product == b.product && coproducts_equal(a, b) && a.antipode == b.antipode;
    }

private:
    static bool coproducts_equal(const GradedHopf& a, const GradedHopf& b) {
        for (int w = 0; w <= a.truncation; ++w)
            for (int i = 0; i < a.dim(w); ++i) {
                TensorElem ta, tb;
                for (const auto& t : a.coproduct[w][i]) tensor_add(ta, t.w1, t.i1, t.w2, t.i2, t.c);
                for (const auto& t : b.coproduct[w][i]) tensor_add(tb, t.w1, t.i1, t.w2, t.i2, t.c);
                if (ta != tb) return false;
            }
        return true;
    }
};

inline HopfElem basis_elem(int w, int i) { return HopfElem{{{w, i}, Rational(1)}}; }

// Product of two basis elements, as a HopfElem at weight a+b.
inline HopfElem multiply_basis(const GradedHopf& h, int a, int i, int b, int j) {
    if (a + b > h.truncation)
        throw TruncationError("multiply: weight " + std::to_string(a + b) + " exceeds truncation " +
                              std::to_string(h.truncation));
    if (a == 0) return basis_elem(b, j);
    if (b == 0) return basis_elem(a, i);
    HopfElem out;
    const auto& table = h.product.at({a, b});
    for (const auto& [k, c] : table[i][j]) elem_add(out, a + b, k, c);
    return out;
}

// Bilinear extension of the product table. Raises TruncationError when a
// pair of terms would land beyond the truncation weight.
inline HopfElem multiply(const GradedHopf& h, const HopfElem& x, const HopfElem& y) {
    HopfElem out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            const HopfElem p = multiply_basis(h, kx.first, kx.second, ky.first, ky.second);
            const Rational c = cx * cy;
            for (const auto& [kp, cp] : p) elem_add(out, kp.first, kp.second, c * cp);
        }
    return out;
}

inline TensorElem comultiply_basis(const GradedHopf& h, int w, int i) {
    TensorElem out;
    for (const auto& t : h.coproduct[w][i]) tensor_add(out, t.w1, t.i1, t.w2, t.i2, t.c);
    return out;
}

inline TensorElem comultiply(const GradedHopf& h, const HopfElem& x) {
    TensorElem out;
    for (const auto& [k, c] : x)
        for (const auto& t : h.coproduct[k.first][k.second])
            tensor_add(out, t.w1, t.i1, t.w2, t.i2, c * t.c);
    return out;
}

inline HopfElem antipode_apply(const GradedHopf& h, const HopfElem& x) {
    HopfElem out;
    for (const auto& [k, c] : x)
        for (const auto& [j, s] : h.antipode[k.first][k.second])
            elem_add(out, k.first, j, c * s);
    return out;
}

inline Rational counit(const HopfElem& x) {
    auto it = x.find({0, 0});
    return it == x.end() ? Rational(0) : it->second;
}

// Dense coordinates on the flattened truncated space.
inline Vec elem_to_vec(const GradedHopf& h, const HopfElem& x) {
    Vec v(h.total_dim());
    for (const auto& [k, c] : x) v[h.flat(k.first, k.second)] = c;
    return v;
}

inline HopfElem vec_to_elem(const GradedHopf& h, const Vec& v) {
    HopfElem e;
    for (int g = 0; g < static_cast<int>(v.size()); ++g) {
        if (v[g].is_zero()) continue;
        const auto [w, i] = h.unflat(g);
        elem_add(e, w, i, v[g]);
    }
    return e;
}

// Outcome of the mechanical axiom check: either everything holds up to the
// truncation weight, or the first failing identity with its witness.
struct HopfCheckResult {
    bool ok = true;
    std::string axiom;      // e.g. "antipode", "associativity"
    std::string witness;    // human-readable witness description
    int witness_weight = -1; // total weight of the failing tuple

    static HopfCheckResult pass() { return {}; }
    static HopfCheckResult fail(std::string ax, std::string wit, int w) {
        return {false, std::move(ax), std::move(wit), w};
    }
};

namespace detail {

// Product on H⊗H: (a⊗b)(c⊗d) = ac ⊗ bd, used by the bialgebra check.
inline TensorElem tensor_multiply(const GradedHopf& h, const TensorElem& x, const TensorElem& y) {
    TensorElem out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            const HopfElem left = multiply_basis(h, kx.first.first, kx.first.second,
                                                 ky.first.first, ky.first.second);
            const HopfElem right = multiply_basis(h, kx.second.first, kx.second.second,
                                                  ky.second.first, ky.second.second);
            const Rational c = cx * cy;
            for (const auto& [kl, cl] : left)
                for (const auto& [kr, cr] : right)
                    tensor_add(out, kl.first, kl.second, kr.first, kr.second, c * cl * cr);
        }
    return out;
}

inline HopfElem antipode_convolution(const GradedHopf& h, int w, int i, bool s_on_left) {
    // m(S⊗id)Δ or m(id⊗S)Δ on a basis element.
    HopfElem out;
    for (const auto& t : h.coproduct[w][i]) {
        HopfElem l = basis_elem(t.w1, t.i1), r = basis_elem(t.w2, t.i2);
        if (s_on_left) l = antipode_apply(h, l); else r = antipode_apply(h, r);
        const HopfElem p = multiply(h, l, r);
        for (const auto& [k, c] : p) elem_add(out, k.first, k.second, t.c * c);
    }
    return out;
}

} // namespace detail

// Verifies, on all basis pairs/triples within the truncation: associativity,
// commutativity, unit, coassociativity, counit, the bialgebra law
// Δ(xy) = Δ(x)Δ(y), and both antipode identities m(S⊗id)Δ = ηε = m(id⊗S)Δ.
// Failures are reported, never thrown.
inline HopfCheckResult check_hopf_axioms(const GradedHopf& h) {
    const int N = h.truncation;
    if (h.dim(0) != 1)
        return HopfCheckResult::fail("connectedness", "weight-0 component has dim " + std::to_string(h.dim(0)), 0);

    // unit law on every basis element
    for (int w = 0; w <= N; ++w)
        for (int i = 0; i < h.dim(w); ++i) {
            if (multiply_basis(h, 0, 0, w, i) != basis_elem(w, i))
                return HopfCheckResult::fail("unit", "1*" + h.labels[w][i], w);
            if (multiply_basis(h, w, i, 0, 0) != basis_elem(w, i))
                return HopfCheckResult::fail("unit", h.labels[w][i] + "*1", w);
        }

    // commutativity and bialgebra compatibility on pairs
    for (int a = 1; a <= N; ++a)
        for (int b = a; a + b <= N; ++b)
            for (int i = 0; i < h.dim(a); ++i)
                for (int j = 0; j < h.dim(b); ++j) {
                    const HopfElem xy = multiply_basis(h, a, i, b, j);
                    if (xy != multiply_basis(h, b, j, a, i))
                        return HopfCheckResult::fail(
                            "commutativity", h.labels[a][i] + "*" + h.labels[b][j], a + b);
                    const TensorElem lhs = comultiply(h, xy);
                    const TensorElem rhs = detail::tensor_multiply(
                        h, comultiply_basis(h, a, i), comultiply_basis(h, b, j));
                    if (lhs != rhs)
                        return HopfCheckResult::fail(
                            "bialgebra", "Δ(" + h.labels[a][i] + "*" + h.labels[b][j] + ")", a + b);
                }

    // associativity on triples
    for (int a = 1; a <= N; ++a)
        for (int b = 1; a + b <= N; ++b)
            for (int c = 1; a + b + c <= N; ++c)
                for (int i = 0; i < h.dim(a); ++i)
                    for (int j = 0; j < h.dim(b); ++j)
                        for (int k = 0; k < h.dim(c); ++k) {
                            const HopfElem l =
                                multiply(h, multiply_basis(h, a, i, b, j), basis_elem(c, k));
                            const HopfElem r =
                                multiply(h, basis_elem(a, i), multiply_basis(h, b, j, c, k));
                            if (l != r)
                                return HopfCheckResult::fail(
                                    "associativity",
                                    h.labels[a][i] + "*" + h.labels[b][j] + "*" + h.labels[c][k],
                                    a + b + c);
                        }

    // coassociativity, counit, antipode on every basis element
    for (int w = 0; w <= N; ++w)
        for (int i = 0; i < h.dim(w); ++i) {
            // (Δ⊗id)Δ vs (id⊗Δ)Δ as triple sums
            std::map<std::tuple<int, int, int, int, int, int>, Rational> lhs, rhs;
            for (const auto& t : h.coproduct[w][i]) {
                for (const auto& u : h.coproduct[t.w1][t.i1]) {
                    auto key = std::make_tuple(u.w1, u.i1, u.w2, u.i2, t.w2, t.i2);
                    auto& v = lhs[key];
                    v += t.c * u.c;
                    if (v.is_zero()) lhs.erase(key);
                }
                for (const auto& u : h.coproduct[t.w2][t.i2]) {
                    auto key = std::make_tuple(t.w1, t.i1, u.w1, u.i1, u.w2, u.i2);
                    auto& v = rhs[key];
                    v += t.c * u.c;
                    if (v.is_zero()) rhs.erase(key);
                }
            }
            if (lhs != rhs)
                return HopfCheckResult::fail("coassociativity", h.labels[w][i], w);

            // (ε⊗id)Δ = id = (id⊗ε)Δ, and weight homogeneity of Δ
            HopfElem left, right;
            for (const auto& t : h.coproduct[w][i]) {
                if (t.w1 + t.w2 != w)
                    return HopfCheckResult::fail("coproduct grading", h.labels[w][i], w);
                if (t.w1 == 0) elem_add(left, t.w2, t.i2, t.c);
                if (t.w2 == 0) elem_add(right, t.w1, t.i1, t.c);
            }
            if (left != basis_elem(w, i))
                return HopfCheckResult::fail("counit-left", h.labels[w][i], w);
            if (right != basis_elem(w, i))
                return HopfCheckResult::fail("counit-right", h.labels[w][i], w);

            const HopfElem eta_eps = w == 0 ? basis_elem(0, 0) : HopfElem{};
            if (detail::antipode_convolution(h, w, i, true) != eta_eps)
                return HopfCheckResult::fail("antipode", "m(S⊗id)Δ(" + h.labels[w][i] + ")", w);
            if (detail::antipode_convolution(h, w, i, false) != eta_eps)
                return HopfCheckResult::fail("antipode", "m(id⊗S)Δ(" + h.labels[w][i] + ")", w);
        }

    return HopfCheckResult::pass();
}

} // namespace unihopf
