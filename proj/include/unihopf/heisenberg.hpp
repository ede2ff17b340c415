#pragma once

#include "unihopf/hopf.hpp"

namespace unihopf {

// Coordinate Hopf algebra of the group of 3x3 upper unipotent matrices
// [[1,a,c],[0,1,b],[0,0,1]], with coordinates x,y,z reading off a,b,c.
// The group law (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab') gives
//   Δx = x⊗1+1⊗x, Δy = y⊗1+1⊗y, Δz = z⊗1+1⊗z+x⊗y,
// and the inverse (-a,-b,-c+ab) gives S(z) = -z+xy. Grading wt(x)=wt(y)=1,
// wt(z)=2 makes Δ homogeneous, so the ring truncates by weight like every
// other GradedHopf here. Basis at weight w: monomials x^a y^b z^c with
// a+b+2c = w, ordered by (c asc, a desc).
namespace heisenberg_detail {

struct Mono {
    int a, b, c; // exponents of x, y, z
    int weight() const { return a + b + 2 * c; }
    friend bool operator==(const Mono& p, const Mono& q) {
        return p.a == q.a && p.b == q.b && p.c == q.c;
    }
};

inline std::vector<Mono> monomials_of_weight(int w) {
    std::vector<Mono> out;
    for (int c = 0; 2 * c <= w; ++c)
        for (int a = w - 2 * c; a >= 0; --a) out.push_back({a, w - 2 * c - a, c});
    return out;
}

inline int mono_index(const Mono& m) {
    const auto all = monomials_of_weight(m.weight());
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == m) return static_cast<int>(i);
    throw Error("heisenberg: monomial not found");
}

inline std::string mono_label(const Mono& m) {
    std::string s;
    auto emit = [&s](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    emit("x", m.a);
    emit("y", m.b);
    emit("z", m.c);
    return s.empty() ? "1" : s;
}

inline Rational binom(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

inline Rational trinom(int n, int p, int q, int r) {
    // n! / (p! q! r!), with p+q+r = n
    return binom(n, p) * binom(n - p, q) * (p + q + r == n ? Rational(1) : Rational(0));
}

} // namespace heisenberg_detail

inline GradedHopf build_heisenberg_hopf(int N) {
    using namespace heisenberg_detail;
    if (N < 0) throw ValidationError("build_heisenberg_hopf: negative truncation");
    GradedHopf h;
    h.truncation = N;
    h.labels.resize(N + 1);
    h.coproduct.resize(N + 1);
    h.antipode.resize(N + 1);

    std::vector<std::vector<Mono>> basis(N + 1);
    for (int w = 0; w <= N; ++w) {
        basis[w] = monomials_of_weight(w);
        for (const auto& m : basis[w]) h.labels[w].push_back(mono_label(m));
    }

    // product: polynomial multiplication
    for (int a = 1; a <= N; ++a)
        for (int b = 1; a + b <= N; ++b) {
            auto& table = h.product[{a, b}];
            table.resize(basis[a].size());
            for (size_t i = 0; i < basis[a].size(); ++i) {
                table[i].resize(basis[b].size());
                for (size_t j = 0; j < basis[b].size(); ++j) {
                    const Mono p{basis[a][i].a + basis[b][j].a, basis[a][i].b + basis[b][j].b,
                                 basis[a][i].c + basis[b][j].c};
                    table[i][j].emplace_back(mono_index(p), Rational(1));
                }
            }
        }

    // coproduct: Δ(x^a y^b z^c) expands (x⊗1+1⊗x)^a (y⊗1+1⊗y)^b (z⊗1+1⊗z+x⊗y)^c.
    // The (x⊗y)^r term of the z-factor contributes x^r on the left and y^r on
    // the right, which is what encodes c'' = c+c'+ab' at the coalgebra level.
    for (int w = 0; w <= N; ++w) {
        h.coproduct[w].resize(basis[w].size());
        h.antipode[w].resize(basis[w].size());
        for (size_t idx = 0; idx < basis[w].size(); ++idx) {
            const Mono& m = basis[w][idx];
            for (int i = 0; i <= m.a; ++i)
                for (int j = 0; j <= m.b; ++j)
                    for (int p = 0; p <= m.c; ++p)
                        for (int q = 0; p + q <= m.c; ++q) {
                            const int r = m.c - p - q;
                            const Rational coeff =
                                binom(m.a, i) * binom(m.b, j) * trinom(m.c, p, q, r);
                            const Mono left{i + r, j, p};
                            const Mono right{m.a - i, m.b - j + r, q};
                            h.coproduct[w][idx].push_back({left.weight(), mono_index(left),
                                                           right.weight(), mono_index(right),
                                                           coeff});
                        }

            // antipode from the group inverse: S(x^a y^b z^c) = (-1)^{a+b} x^a y^b (xy-z)^c
            for (int k = 0; k <= m.c; ++k) {
                const Rational sign(((m.a + m.b + m.c - k) % 2 == 0) ? 1 : -1);
                const Mono t{m.a + k, m.b + k, m.c - k};
                h.antipode[w][idx].emplace_back(mono_index(t), sign * binom(m.c, k));
            }
        }
    }
    return h;
}

} // namespace unihopf
