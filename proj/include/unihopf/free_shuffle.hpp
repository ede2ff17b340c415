#pragma once

#include "unihopf/hopf.hpp"
#include "unihopf/words.hpp"

namespace unihopf {

// The free shuffle Hopf algebra H(V) on a d-dimensional space, truncated at
// weight N: weight-n basis is the d^n words of length n, the product is the
// shuffle product, the coproduct is deconcatenation, and the antipode is
// signed reversal S(x_1⊗...⊗x_n) = (-1)^n x_n⊗...⊗x_1. The sign is forced
// by the antipode axiom already at weight 1 (m(S⊗id)Δ(x) = S(x)+x must
// vanish); unsigned reversal fails, which a regression test pins down.
// This is the coordinate Hopf algebra of the pro-unipotent completion of the
// free group on d generators.
inline GradedHopf build_free_shuffle_hopf(int d, int N) {
    if (d < 0 || N < 0) throw ValidationError("build_free_shuffle_hopf: negative argument");
    GradedHopf h;
    h.truncation = N;
    h.labels.resize(N + 1);
    h.coproduct.resize(N + 1);
    h.antipode.resize(N + 1);

    std::vector<std::vector<Word>> words(N + 1);
    for (int w = 0; w <= N; ++w) {
        words[w] = enumerate_words(d, w);
        for (const auto& word : words[w]) h.labels[w].push_back(word.str());
        h.labels[0] = {"1"};
    }

    for (int a = 1; a <= N; ++a)
        for (int b = 1; a + b <= N; ++b) {
            auto& table = h.product[{a, b}];
            table.resize(words[a].size());
            for (size_t i = 0; i < words[a].size(); ++i) {
                table[i].resize(words[b].size());
                for (size_t j = 0; j < words[b].size(); ++j) {
                    const GradedVector prod = shuffle_words(words[a][i], words[b][j], d);
                    for (const auto& [w, c] : prod.terms)
                        table[i][j].emplace_back(word_index(w, d), c);
                }
            }
        }

    for (int w = 0; w <= N; ++w) {
        h.coproduct[w].resize(words[w].size());
        h.antipode[w].resize(words[w].size());
        for (size_t i = 0; i < words[w].size(); ++i) {
            const Word& word = words[w][i];
            for (int cut = 0; cut <= w; ++cut)
                h.coproduct[w][i].push_back({cut, word_index(word.prefix(cut), d),
                                             w - cut, word_index(word.suffix(w - cut), d),
                                             Rational(1)});
            const Rational sign = (w % 2 == 0) ? Rational(1) : Rational(-1);
            h.antipode[w][i].emplace_back(word_index(word.reversed(), d), sign);
        }
    }
    return h;
}

// The same tables with the unsigned reversal antipode. Not a Hopf algebra:
// kept only so the sign regression can be asserted.
inline GradedHopf build_free_shuffle_hopf_unsigned_antipode(int d, int N) {
    GradedHopf h = build_free_shuffle_hopf(d, N);
    for (int w = 1; w <= h.truncation; w += 2)
        for (auto& row : h.antipode[w])
            for (auto& [j, c] : row) c = -c;
    return h;
}

} // namespace unihopf
