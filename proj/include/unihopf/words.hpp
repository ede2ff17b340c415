#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "unihopf/matrix.hpp"

namespace unihopf {

// Basis word of V^{⊗n}: a sequence of letters. Letters are 0-based in memory
// and 1-based wherever they are printed or parsed, matching the usual
// x_1,...,x_d notation. The empty word is the weight-0 basis element.
struct Word {
    std::vector<int> letters; // each in [0, d)

    int weight() const { return static_cast<int>(letters.size()); }

    static Word empty() { return Word{}; }

    // Build from 1-based letters.
    static Word from_letters1(std::initializer_list<int> ls) {
        Word w;
        for (int l : ls) w.letters.push_back(l - 1);
        return w;
    }

    Word prefix(int k) const {
        Word w;
        w.letters.assign(letters.begin(), letters.begin() + k);
        return w;
    }
    Word suffix(int k) const { // last k letters
        Word w;
        w.letters.assign(letters.end() - k, letters.end());
        return w;
    }
    Word reversed() const {
        Word w = *this;
        std::reverse(w.letters.begin(), w.letters.end());
        return w;
    }

    friend Word concat(const Word& a, const Word& b) {
        Word w = a;
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }

    // Order: weight first, then lexicographic. This matches the
    // enumerate_words ordering within each weight.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.letters < b.letters;
    }
    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < letters.size(); ++i) {
            if (i) s += '.';
            s += std::to_string(letters[i] + 1);
        }
        return s.empty() ? "1" : s;
    }
};

// All d^n words of weight n in lexicographic order (letter 1 smallest).
inline std::vector<Word> enumerate_words(int d, int n) {
    if (d < 0 || n < 0) throw ValidationError("enumerate_words: negative argument");
    std::vector<Word> out;
    if (n == 0) {
        out.push_back(Word::empty());
        return out;
    }
    if (d == 0) return out;
    Word w;
    w.letters.assign(n, 0);
    while (true) {
        out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w.letters[i] == d - 1) {
            w.letters[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++w.letters[i];
    }
    return out;
}

// Position of w in enumerate_words(d, weight(w)): the mixed-radix value of
// its 0-based letters.
inline int word_index(const Word& w, int d) {
    int idx = 0;
    for (int l : w.letters) {
        if (l < 0 || l >= d) throw ValidationError("word_index: letter out of range");
        idx = idx * d + l;
    }
    return idx;
}

// Finite rational combination of words over a fixed alphabet; weights may be
// mixed (Hopf operations produce mixed sums), components are recovered by
// filtering on word length. Zero coefficients are never stored.
struct GradedVector {
    int alphabet_size = 0;
    std::map<Word, Rational> terms;

    void add(const Word& w, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    GradedVector weight_component(int n) const {
        GradedVector g{alphabet_size, {}};
        for (const auto& [w, c] : terms)
            if (w.weight() == n) g.terms.emplace(w, c);
        return g;
    }

    // Dense coordinates of the weight-n component in enumerate_words order.
    Vec component_coords(int n) const {
        int dim = 1;
        for (int i = 0; i < n; ++i) dim *= alphabet_size;
        if (n > 0 && alphabet_size == 0) dim = 0;
        Vec v(dim);
        for (const auto& [w, c] : terms)
            if (w.weight() == n) v[word_index(w, alphabet_size)] = c;
        return v;
    }

    friend bool operator==(const GradedVector& a, const GradedVector& b) {
        return a.alphabet_size == b.alphabet_size && a.terms == b.terms;
    }
};

// The (m,n)-shuffles: permutations s of {0,...,m+n-1} with
// s(0)<...<s(m-1) and s(m)<...<s(m+n-1). s[i] is the target slot of input
// slot i. Exactly C(m+n, m) of them.
inline std::vector<std::vector<int>> shuffle_set(int m, int n) {
    if (m < 0 || n < 0) throw ValidationError("shuffle_set: negative weight");
    std::vector<std::vector<int>> out;
    const int t = m + n;
    std::vector<int> pick(m); // target slots of the first factor, increasing
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<int> s(t);
        std::vector<bool> used(t, false);
        for (int i = 0; i < m; ++i) {
            s[i] = pick[i];
            used[pick[i]] = true;
        }
        int q = 0;
        for (int i = 0; i < t; ++i)
            if (!used[i]) s[m + q++] = i;
        out.push_back(std::move(s));
        if (m == 0) break;
        int i = m - 1;
        while (i >= 0 && pick[i] == t - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// Shuffle product of two words: sum over all interleavings preserving the
// relative order of each factor's letters.
inline GradedVector shuffle_words(const Word& a, const Word& b, int d) {
    GradedVector out{d, {}};
    const int m = a.weight(), n = b.weight();
    for (const auto& s : shuffle_set(m, n)) {
        Word w;
        w.letters.assign(m + n, 0);
        for (int i = 0; i < m; ++i) w.letters[s[i]] = a.letters[i];
        for (int i = 0; i < n; ++i) w.letters[s[m + i]] = b.letters[i];
        out.add(w, Rational(1));
    }
    return out;
}

} // namespace unihopf
