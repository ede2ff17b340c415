#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "unihopf/positional.hpp"
#include "unihopf/words.hpp"

using namespace unihopf;

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

bool is_shuffle(const std::vector<int>& s, int m) {
    const int t = static_cast<int>(s.size());
    for (int i = 1; i < m; ++i)
        if (s[i - 1] >= s[i]) return false;
    for (int i = m + 1; i < t; ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

} // namespace

TEST_CASE("enumerate_words", "[tensorspace]") {
    const auto w0 = enumerate_words(2, 0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].weight() == 0);

    const auto w2 = enumerate_words(2, 2);
    REQUIRE(w2.size() == 4);
    CHECK(w2[0] == Word::from_letters1({1, 1}));
    CHECK(w2[1] == Word::from_letters1({1, 2}));
    CHECK(w2[2] == Word::from_letters1({2, 1}));
    CHECK(w2[3] == Word::from_letters1({2, 2}));

    // d=3, n=3: 27 words; the position of 213 is its mixed-radix value.
    const auto w3 = enumerate_words(3, 3);
    REQUIRE(w3.size() == 27);
    const Word w213 = Word::from_letters1({2, 1, 3});
    int mixed_radix = 0;
    for (int l : w213.letters) mixed_radix = mixed_radix * 3 + l; // 0-based digits
    CHECK(mixed_radix == 11);
    CHECK(word_index(w213, 3) == mixed_radix);
    CHECK(w3[mixed_radix] == w213);

    CHECK(enumerate_words(0, 2).empty());
}

TEST_CASE("word index round-trips", "[tensorspace]") {
    for (int d = 1; d <= 3; ++d)
        for (int n = 0; n <= 5; ++n) {
            const auto words = enumerate_words(d, n);
            for (size_t i = 0; i < words.size(); ++i)
                CHECK(word_index(words[i], d) == static_cast<int>(i));
        }
}

TEST_CASE("shuffle_set small cases", "[tensorspace]") {
    CHECK(shuffle_set(1, 1).size() == 2);
    CHECK(shuffle_set(2, 1).size() == 3);

    // (2,2): six shuffles, equal as a set to the brute-force filter over all 24
    const auto got = shuffle_set(2, 2);
    REQUIRE(got.size() == 6);
    std::vector<std::vector<int>> expect;
    std::vector<int> perm{0, 1, 2, 3};
    do {
        if (is_shuffle(perm, 2)) expect.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(expect.size() == 6);
    auto sorted_got = got;
    std::sort(sorted_got.begin(), sorted_got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(sorted_got == expect);
}

TEST_CASE("shuffle_set cardinality is binomial", "[tensorspace]") {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; m + n <= 8; ++n) {
            const auto s = shuffle_set(m, n);
            CHECK(static_cast<long>(s.size()) == binomial(m + n, m));
            for (const auto& perm : s) CHECK(is_shuffle(perm, m));
        }
}

TEST_CASE("induced_positional_map identity and zero", "[tensorspace]") {
    const int d = 2;
    CHECK(induced_positional_map(Matrix::identity(d * d), 1, 1, d) == Matrix::identity(16));
    CHECK(induced_positional_map(Matrix(3, d * d), 2, 0, d).is_zero());
    CHECK_THROWS_AS(induced_positional_map(Matrix(1, 3), 0, 0, 2), DimensionError);
}

TEST_CASE("induced_positional_map quotient example", "[tensorspace]") {
    // d=2, M = quotient by span{11, 22, 12+21}: rank-1 target, matrix (0,-1,1,0)
    // up to scale; here M(e_p⊗e_q) pairs against the antisymmetric functional.
    Matrix m(1, 4);
    m.at(0, 1) = Rational(-1);
    m.at(0, 2) = Rational(1);
    const Matrix big = induced_positional_map(m, 1, 0, 2);
    CHECK(big.rows() == 2);
    CHECK(big.cols() == 8);
    CHECK(kernel(big).dim() == 6);

    // word-by-word evaluation oracle: id⊗M on u⊗p⊗q = u⊗M(p⊗q)
    const auto words = enumerate_words(2, 3);
    for (size_t c = 0; c < words.size(); ++c) {
        const auto& w = words[c];
        const int u = w.letters[0], p = w.letters[1], q = w.letters[2];
        for (int row = 0; row < 2; ++row) {
            const Rational expected = (row == u) ? m.at(0, p * 2 + q) : Rational(0);
            CHECK(big.at(row, static_cast<int>(c)) == expected);
        }
    }
}

TEST_CASE("induced_positional_map distributes over composition", "[tensorspace]") {
    std::mt19937_64 rng(77);
    const int d = 2;
    for (int rep = 0; rep < 4; ++rep) {
        Matrix mm(2, 4), nn(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) mm.at(i, j) = Rational(rand_int(rng, -2, 2));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) nn.at(i, j) = Rational(rand_int(rng, -2, 2));
        const int k = rand_int(rng, 0, 1), l = rand_int(rng, 0, 1);
        CHECK(induced_positional_map(mm * nn, k, l, d) ==
              induced_positional_map(mm, k, l, d) * induced_positional_map(nn, k, l, d));
    }
}

TEST_CASE("restrict_map basics", "[tensorspace]") {
    std::mt19937_64 rng(41);
    Matrix b(2, 5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 5; ++j) b.at(i, j) = Rational(rand_int(rng, -3, 3));
    const Subspace s = Subspace::from_rows(b);

    CHECK(restrict_map(Matrix::identity(5), s, s) == Matrix::identity(s.dim()));
    CHECK(restrict_map(Matrix::identity(5), Subspace::zero(5), s).cols() == 0);
}

TEST_CASE("restrict_map recomposition oracle", "[tensorspace]") {
    std::mt19937_64 rng(4242);
    for (int rep = 0; rep < 4; ++rep) {
        Matrix m(4, 6);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 6; ++j) m.at(i, j) = Rational(rand_int(rng, -2, 2));
        Matrix srows(2, 6);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 6; ++j) srows.at(i, j) = Rational(rand_int(rng, -2, 2));
        const Subspace source = Subspace::from_rows(srows);
        // target = image of M on source, so containment holds by construction
        std::vector<Vec> imgs;
        for (int i = 0; i < source.dim(); ++i) imgs.push_back(mat_vec(m, source.basis_vector(i)));
        const Subspace target = Subspace::from_vectors(imgs, 4);
        const Matrix r = restrict_map(m, source, target);
        // recomposition: inclusion(target) ∘ r = M ∘ inclusion(source) on basis vectors
        for (int j = 0; j < source.dim(); ++j) {
            Vec lhs(4);
            for (int i = 0; i < target.dim(); ++i)
                lhs = vec_add(lhs, vec_scale(r.at(i, j), target.basis_vector(i)));
            CHECK(lhs == mat_vec(m, source.basis_vector(j)));
        }
    }
}

TEST_CASE("restrict_map reports non-contained images", "[tensorspace]") {
    const Subspace source = Subspace::full(2);
    const Subspace target = Subspace::from_rows(
        Matrix::from_rows({{Rational(1), Rational(0)}}));
    CHECK_THROWS(restrict_map(Matrix::identity(2), source, target));
}

TEST_CASE("GradedVector bookkeeping", "[tensorspace]") {
    GradedVector g{2, {}};
    g.add(Word::from_letters1({1, 2}), Rational(1));
    g.add(Word::from_letters1({1}), Rational(1, 2));
    g.add(Word::from_letters1({1, 2}), Rational(-1));
    CHECK(g.terms.size() == 1); // zero coefficients are never stored
    CHECK(g.weight_component(1).terms.size() == 1);
    CHECK(g.component_coords(1) == Vec{Rational(1, 2), Rational(0)});
}
