#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "support.hpp"

namespace {

using namespace skewdna;
using skewdna::testing::all_words;
using skewdna::testing::Gen;

RElem v() { return RElem::v(); }
RElem O() { return RElem::zero(); }

const CodeSet& table2_set() {
    static const CodeSet set = materialize(code_from_generator(6, parse_poly("v*(x^4 + x^2 + 1)")));
    return set;
}

GrayWord gray_of_dna(const std::string& s) {
    GrayWord g;
    for (char c : s) g.push_back(gf4_of(base_from_char(c)));
    return g;
}

// Minimum over all distinct pairs, independent of the group structure.
std::size_t pairwise_min_distance(const CodeSet& set, Metric m) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const auto words = set.sorted_words();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, m == Metric::lee ? lee_distance(words[i], words[j])
                                                   : hamming_distance<RElem>(words[i], words[j]));
    return best;
}

TEST(Weights, Examples) {
    EXPECT_EQ(hamming_weight(Codeword(6, O())), 0u);
    EXPECT_EQ(hamming_distance<GF4>(gray_of_dna("TAATTAATTAAT"), gray_of_dna("AAAAAAAAAAAA")), 6u);
    EXPECT_EQ(hamming_weight(Codeword{RElem::one(), O(), RElem(GF4::w())}), 2u);
    EXPECT_EQ(lee_weight(v()), 1u);
    EXPECT_EQ(lee_weight(RElem::one()), 2u);
    EXPECT_EQ(lee_weight(O()), 0u);
    EXPECT_THROW(lee_distance(Codeword(2, O()), Codeword(3, O())), std::domain_error);
}

TEST(Weights, LeeWeightsOfAllElements) {
    std::size_t zeros = 0;
    for (RElem x : all_elements()) {
        const std::size_t w = lee_weight(x);
        EXPECT_LE(w, 2u);
        zeros += w == 0;
        const auto [p, q] = gray(x);
        EXPECT_EQ(w, std::size_t{!p.is_zero()} + std::size_t{!q.is_zero()});
    }
    EXPECT_EQ(zeros, 1u);
}

TEST(MinDistance, Table2Code) {
    EXPECT_EQ(min_distance(table2_set(), Metric::lee), 3u);
    EXPECT_EQ(min_distance(table2_set(), Metric::hamming), 3u);
    EXPECT_EQ(hamming_weight(Codeword{v(), O(), v(), O(), v(), O()}), 3u);
}

TEST(MinDistance, Diagonal) {
    EXPECT_EQ(min_distance(materialize(code_from_generator(2, parse_poly("x+1"))), Metric::hamming), 2u);
    EXPECT_THROW(min_distance(CodeSet(3, {0}), Metric::lee), std::domain_error);
}

TEST(MinDistance, MatchesPairwiseOracle) {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t t = 0; t < n; ++t)
            for (LeadingMode mode : {LeadingMode::unit, LeadingMode::v, LeadingMode::v1})
                for (const auto& g : enumerate_right_divisors(n, t, mode)) {
                    const CodeSet set = materialize(code_from_generator(n, g));
                    if (set.size() < 2 || set.size() > 4096) continue;
                    for (Metric m : {Metric::hamming, Metric::lee})
                        EXPECT_EQ(min_distance(set, m), pairwise_min_distance(set, m)) << "n=" << n << " g=" << g;
                }
}

TEST(Gray, Examples) {
    EXPECT_EQ(gray_image(Codeword{v(), O()}), (GrayWord{GF4::one(), GF4::zero(), GF4::zero(), GF4::zero()}));
    EXPECT_EQ(gray_image(Codeword(3, O())), GrayWord(6, GF4::zero()));
    Gen gen(41);
    for (int i = 0; i < 200; ++i) {
        const Codeword c = gen.word(1 + gen.below(8));
        EXPECT_EQ(gray_preimage(gray_image(c)), c);
    }
}

TEST(Permutations, Examples) {
    const GF4 p = GF4::one(), q = GF4::w(), r = GF4::w2(), s = GF4::zero();
    EXPECT_EQ(tau2(GrayWord{p, q, r, s}), (GrayWord{r, s, p, q}));
    EXPECT_EQ(pair_swap(GrayWord{p, q, r, s}), (GrayWord{q, p, s, r}));
    EXPECT_EQ(tau2(gray_image(Codeword{v(), O()})), (GrayWord{GF4::zero(), GF4::zero(), GF4::one(), GF4::zero()}));
    Gen gen(42);
    for (std::size_t n = 1; n <= 6; ++n) {
        const GrayWord g = gray_image(gen.word(n));
        GrayWord h = g;
        for (std::size_t i = 0; i < n; ++i) h = tau2(h);
        EXPECT_EQ(h, g);
    }
    EXPECT_THROW(tau2(GrayWord(3)), std::domain_error);
}

TEST(QuasiCyclic, IdentityOnAllWords) {
    for (std::size_t n = 1; n <= 2; ++n)
        for (const auto& c : all_words(n)) ASSERT_TRUE(quasi_cyclic_identity_holds(c));
    Gen gen(43);
    for (std::size_t n = 3; n <= 6; ++n)
        for (int i = 0; i < 10000; ++i) ASSERT_TRUE(quasi_cyclic_identity_holds(gen.word(n)));
}

TEST(QuasiCyclic, CodeImagesAreClosed) {
    EXPECT_TRUE(verify_quasi_cyclic_equivalence(table2_set()));
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t t = 1; t < n; ++t)
            for (LeadingMode mode : {LeadingMode::unit, LeadingMode::v, LeadingMode::v1})
                for (const auto& g : enumerate_right_divisors(n, t, mode)) {
                    const CodeSet set = materialize(code_from_generator(n, g));
                    EXPECT_TRUE(verify_quasi_cyclic_equivalence(set));
                    EXPECT_TRUE(is_closed_under_swapped_tau2(gray_image_set(set), 2 * n));
                }
}

TEST(QuasiCyclic, NegativeControl) {
    // a single nonzero word is not closed under sigma_theta
    const CodeSet lone(3, {0, pack(Codeword{v(), O(), O()})});
    EXPECT_FALSE(verify_quasi_cyclic_equivalence(lone));
    EXPECT_FALSE(is_closed_under_swapped_tau2(gray_image_set(lone), 6));
}

TEST(DistancePreservation, Examples) {
    const WordPair same{Codeword{v(), RElem::one()}, Codeword{v(), RElem::one()}};
    EXPECT_TRUE(verify_distance_preservation(std::span<const WordPair>(&same, 1)));
    EXPECT_EQ(lee_distance(same.first, same.second), 0u);
    const WordPair one{Codeword{v(), O(), O()}, Codeword(3, O())};
    EXPECT_EQ(lee_distance(one.first, one.second), 1u);
    EXPECT_EQ(hamming_distance<GF4>(gray_image(one.first), gray_image(one.second)), 1u);
}

TEST(DistancePreservation, AllElementPairsAndRandomWords) {
    std::vector<WordPair> pairs;
    for (RElem x : all_elements())
        for (RElem y : all_elements()) pairs.push_back({Codeword{x}, Codeword{y}});
    Gen gen(44);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int i = 0; i < 10000; ++i) pairs.push_back({gen.word(n), gen.word(n)});
    EXPECT_TRUE(verify_distance_preservation(pairs));
}

}  // namespace
