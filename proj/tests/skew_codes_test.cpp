#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "support.hpp"

namespace {

using namespace skewdna;
using skewdna::testing::all_words;
using skewdna::testing::Gen;

RElem v() { return RElem::v(); }

const SkewCyclicCode& table2_code() {
    static const SkewCyclicCode code = code_from_generator(6, parse_poly("v*(x^4 + x^2 + 1)"));
    return code;
}

// Left R-span of the words x^i * g mod x^n - 1, 0 <= i < n - t, by brute
// force over all scalar combinations.
std::set<Codeword> left_span_oracle(std::size_t n, const SkewPoly& g) {
    const std::size_t k = n - g.deg();
    std::vector<Codeword> basis;
    for (std::size_t i = 0; i < k; ++i)
        basis.push_back(poly_to_word(right_rem(SkewPoly::monomial(RElem::one(), i) * g, SkewPoly::x_n_minus_1(n)), n));
    std::set<Codeword> out;
    const std::size_t total = std::size_t{1} << (4 * k);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Codeword c(n);
        for (std::size_t i = 0; i < k; ++i) {
            const RElem lambda = RElem::from_index((idx >> (4 * i)) & 0xFu);
            for (std::size_t j = 0; j < n; ++j) c[j] += lambda * basis[i][j];
        }
        out.insert(c);
    }
    return out;
}

std::set<Codeword> as_set(const CodeSet& set) {
    const auto words = set.sorted_words();
    return {words.begin(), words.end()};
}

TEST(Words, PolynomialCorrespondence) {
    Gen gen(21);
    for (int i = 0; i < 500; ++i) {
        const Codeword c = gen.word(1 + gen.below(8));
        EXPECT_EQ(poly_to_word(word_to_poly(c), c.size()), c);
    }
    EXPECT_THROW(poly_to_word(parse_poly("x^3"), 3), std::domain_error);
    EXPECT_EQ(parse_word(word_to_string(Codeword{v(), RElem::one()})), (Codeword{v(), RElem::one()}));
}

TEST(Words, SigmaTheta) {
    EXPECT_EQ(sigma_theta(Codeword{v(), RElem::zero()}), (Codeword{RElem::zero(), RElem::one() + v()}));
    for (std::size_t n : {2, 4}) {
        for (const auto& c : all_words(n)) {
            Codeword d = c;
            for (std::size_t i = 0; i < n; ++i) d = sigma_theta(d);
            ASSERT_EQ(d, c);
        }
    }
}

TEST(Words, SigmaThetaIsMultiplicationByX) {
    Gen gen(22);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + gen.below(8);
        const Codeword c = gen.word(n);
        const SkewPoly shifted = right_rem(parse_poly("x") * word_to_poly(c), SkewPoly::x_n_minus_1(n));
        EXPECT_EQ(sigma_theta(c), poly_to_word(shifted, n));
    }
}

TEST(Generators, Classification) {
    const auto ex1 = code_from_generator(10, parse_poly("x^4 + (v+w)*x^2 + 1"));
    EXPECT_EQ(ex1.form(), GeneratorForm::unit_divisor);
    EXPECT_TRUE(ex1.has_remainder_test());
    EXPECT_EQ(table2_code().form(), GeneratorForm::v_type);
    EXPECT_EQ(table2_code().generators().front().g1, (F4Poly{GF4::one(), GF4::zero(), GF4::one(), GF4::zero(), GF4::one()}));
    EXPECT_EQ(code_from_generator(6, parse_poly("(1+v)*(x^2+1)")).form(), GeneratorForm::v1_type);
    EXPECT_EQ(code_from_generator(4, parse_poly("x + v")).form(), GeneratorForm::generic);
    EXPECT_THROW(code_from_generator(3, SkewPoly{}), std::domain_error);
    EXPECT_THROW(code_from_generator(3, SkewPoly::x_n_minus_1(3)), std::domain_error);
}

TEST(Materialize, Table2CodeHasSixteenWords) {
    const CodeSet set = materialize(table2_code());
    EXPECT_EQ(set.size(), 16u);
    EXPECT_TRUE(set.contains(Codeword(6, RElem::zero())));
}

TEST(Materialize, LengthTwoXPlusOneIsTheDiagonal) {
    const CodeSet set = materialize(code_from_generator(2, parse_poly("x + 1")));
    std::set<Codeword> diagonal;
    for (RElem l : all_elements()) diagonal.insert({l, l});
    EXPECT_EQ(as_set(set), diagonal);
}

TEST(Materialize, Limits) {
    EXPECT_THROW(materialize(code_from_generator(6, parse_poly("1")), 1000), resource_error);
    EXPECT_THROW(materialize(code_from_generator(17, parse_poly("x+1"))), std::domain_error);
}

TEST(Materialize, UnitDivisorCodesEqualTheLeftSpanOfShifts) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t t = 1; t < n && t <= 4; ++t)
            for (const auto& g : enumerate_right_divisors(n, t, LeadingMode::unit)) {
                const CodeSet set = materialize(code_from_generator(n, g));
                ASSERT_EQ(set.size(), std::size_t{1} << (4 * (n - t))) << "n=" << n << " g=" << g;
                EXPECT_TRUE(is_sigma_closed(set));
                if (n - t <= 3) {
                    EXPECT_EQ(as_set(set), left_span_oracle(n, g)) << "n=" << n << " g=" << g;
                }
            }
}

TEST(Materialize, SizesArePowersOfTwoDividingTheAmbientSpace) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t t = 0; t < n; ++t)
            for (LeadingMode mode : {LeadingMode::unit, LeadingMode::v, LeadingMode::v1})
                for (const auto& g : enumerate_right_divisors(n, t, mode)) {
                    const std::size_t size = materialize(code_from_generator(n, g)).size();
                    EXPECT_EQ(std::popcount(size), 1);
                    EXPECT_LE(std::countr_zero(size), static_cast<int>(4 * n));
                }
}

TEST(Materialize, OddLengthCodesAreCyclic) {
    for (std::size_t n : {3, 5})
        for (std::size_t t = 0; t < n; ++t)
            for (LeadingMode mode : {LeadingMode::unit, LeadingMode::v, LeadingMode::v1})
                for (const auto& g : enumerate_right_divisors(n, t, mode))
                    EXPECT_TRUE(is_cyclic_shift_closed(materialize(code_from_generator(n, g)))) << "n=" << n << " g=" << g;
}

TEST(Membership, Examples) {
    const CodeSet set = materialize(table2_code());
    EXPECT_TRUE(is_member(table2_code(), set, Codeword(6, RElem::zero())));
    EXPECT_TRUE(is_member(table2_code(), set, Codeword{v(), RElem::zero(), v(), RElem::zero(), v(), RElem::zero()}));
    EXPECT_FALSE(is_member(table2_code(), set, Codeword{RElem::one(), RElem::zero(), RElem::zero(), RElem::zero(), RElem::zero(), RElem::zero()}));
    EXPECT_THROW(set.contains(Codeword(5, RElem::zero())), std::domain_error);
}

TEST(Membership, RemainderTestAgreesWithLookup) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t t = 0; t < n; ++t)
            for (const auto& g : enumerate_right_divisors(n, t, LeadingMode::unit)) {
                const auto code = code_from_generator(n, g);
                const CodeSet set = materialize(code);
                for (const auto& c : all_words(n)) ASSERT_EQ(code.contains_by_remainder(c), set.contains(c));
            }
    Gen gen(23);
    for (std::size_t n = 4; n <= 6; ++n)
        for (std::size_t t = 1; t < n; ++t) {
            const auto divisors = enumerate_right_divisors(n, t, LeadingMode::unit);
            if (divisors.empty()) continue;
            const auto code = code_from_generator(n, divisors[gen.below(static_cast<unsigned>(divisors.size()))]);
            const CodeSet set = materialize(code);
            for (int i = 0; i < 10000; ++i) {
                // half the samples are codewords so both outcomes are exercised
                const Codeword c = gen.below(2) ? gen.word(n) : set.word(gen.below(static_cast<unsigned>(set.size())));
                ASSERT_EQ(code.contains_by_remainder(c), set.contains(c));
            }
        }
}

TEST(Divisors, LinearDivisorsOfLengthTwoMatchExpansionOracle) {
    // (x + d)(x + c) = x^2 + (theta(c) + d) x + d c
    std::set<SkewPoly> expected;
    for (RElem c : all_elements())
        for (RElem d : all_elements())
            if ((SkewPoly({d, RElem::one()}) * SkewPoly({c, RElem::one()})) == SkewPoly::x_n_minus_1(2))
                expected.insert(SkewPoly({c, RElem::one()}));
    const auto got = enumerate_right_divisors(2, 1, LeadingMode::unit);
    EXPECT_EQ(std::set<SkewPoly>(got.begin(), got.end()), expected);
    EXPECT_EQ(got.size(), 3u);
    EXPECT_EQ(got, (std::vector<SkewPoly>{parse_poly("x+1"), parse_poly("x+(w+v)"), parse_poly("x+(w2+v)")}));
}

TEST(Divisors, PublishedGeneratorsAreFound) {
    const auto n10 = enumerate_right_divisors(10, 4, LeadingMode::unit);
    EXPECT_NE(std::find(n10.begin(), n10.end(), parse_poly("x^4 + (v+w)*x^2 + 1")), n10.end());
    const auto n6 = enumerate_right_divisors(6, 4, LeadingMode::v);
    EXPECT_NE(std::find(n6.begin(), n6.end(), parse_poly("v*(x^4 + x^2 + 1)")), n6.end());
}

TEST(Divisors, EveryResultDividesAndListsAreSorted) {
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t t = 0; t < n; ++t)
            for (LeadingMode mode : {LeadingMode::unit, LeadingMode::v, LeadingMode::v1}) {
                const auto list = enumerate_right_divisors(n, t, mode);
                EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
                for (const auto& g : list) {
                    EXPECT_EQ(g.deg(), t);
                    const GeneratorForm expected = mode == LeadingMode::unit ? GeneratorForm::unit_divisor
                                                   : mode == LeadingMode::v  ? GeneratorForm::v_type
                                                                             : GeneratorForm::v1_type;
                    EXPECT_EQ(classify_generator(g, n).form, expected);
                }
            }
}

TEST(Divisors, Errors) {
    EXPECT_THROW(enumerate_right_divisors(3, 3, LeadingMode::unit), std::domain_error);
    EXPECT_THROW(enumerate_right_divisors(12, 6, LeadingMode::unit, 1000), resource_error);
}

TEST(MinimalDegree, Table2Code) {
    const auto rep = minimal_degree_scan(materialize(table2_code()));
    ASSERT_TRUE(rep.degree.has_value());
    EXPECT_EQ(*rep.degree, 4u);
    EXPECT_TRUE(rep.all_v_form);
    EXPECT_NE(std::find(rep.polys.begin(), rep.polys.end(), parse_poly("v*(x^4+x^2+1)")), rep.polys.end());
}

TEST(MinimalDegree, ZeroCodeAndDiagonal) {
    EXPECT_FALSE(minimal_degree_scan(CodeSet(3, {0})).degree.has_value());
    const auto rep = minimal_degree_scan(materialize(code_from_generator(2, parse_poly("x+1"))));
    ASSERT_TRUE(rep.degree.has_value());
    EXPECT_EQ(*rep.degree, 1u);
    std::set<SkewPoly> expected;
    for (RElem l : all_elements())
        if (!l.is_zero() && !is_unit(l)) expected.insert(SkewPoly({l, l}));
    EXPECT_EQ(std::set<SkewPoly>(rep.polys.begin(), rep.polys.end()), expected);
    EXPECT_TRUE(rep.all_v_form);
}

TEST(MinimalDegree, VFormHoldsOnAllSmallCodes) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (std::size_t t = 0; t < n; ++t)
            for (LeadingMode mode : {LeadingMode::unit, LeadingMode::v, LeadingMode::v1})
                for (const auto& g : enumerate_right_divisors(n, t, mode))
                    EXPECT_TRUE(minimal_degree_scan(materialize(code_from_generator(n, g))).all_v_form);
}

TEST(AllOnes, Examples) {
    EXPECT_FALSE(all_ones_in(materialize(table2_code())));
    EXPECT_TRUE(all_ones_in(materialize(code_from_generator(3, parse_poly("1")))));
    EXPECT_TRUE(all_ones_in(materialize(code_from_generator(2, parse_poly("x+1")))));
}

}  // namespace
