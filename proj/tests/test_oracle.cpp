#include <gtest/gtest.h>

#include <weylchar/oracle.hpp>

#include "properties.hpp"

using namespace weylchar;

namespace {

Series poly_to(std::initializer_list<long long> c, int trunc, int min_deg = 0) {
    std::vector<BigInt> v;
    for (long long x : c) v.emplace_back(x);
    return Series::truncated(std::move(v), min_deg, trunc);
}

// Bit j set: factor j is e_-.
TensorVector basis(std::string_view signs, std::vector<int> exps) {
    std::uint32_t minus = 0;
    for (std::size_t j = 0; j < signs.size(); ++j)
        if (signs[j] == '-') minus |= 1U << j;
    return TensorVector::basis(minus, std::move(exps));
}

}  // namespace

TEST(Act, WedgeImage) {
    // (x+ (x) t)(e+ e- - e- e+) = e+ e+ (t_2 - t_1).
    const TensorVector wedge = basis("+-", {0, 0}) - basis("-+", {0, 0});
    const TensorVector out = act({Gen::XPlus, 1}, wedge);
    EXPECT_EQ(out, basis("++", {0, 1}) - basis("++", {1, 0}));
    // The general form e+^m (e+ e- - e- e+) -> e+^{m+2} (t_{m+1}^r - t_{m+2}^r).
    for (int m = 0; m <= 2; ++m)
        for (int r = 0; r <= 3; ++r) {
            std::string plus(static_cast<std::size_t>(m), '+');
            std::vector<int> zeros(static_cast<std::size_t>(m) + 2, 0);
            const TensorVector v = basis(plus + "+-", zeros) - basis(plus + "-+", zeros);
            std::vector<int> e1 = zeros, e2 = zeros;
            e1[static_cast<std::size_t>(m)] = r;
            e2[static_cast<std::size_t>(m) + 1] = r;
            const std::string all(static_cast<std::size_t>(m) + 2, '+');
            EXPECT_EQ(act({Gen::XPlus, r}, v), basis(all, e2) - basis(all, e1));
        }
}

TEST(Act, HighestWeightVector) {
    for (int ell = 1; ell <= 4; ++ell) {
        const TensorVector top = TensorVector::highest(ell);
        EXPECT_EQ(act({Gen::H, 0}, top), Rational(ell) * top);
        EXPECT_TRUE(act({Gen::XPlus, 0}, top * PolyVector::variable_power(ell, 1, 2)).is_zero());
        EXPECT_EQ(act({Gen::H, 2}, top).terms().begin()->first.degree(), 2);
    }
    EXPECT_THROW(act({Gen::H, -1}, TensorVector::highest(1)), std::invalid_argument);
}

TEST(BracketCheck, Examples) {
    wtest::Rng rng(31);
    std::vector<TensorVector> sample;
    for (int i = 0; i < 20; ++i) sample.push_back(wtest::random_tensor(rng, 3, wtest::uniform(rng, 0, 3)));
    EXPECT_TRUE(bracket_check({Gen::XPlus, 1}, {Gen::XMinus, 1}, sample));
    EXPECT_TRUE(bracket_check({Gen::H, 2}, {Gen::H, 2}, sample));
    EXPECT_TRUE(bracket_check({Gen::H, 1}, {Gen::XPlus, 0}, sample));
    // [h (x) t, x+ (x) 1] acts as 2 x+ (x) t.
    for (const TensorVector& v : sample)
        EXPECT_EQ(act({Gen::H, 1}, act({Gen::XPlus, 0}, v)) - act({Gen::XPlus, 0}, act({Gen::H, 1}, v)), Rational(2) * act({Gen::XPlus, 1}, v));
}

TEST(BracketCheck, RandomSample) {
    const auto r = wtest::bracket_samples();
    EXPECT_TRUE(r.ok) << r.failure;
    EXPECT_GE(r.cases, 100);
}

TEST(Symmetrize, Idempotent) {
    const auto r = wtest::symmetrizer_idempotence();
    EXPECT_TRUE(r.ok) << r.failure;
}

TEST(Symmetrize, CommutesWithPermutations) {
    wtest::Rng rng(32);
    const TensorVector v = wtest::random_tensor(rng, 3, 3, 6);
    const TensorVector s = symmetrize(v);
    EXPECT_EQ(permute(s, {1, 2, 0}), s);
    EXPECT_EQ(permute(s, {1, 0, 2}), s);
    EXPECT_EQ(symmetrize(permute(v, {2, 0, 1})), s);
}

TEST(InvariantBasis, Examples) {
    for (int d = 0; d <= 4; ++d) {
        EXPECT_EQ(invariant_basis(1, 1, d).dim(), 1U);
        EXPECT_EQ(invariant_basis(1, -1, d).dim(), 1U);
    }
    const GradedSubspace s = invariant_basis(2, 2, 1);
    ASSERT_EQ(s.dim(), 1U);
    EXPECT_TRUE(s.contains(basis("++", {1, 0}) + basis("++", {0, 1})));
    EXPECT_FALSE(s.contains(basis("++", {1, 0})));
    const std::vector<std::size_t> dims{1, 1, 2, 2, 3};
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(invariant_basis(2, 2, d).dim(), dims[static_cast<std::size_t>(d)]);
    EXPECT_EQ(invariant_basis(3, 2, 2).dim(), 0U);  // parity
    EXPECT_THROW(invariant_basis(7, 1, 0), OracleLimitError);
}

TEST(InvariantBasis, BasisVectorsAreInvariant) {
    for (int ell = 2; ell <= 3; ++ell)
        for (int d = 0; d <= 3; ++d)
            for (const TensorVector& v : invariant_basis(ell, ell - 2, d).basis) EXPECT_EQ(symmetrize(v), v);
}

TEST(InvariantBasis, TopWeightIsFree) {
    for (int ell = 1; ell <= 4; ++ell) {
        const Series h = hilbert_A(Weight{ell}, 6);
        for (int d = 0; d <= 6; ++d) EXPECT_EQ(BigInt(invariant_basis(ell, ell, d).dim()), h.coeff(d)) << ell << " " << d;
    }
}

TEST(TensorCharacter, Examples) {
    EXPECT_EQ(tensor_character(1, 5), global_weyl_character(Weight{1}, 0, 5));
    const GradedCharacter two = tensor_character(2, 6);
    const GradedCharacter local = GradedCharacter::from_character(irr_character(Weight{2})) + Series::monomial(1, 1) * GradedCharacter::from_character(irr_character(Weight{0}));
    EXPECT_EQ(two, (hilbert_A(Weight{2}, 6) * local).truncate(6));
    EXPECT_THROW(tensor_character(5, 2), OracleLimitError);
    EXPECT_NO_THROW(tensor_character(1, 9, forced(limits::tensor_character)));
}

TEST(TensorCharacter, MatchesFormulaEngine) {
    for (int ell = 0; ell <= 3; ++ell) EXPECT_EQ(tensor_character(ell, 6), global_weyl_character(Weight{ell}, 0, 6)) << ell;
}

TEST(LocalWeylOracle, Examples) {
    EXPECT_EQ(local_weyl_oracle(1), GradedCharacter::from_character(irr_character(Weight{1})));
    const GradedCharacter two = local_weyl_oracle(2);
    EXPECT_EQ(two.slice(0).dimension(), 3);
    EXPECT_EQ(two.slice(1).dimension(), 1);
    EXPECT_EQ(two.dimension_series().at_one(), 4);
    const GradedCharacter three = local_weyl_oracle(3);
    EXPECT_EQ(decompose(three).at(Weight{1}), sl2_kostka(3, 1));
    EXPECT_EQ(three.dimension_series().at_one(), 8);
}

TEST(LocalWeylOracle, MatchesFormulaEngine) {
    for (int ell = 0; ell <= 4; ++ell) {
        const GradedCharacter o = local_weyl_oracle(ell);
        EXPECT_EQ(o, local_weyl_character(Weight{ell}, 0)) << ell;
        EXPECT_EQ(o.dimension_series().at_one(), BigInt(1) << ell);
    }
}

TEST(MModule, PolynomialGenerators) {
    // p((r)) for k = 1, m = 0 is t_1^r - t_2^r.
    const PolyVector p = p_of_r(2, {3});
    EXPECT_EQ(p, PolyVector::variable_power(2, 1, 3) - PolyVector::variable_power(2, 2, 3));
    // With m = ell - 2k = 1 the variables are t_2, t_3.
    EXPECT_EQ(p_of_r(3, {1}), PolyVector::variable_power(3, 2, 1) - PolyVector::variable_power(3, 3, 1));
}

TEST(MModule, Examples) {
    EXPECT_EQ(m_module_hilbert(0, 3, 6), hilbert_A(Weight{3}, 6));
    EXPECT_EQ(m_module_hilbert(1, 2, 4), poly_to({1, 1, 2, 2}, 4, 1));
}

TEST(MModule, MatchesKostkaTimesHilbert) {
    for (const auto [k, ell] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 4}})
        EXPECT_EQ(m_module_hilbert(k, ell, 6), (sl2_kostka(ell, k) * hilbert_A(Weight{ell}, 6)).truncate(6)) << k << "," << ell;
}

TEST(Theta, Check) {
    for (int d = 0; d <= 4; ++d) {
        const VerificationReport r = theta_module_check(d);
        EXPECT_TRUE(r.pass) << r;
        EXPECT_EQ(r.checks.size(), 3U);
    }
    EXPECT_THROW(theta_module_check(9), OracleLimitError);
}

TEST(Limits, LocalWeylOracleRejectsLargeEll) { EXPECT_THROW(local_weyl_oracle(5), OracleLimitError); }
