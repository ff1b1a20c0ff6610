#include <gtest/gtest.h>

#include <set>

#include <weylchar/characters.hpp>
#include <weylchar/kostka.hpp>

#include "properties.hpp"

using namespace weylchar;

namespace {

Series poly(std::initializer_list<long long> c) {
    std::vector<BigInt> v;
    for (long long x : c) v.emplace_back(x);
    return Series::exact(std::move(v));
}

std::multiset<int> charges(const Partition& shape, const std::vector<int>& content) {
    std::multiset<int> out;
    for (const Tableau& t : enum_ssyt(shape, content)) out.insert(charge(t));
    return out;
}

// Kostka number by brute force over all fillings of the shape.
long long count_fillings(const Partition& shape, const std::vector<int>& content) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape[static_cast<std::size_t>(i)]; ++j) cells.emplace_back(i, j);
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.length()));
    for (int i = 0; i < shape.length(); ++i) grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(i)]), 0);
    std::vector<int> left = content;
    long long count = 0;
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == cells.size()) {
            ++count;
            return;
        }
        const auto [i, j] = cells[c];
        for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
            if (j > 0 && grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] > v) continue;
            if (i > 0 && grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] >= v) continue;
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            --left[static_cast<std::size_t>(v - 1)];
            self(self, c + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(rec, 0);
    return count;
}

bool passes_sl2_closed_form(const KostkaConvention& conv) {
    for (int ell = 0; ell <= 8; ++ell)
        for (int k = 0; 2 * k <= ell; ++k)
            if (kostka_by_convention(Weight{ell}, Partition{ell - k, k}, conv) != sl2_kostka(ell, k)) return false;
    return true;
}

// sum_xi K(1) dim V(mu_xi) = 3^{r_1 + r_2} for A_2, r_1 + r_2 <= 4.
bool passes_a2_dimension(const KostkaConvention& conv) {
    for (int r1 = 0; r1 <= 4; ++r1)
        for (int r2 = 0; r1 + r2 <= 4; ++r2) {
            const Weight lam{r1, r2};
            BigInt total = 0;
            for (const Partition& xi : partitions_of(box_count(lam), 3)) {
                const Series k = kostka_by_convention(lam, xi, conv);
                if (!k.is_zero()) total += k.at_one() * weyl_dimension(mu_of_xi(xi, 2));
            }
            BigInt want = 1;
            for (int i = 0; i < r1 + r2; ++i) want *= 3;
            if (total != want) return false;
        }
    return true;
}

}  // namespace

TEST(Ssyt, Examples) {
    EXPECT_EQ(enum_ssyt(Partition{2}, {2, 0}).size(), 1U);
    EXPECT_EQ(enum_ssyt(Partition{2, 2}, {1, 1, 1, 1}).size(), 2U);
    EXPECT_EQ(enum_ssyt(Partition{2, 1}, {1, 1, 1}).size(), 2U);
    EXPECT_THROW(enum_ssyt(Partition{2, 1}, {1, 1}), std::invalid_argument);
}

TEST(Ssyt, TableauxAreSemistandardAndOrdered) {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& shape : partitions_of(n, n))
            for (const Partition& mu : partitions_of(n, n)) {
                const auto ts = enum_ssyt(shape, mu.parts());
                for (std::size_t i = 0; i < ts.size(); ++i) {
                    EXPECT_TRUE(ts[i].is_semistandard());
                    if (i) EXPECT_LT(ts[i - 1].row_word(), ts[i].row_word());
                }
            }
}

TEST(Ssyt, CountsMatchBruteForce) {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& shape : partitions_of(n, n))
            for (const Partition& mu : partitions_of(n, n))
                EXPECT_EQ(static_cast<long long>(enum_ssyt(shape, mu.parts()).size()), count_fillings(shape, mu.parts())) << shape << " " << mu;
    // Non-partition content is allowed for enumeration.
    EXPECT_EQ(static_cast<long long>(enum_ssyt(Partition{3, 1}, {1, 2, 1}).size()), count_fillings(Partition{3, 1}, {1, 2, 1}));
}

TEST(Charge, Examples) {
    EXPECT_EQ(charge(enum_ssyt(Partition{4}, {4}).front()), 0);
    EXPECT_EQ(charges(Partition{2, 2}, {1, 1, 1, 1}), (std::multiset<int>{2, 4}));
    EXPECT_EQ(charges(Partition{2, 1}, {1, 1, 1}), (std::multiset<int>{1, 2}));
}

TEST(Charge, Words) {
    // Standard words: charge is the sum of the indices.
    EXPECT_EQ(charge_of_word(std::vector<int>{1, 2, 3}), 0 + 0 + 0);
    EXPECT_EQ(charge_of_word(std::vector<int>{3, 2, 1}), 0 + 1 + 2);
    EXPECT_EQ(charge_of_word(std::vector<int>{2, 1, 3}), 0 + 1 + 1);
    // Repeated letters: 1 1 2 2 splits into two copies of "1 2".
    EXPECT_EQ(charge_of_word(std::vector<int>{1, 1, 2, 2}), 0);
    EXPECT_EQ(charge_of_word(std::vector<int>{2, 2, 1, 1}), 2);
}

TEST(Charge, RejectsNonPartitionContent) { EXPECT_THROW(charge_of_word(std::vector<int>{2, 2, 1}), std::invalid_argument); }

TEST(KostkaPoly, Examples) {
    for (const Partition& lam : partitions_of(5, 5)) EXPECT_EQ(kostka_poly(lam, lam), Series::one());
    EXPECT_EQ(kostka_poly(Partition{2, 2}, Partition{1, 1, 1, 1}), poly({0, 0, 1, 0, 1}));
    EXPECT_EQ(kostka_poly(Partition{2, 1}, Partition{1, 1, 1}), poly({0, 1, 1}));
    EXPECT_TRUE(kostka_poly(Partition{2, 2}, Partition{3, 1}).is_zero());
}

TEST(KostkaPoly, AgreesWithLusztigFormula) {
    int compared = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n, n))
            for (const Partition& mu : partitions_of(n, n)) {
                EXPECT_EQ(kostka_poly(lam, mu), wtest::lusztig_kostka(lam, mu)) << "K_{" << lam << "," << mu << "}";
                ++compared;
            }
    EXPECT_EQ(compared, 434);
}

TEST(KostkaPoly, ValueAtOneAndSupport) {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n, n))
            for (const Partition& mu : partitions_of(n, n)) {
                const Series k = kostka_poly(lam, mu);
                EXPECT_TRUE(k.nonnegative());
                EXPECT_EQ(k.is_zero() ? BigInt(0) : k.at_one(), BigInt(enum_ssyt(lam, mu.parts()).size()));
                EXPECT_EQ(k.is_zero(), !mu.dominated_by(lam)) << lam << " " << mu;
                // Degree bound n(mu) - n(lam), attained with coefficient 1.
                if (!k.is_zero()) EXPECT_EQ(k.coeff(mu.n_statistic() - lam.n_statistic()), 1);
            }
}

TEST(LocalWeylKostka, Examples) {
    EXPECT_EQ(local_weyl_kostka(Weight{2}, Partition{1, 1}), poly({0, 1}));
    for (int ell = 0; ell <= 6; ++ell) EXPECT_EQ(local_weyl_kostka(Weight{ell}, Partition{ell}), Series::one());
    EXPECT_EQ(local_weyl_kostka(Weight{4}, Partition{2, 2}), poly({0, 0, 1, 0, 1}));
    EXPECT_THROW(local_weyl_kostka(Weight{3}, Partition{2, 2}), std::invalid_argument);
    EXPECT_THROW(local_weyl_kostka(Weight{3}, Partition{1, 1, 1}), std::invalid_argument);
    EXPECT_THROW(local_weyl_kostka(Weight{-1}, Partition{}), std::invalid_argument);
}

TEST(LocalWeylKostka, Sl2ClosedForm) {
    for (int ell = 0; ell <= 8; ++ell)
        for (int k = 0; 2 * k <= ell; ++k) EXPECT_EQ(local_weyl_kostka(Weight{ell}, Partition{ell - k, k}), sl2_kostka(ell, k)) << ell << "," << k;
}

TEST(LocalWeylKostka, EqualPartsIndexing) {
    // K_{2m,(m,m)}: the coefficient of the trivial module for lambda = 2m omega.
    for (int m = 0; m <= 4; ++m) EXPECT_EQ(local_weyl_kostka(Weight{2 * m}, Partition{m, m}), sl2_kostka(2 * m, m));
}

TEST(LocalWeylKostka, Sl2DimensionIdentity) {
    for (int ell = 0; ell <= 10; ++ell) {
        BigInt total = 0;
        for (const Partition& xi : partitions_of(ell, 2)) total += local_weyl_kostka(Weight{ell}, xi).at_one() * weyl_dimension(mu_of_xi(xi, 1));
        EXPECT_EQ(total, BigInt(1) << ell);
    }
}

TEST(LocalWeylKostka, CalibrationIsUnique) {
    std::vector<KostkaConvention> winners;
    for (const KostkaConvention& conv : all_kostka_conventions())
        if (passes_sl2_closed_form(conv) && passes_a2_dimension(conv)) winners.push_back(conv);
    ASSERT_EQ(winners.size(), 1U) << "calibration is ambiguous";
    EXPECT_EQ(winners.front(), kLocalWeylConvention) << to_string(winners.front());
}

TEST(LocalWeylKostka, DiagramSymmetry) {
    // The diagram automorphism of A_2 swaps omega_1 and omega_2.
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) {
            const Weight lam{a, b}, flipped{b, a};
            for (const Partition& xi : partitions_of(box_count(lam), 3)) {
                const Weight mu = mu_of_xi(xi, 2);
                for (const Partition& xi2 : partitions_of(box_count(flipped), 3))
                    if (mu_of_xi(xi2, 2) == Weight{mu[1], mu[0]})
                        EXPECT_EQ(local_weyl_kostka(lam, xi), local_weyl_kostka(flipped, xi2)) << lam << " " << xi;
            }
        }
}
