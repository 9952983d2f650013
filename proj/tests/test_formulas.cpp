#include <gtest/gtest.h>

#include <centraldeg/formulas.hpp>
#include <centraldeg/polytope.hpp>

using namespace centraldeg;

namespace {

// Pascal table, independent of the library's multiplicative binomial.
std::int64_t pascal(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    static std::vector<std::vector<std::int64_t>> rows;
    while (static_cast<int>(rows.size()) <= n) {
        const auto r = static_cast<int>(rows.size());
        std::vector<std::int64_t> row(static_cast<std::size_t>(r) + 1, 1);
        for (int j = 1; j < r; ++j) {
            row[static_cast<std::size_t>(j)] =
                rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)] +
                rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)];
        }
        rows.push_back(row);
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Term-by-term genus sum with C(-1, 0) = 1.
std::int64_t genus_lp_oracle(int m, int d)
{
    std::int64_t s = 1;
    for (int j = 0; j <= d; ++j) {
        const int top = m - d + j - 2;
        const std::int64_t c = top == -1 ? 1 : pascal(top, j);
        s -= (1 - j) * c;
    }
    return s;
}

} // namespace

TEST(PsiLP, Examples)
{
    EXPECT_EQ(psi_lp(4, 2), 3);
    EXPECT_EQ(psi_lp(6, 3), 10);
    for (int m = 2; m <= 12; ++m) {
        EXPECT_EQ(psi_lp(m, m - 1), 1);
    }
    EXPECT_THROW(psi_lp(4, 4), std::invalid_argument);
}

TEST(PsiLP, EqualsStaircaseAndDiagonalML)
{
    for (int m = 2; m <= 12; ++m) {
        for (int d = 1; d < m; ++d) {
            EXPECT_EQ(psi_lp(m, d), pascal(m - 1, d));
            EXPECT_EQ(psi_lp(m, d), staircase_counts(m, d).total());
            EXPECT_EQ(psi_lp(m, d), phi_diag(m, d + 1));
        }
    }
}

TEST(PhiDiag, Examples)
{
    EXPECT_EQ(phi_diag(4, 3), 3);
    for (int m = 1; m <= 8; ++m) {
        EXPECT_EQ(phi_diag(m, 1), 1);
    }
    EXPECT_EQ(phi_diag(5, 3), psi_lp(5, 2));
    EXPECT_EQ(phi_diag(5, 3), 6);
}

TEST(PsiQP, Examples)
{
    EXPECT_EQ(psi_qp(3, 1), 3);
    EXPECT_EQ(psi_qp(4, 1), 7);
    for (int m = 2; m <= 12; ++m) {
        EXPECT_EQ(psi_qp(m, m - 1), 1);
    }
}

TEST(PsiQP, EqualsWeightedStaircase)
{
    for (int m = 2; m <= 12; ++m) {
        for (int d = 1; d < m; ++d) {
            std::int64_t oracle = 0;
            for (int k = 0; k <= m - d - 1; ++k) {
                oracle += pascal(m - k - 2, d - 1) << k;
            }
            EXPECT_EQ(psi_qp(m, d), oracle);
            EXPECT_EQ(psi_qp(m, d), qp_weighted_volume(m, d));
        }
    }
}

TEST(SdpSymmetry, PartnerIsInvolution)
{
    EXPECT_EQ(sdp_symmetry_partner(3, 1), 4);
    EXPECT_EQ(sdp_symmetry_partner(3, 2), 3);
    for (int m = 2; m <= 8; ++m) {
        const std::int64_t N = m * (m + 1) / 2;
        for (std::int64_t d = 1; d < N - 1; ++d) {
            EXPECT_EQ(sdp_symmetry_partner(m, sdp_symmetry_partner(m, d)), d);
        }
        // The last dimension maps to 0, outside the domain.
        EXPECT_EQ(sdp_symmetry_partner(m, N - 1), 0);
    }
    EXPECT_THROW(sdp_symmetry_partner(3, 6), std::invalid_argument);
}

TEST(SdpReference, Examples)
{
    EXPECT_EQ(psi_sdp_reference(4, 7), 9);
    EXPECT_EQ(psi_sdp_reference(5, 1), 4);
    EXPECT_EQ(psi_sdp_reference(3, 5), 1);
    EXPECT_EQ(psi_sdp_reference(3, 1), 2);
    EXPECT_EQ(psi_sdp_reference(3, 4), 2);
    EXPECT_FALSE(psi_sdp_reference(4, 4).has_value());
    EXPECT_FALSE(psi_sdp_reference(3, 6).has_value());
}

TEST(SdpReference, RespectsSymmetryPartner)
{
    for (int m = 2; m <= 8; ++m) {
        const std::int64_t N = m * (m + 1) / 2;
        for (std::int64_t d = 1; d < N - 1; ++d) {
            const auto a = psi_sdp_reference(m, d);
            const auto b = psi_sdp_reference(m, sdp_symmetry_partner(m, d));
            EXPECT_EQ(a.has_value(), b.has_value());
            if (a && b) {
                EXPECT_EQ(*a, *b);
            }
        }
    }
}

TEST(GenusHVector, Examples)
{
    for (int m = 3; m <= 10; ++m) {
        EXPECT_EQ(genus_from_hvector({{1, m - 2}}), 0);
    }
    EXPECT_EQ(genus_from_hvector({{1, 1, 1}}), 1);
    EXPECT_EQ(genus_from_hvector({{1}}), 0);
    EXPECT_THROW(genus_from_hvector({{2, 1}}), std::invalid_argument);
    EXPECT_THROW(genus_from_hvector({{1, 0}}), std::invalid_argument);
}

TEST(GenusHVector, AllOnesGivesBinomial)
{
    for (int m = 2; m <= 12; ++m) {
        HVector hv{std::vector<std::int64_t>(static_cast<std::size_t>(m - 1), 1)};
        EXPECT_EQ(genus_from_hvector(hv), pascal(m - 2, 2));
    }
}

TEST(GenusSdpSpecial, TableEntries)
{
    EXPECT_EQ(genus_sdp_special(3, 3), 1);
    EXPECT_EQ(genus_sdp_special(3, 4), 0);
    EXPECT_EQ(genus_sdp_special(4, 7), 10);
    EXPECT_EQ(genus_sdp_special(4, 8), 1);
    EXPECT_EQ(genus_sdp_special(5, 12), 33);
    EXPECT_EQ(genus_sdp_special(5, 13), 3);
    for (int m = 2; m <= 10; ++m) {
        const std::int64_t N = m * (m + 1) / 2;
        EXPECT_EQ(genus_sdp_special(m, 1), 0);
        EXPECT_EQ(genus_sdp_special(m, N - 1), 0);
    }
    EXPECT_FALSE(genus_sdp_special(4, 4).has_value());
}

TEST(GenusSdpSpecial, AgreesWithClosedFormTableRows)
{
    for (const auto& row : genus_sdp_table()) {
        if (row.source == GenusSource::closed_form) {
            EXPECT_EQ(genus_sdp_special(row.m, row.d), row.value) << row.m << "," << row.d;
        }
    }
}

TEST(GenusLP, Examples)
{
    EXPECT_EQ(genus_lp(5, 2), 3);
    EXPECT_EQ(genus_lp(4, 2), 1);
}

TEST(GenusLP, SumFormMatchesOracleAndIsSymmetric)
{
    for (int m = 2; m <= 12; ++m) {
        for (int d = 1; d < m; ++d) {
            EXPECT_EQ(genus_lp(m, d), genus_lp_oracle(m, d)) << m << "," << d;
            EXPECT_EQ(genus_lp(m, d), genus_lp(m, m - d));
        }
    }
}

TEST(Polynomiality, Examples)
{
    const auto fit = polynomiality_check(1, {{3, 2}, {4, 3}, {5, 4}});
    EXPECT_TRUE(fit.fits);
    EXPECT_TRUE(fit.integer_valued);
    EXPECT_EQ(fit.degree, 1);
    ASSERT_EQ(fit.coefficients.size(), 2u);
    EXPECT_EQ(fit.coefficients[0], -1);
    EXPECT_EQ(fit.coefficients[1], 1);
    EXPECT_EQ(fit.describe(), "m - 1");

    const auto constant = polynomiality_check(0, {{2, 7}, {5, 7}, {9, 7}});
    EXPECT_TRUE(constant.fits);
    EXPECT_EQ(constant.degree, 0);

    EXPECT_FALSE(polynomiality_check(1, {{3, 2}, {4, 3}, {5, 5}}).fits);
    EXPECT_THROW(polynomiality_check(2, {{1, 1}, {2, 2}}), std::invalid_argument);
}

TEST(Polynomiality, RecoversBinomialInM)
{
    // C(m-1, 2) = (m² − 3m + 2)/2: integer valued with non-integer coefficients.
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (int m = 3; m <= 8; ++m) {
        pts.emplace_back(m, pascal(m - 1, 2));
    }
    const auto fit = polynomiality_check(2, pts);
    EXPECT_TRUE(fit.fits);
    EXPECT_TRUE(fit.integer_valued);
    EXPECT_EQ(fit.degree, 2);
    EXPECT_EQ(fit.coefficients[2], BigRat(1, 2));
}
