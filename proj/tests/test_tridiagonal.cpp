#include "kgbound/tridiagonal.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace kgb;

namespace
{

SymTridiagonal laplacian(std::size_t n)
{
    return {std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
}

double laplacian_eigenvalue(std::size_t n, std::size_t k)
{
    return 2.0 - 2.0 * std::cos(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n + 1));
}

} // namespace

TEST(Sturm, CountsBelowShift)
{
    auto const t = laplacian(50);
    EXPECT_EQ(sturm_count(t, -0.1), 0u);
    EXPECT_EQ(sturm_count(t, 4.1), 50u);
    for (std::size_t k = 1; k <= 50; k += 7) {
        double const lam = laplacian_eigenvalue(50, k);
        EXPECT_EQ(sturm_count(t, lam - 1e-9), k - 1);
        EXPECT_EQ(sturm_count(t, lam + 1e-9), k);
    }
}

TEST(Sturm, DiagonalMatrix)
{
    SymTridiagonal const t{{3.0, -1.0, 5.0}, {0.0, 0.0}};
    EXPECT_EQ(sturm_count(t, 0.0), 1u);
    EXPECT_EQ(sturm_count(t, 4.0), 2u);
    auto const iv = gershgorin(t);
    EXPECT_EQ(iv.lo, -1.0);
    EXPECT_EQ(iv.hi, 5.0);
}

TEST(Bisect, LaplacianSpectrum)
{
    auto const t = laplacian(200);
    for (std::size_t k = 0; k < 200; k += 13)
        EXPECT_NEAR(eigenvalue_bisect(t, k), laplacian_eigenvalue(200, k + 1), 1e-11);
    EXPECT_THROW(eigenvalue_bisect(t, 200), Error);
}

TEST(Bisect, LowestIsAscending)
{
    auto const e = eigen_lowest(laplacian(100), 10);
    ASSERT_EQ(e.size(), 10u);
    for (std::size_t k = 0; k < 10; ++k)
        EXPECT_NEAR(e[k], laplacian_eigenvalue(100, k + 1), 1e-12);
}

TEST(Bisect, LowestCountLimit)
{
    EXPECT_THROW(eigen_lowest(laplacian(100), 11), Error);
    EXPECT_THROW(eigen_lowest(laplacian(100), 0), Error);
}

TEST(Eigenvector, SineModesWithNodes)
{
    std::size_t const n = 300;
    auto const t = laplacian(n);
    for (std::size_t k = 0; k < 6; ++k) {
        auto const v = eigenvector(t, eigenvalue_bisect(t, k, 0.0));
        EXPECT_EQ(sign_changes(v), k);
        // Compare with the normalized sine mode.
        double const c = std::sqrt(2.0 / static_cast<double>(n + 1));
        for (std::size_t i = 0; i < n; i += 37) {
            double const want = c * std::sin(static_cast<double>((k + 1) * (i + 1)) * std::numbers::pi /
                                             static_cast<double>(n + 1));
            EXPECT_NEAR(v[i], want, 1e-8);
        }
    }
}

TEST(SignChanges, IgnoresTinyEntries)
{
    std::vector<double> const v{1.0, 1e-12, -1e-12, 0.5, -0.5, 0.0, 0.2};
    EXPECT_EQ(sign_changes(v), 2u);
}
