#include "kgbound/scalar_linear_mass.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace kgb;
using scalar::LinearMassParams;
using scalar::SpectrumMode;

TEST(Derive, Defaults)
{
    auto const d = scalar::derive(LinearMassParams{}, 2);
    EXPECT_EQ(d.alpha1, 1.0);
    EXPECT_EQ(d.alpha2, 6.0);
    EXPECT_NEAR(d.Lambda, 2.0, 1e-15);
}

TEST(Derive, CouplingEntersLambda)
{
    LinearMassParams const p{1.0, 2.0, {}};
    auto const d = scalar::derive(p, 0);
    EXPECT_EQ(d.alpha1, 0.5);
    EXPECT_EQ(d.alpha2, 1.0);
    EXPECT_NEAR(d.Lambda, 0.5 * (std::sqrt(5.0) - 1.0), 1e-15);
    EXPECT_NEAR(d.Lambda * (d.Lambda + 1.0), d.alpha2, 1e-14);
}

TEST(Derive, RejectsBadParameters)
{
    EXPECT_THROW(scalar::derive(LinearMassParams{0.0, 0.0, {}}, 0), Error);
    EXPECT_THROW(scalar::derive(LinearMassParams{NAN, 1.0, {}}, 0), Error);
    EXPECT_THROW(scalar::parse_mode("printed"), Error);
    EXPECT_EQ(scalar::parse_mode("as_printed"), SpectrumMode::as_printed);
}

TEST(EnergySquared, GroundStateBothModes)
{
    LinearMassParams const p{};
    EXPECT_NEAR(scalar::energy_squared(p, 0, 0, SpectrumMode::corrected), 3.0, 1e-15);
    EXPECT_NEAR(scalar::energy_squared(p, 0, 0, SpectrumMode::as_printed), 2.0, 1e-15);
}

TEST(EnergySquared, ModesDifferByTwoNPlusOne)
{
    for (double s : {-0.5, 0.0, 1.0})
        for (unsigned n = 0; n <= 5; ++n)
            for (unsigned l = 0; l <= 3; ++l) {
                LinearMassParams const p{s, 1.0, {}};
                double const diff = scalar::energy_squared(p, n, l, SpectrumMode::corrected) -
                                    scalar::energy_squared(p, n, l, SpectrumMode::as_printed);
                EXPECT_NEAR(diff, 2.0 * n + 1.0, 1e-13);
            }
}

TEST(EnergySquared, WithCoupling)
{
    EXPECT_NEAR(scalar::energy_squared(LinearMassParams{1.0, 1.0, {}}, 0, 0, SpectrumMode::corrected),
                4.0 + std::sqrt(5.0), 1e-14);
}

TEST(EnergySquared, LadderAndSpacing)
{
    LinearMassParams const p{};
    for (unsigned l = 0; l <= 2; ++l)
        EXPECT_NEAR(scalar::energy_squared(p, 0, l, SpectrumMode::corrected), 3.0 + 2.0 * l, 1e-14);
    for (unsigned n = 1; n <= 4; ++n)
        EXPECT_NEAR(scalar::energy_squared(p, n, 1, SpectrumMode::corrected) -
                        scalar::energy_squared(p, n - 1, 1, SpectrumMode::corrected),
                    4.0, 1e-13);
}

TEST(EnergySquared, NuRouteMatchesCorrected)
{
    for (double s : {-0.7, 0.0, 0.3, 2.0})
        for (double L : {0.5, 1.0, 3.0})
            for (unsigned n = 0; n <= 4; ++n)
                for (unsigned l = 0; l <= 3; ++l) {
                    LinearMassParams const p{s, L, {}};
                    double const want = scalar::energy_squared(p, n, l, SpectrumMode::corrected);
                    EXPECT_NEAR(scalar::energy_squared_nu(p, n, l), want, 1e-12 * std::max(1.0, std::abs(want)));
                }
}

TEST(Spectrum, PairsAreSymmetricAndPositive)
{
    for (double s : {-1.0, 0.0, 1.0})
        for (auto mode : {SpectrumMode::corrected, SpectrumMode::as_printed}) {
            auto const rows = scalar::spectrum(LinearMassParams{s, 1.0, {}}, 3, 3, mode);
            ASSERT_EQ(rows.size(), 32u);
            for (std::size_t i = 0; i < rows.size(); i += 2) {
                EXPECT_GT(rows[i].energy_squared, 0.0);
                EXPECT_EQ(rows[i].level.branch, Branch::particle);
                EXPECT_EQ(rows[i + 1].level.energy, -rows[i].level.energy);
                EXPECT_NEAR(rows[i].level.energy * rows[i].level.energy, rows[i].energy_squared, 1e-13);
                EXPECT_EQ(rows[i].mode, mode);
            }
        }
}

TEST(Spectrum, StatusByMode)
{
    for (auto const& r : scalar::spectrum(LinearMassParams{}, 3, 3, SpectrumMode::corrected)) {
        EXPECT_EQ(r.level.status, LevelStatus::bound);
        EXPECT_LT(r.level.residual, 1e-12);
    }
    for (auto const& r : scalar::spectrum(LinearMassParams{}, 3, 3, SpectrumMode::as_printed)) {
        EXPECT_EQ(r.level.status, LevelStatus::spurious);
        EXPECT_NEAR(r.level.residual, 2.0 * r.level.n + 1.0, 1e-12);
    }
}

TEST(Anharmonic, Examples)
{
    LinearMassParams const p{};
    auto const a = scalar::anharmonic_check(p, 1, 0);
    EXPECT_NEAR(a.lhs, 5.0, 1e-14);
    EXPECT_NEAR(a.rhs, 7.0, 1e-14);
    auto const b = scalar::anharmonic_check(p, 2, 1);
    EXPECT_NEAR(b.lhs, 9.0, 1e-14);
    EXPECT_NEAR(b.rhs, 13.0, 1e-14);
}

TEST(Anharmonic, GapIsTwoNAlpha1)
{
    LinearMassParams const p{0.4, 2.0, {}};
    double const a1 = scalar::derive(p, 0).alpha1;
    for (unsigned n = 0; n <= 5; ++n)
        for (unsigned l = 0; l <= 3; ++l) {
            auto const c = scalar::anharmonic_check(p, n, l);
            EXPECT_NEAR(c.rhs - c.lhs, 2.0 * n * a1, 1e-13);
        }
}

TEST(EpsilonSquared, Signed)
{
    LinearMassParams const p{1.0, 1.0, {}};
    EXPECT_EQ(scalar::epsilon_squared(p, 2.0), 0.0);
    EXPECT_EQ(scalar::epsilon_squared(p, 5.0), -3.0);
    EXPECT_EQ(scalar::epsilon_squared(p, 0.0), 2.0);
}
