#include "kgbound/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>

using namespace kgb;
using oracle::RadialGrid;

TEST(Discretize, ParticleInABox)
{
    auto const e = eigen_lowest(oracle::discretize({}, RadialGrid{1e-8, std::numbers::pi, 4000}), 3);
    for (unsigned k = 0; k < 3; ++k)
        EXPECT_NEAR(e[k], (k + 1.0) * (k + 1.0), 1e-4);
}

TEST(Discretize, HydrogenLike)
{
    EffectivePotentialSpec const coulomb{0.0, -2.0, 0.0, 0.0};
    auto const e = eigen_lowest(oracle::discretize(coulomb, RadialGrid{1e-8, 40.0, 4000}), 3);
    for (unsigned n = 0; n < 3; ++n)
        EXPECT_NEAR(e[n], -1.0 / ((n + 1.0) * (n + 1.0)), 1e-3);
}

TEST(Discretize, OddOscillatorStates)
{
    EffectivePotentialSpec const osc{1.0, 0.0, 0.0, 0.0};
    auto const e = eigen_lowest(oracle::discretize(osc, RadialGrid{1e-8, 12.0, 4000}), 3);
    EXPECT_NEAR(e[0], 3.0, 1e-4);
    EXPECT_NEAR(e[1], 7.0, 1e-4);
    EXPECT_NEAR(e[2], 11.0, 1e-4);
}

TEST(Discretize, InvalidGrid)
{
    EXPECT_THROW(oracle::discretize({}, RadialGrid{0.0, 1.0, 1000}), Error);
    EXPECT_THROW(oracle::discretize({}, RadialGrid{1e-8, 1.0, 100}), Error);
    EXPECT_THROW(oracle::discretize_regularized({}, -1.0, 1000), Error);
}

TEST(Regularized, CentrifugalHydrogen)
{
    // -u'' - 2/r u + l(l+1)/r^2 u: eigenvalues -1/(n+l+1)^2.
    for (unsigned l = 0; l <= 3; ++l) {
        EffectivePotentialSpec const spec{0.0, -2.0, l * (l + 1.0), 0.0};
        for (unsigned n = 0; n <= 2; ++n) {
            double const N = n + l + 1.0;
            EXPECT_NEAR(oracle::regularized_eigenvalue(spec, 12.0 * N * N / 2.0 + 40.0, 3000, n), -1.0 / (N * N),
                        1e-8);
        }
    }
}

TEST(Regularized, FallToCentre)
{
    EXPECT_NO_THROW(oracle::indicial_exponent(-0.25));
    try {
        oracle::indicial_exponent(-0.3);
        FAIL() << "expected UnsupportedRegime";
    }
    catch (Error const& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedRegime);
    }
    mixed::MixedCoulombParams const p{0.5, 0.0, 1.8, 0.0, {}};
    ASSERT_LT(1.0 + 4.0 * mixed::gamma2(p, 0), 0.0);
    EXPECT_THROW(oracle::solve_modelA(p, 0, 0), Error);
}

TEST(ModelB, PseudoharmonicLadder)
{
    scalar::LinearMassParams const p{};
    EXPECT_NEAR(oracle::solve_modelB(p, 0, 0), 3.0, 1e-8);
    EXPECT_NEAR(oracle::solve_modelB(p, 0, 1), 5.0, 1e-8);
    EXPECT_NEAR(oracle::solve_modelB(scalar::LinearMassParams{1.0, 1.0, {}}, 0, 0), 4.0 + std::sqrt(5.0), 1e-8);
}

TEST(ModelA, EqualMixGround)
{
    auto const sol = oracle::solve_modelA(mixed::equal_mix(0.5, 0.0), 0, 0);
    ASSERT_EQ(sol.energies.size(), 1u);
    EXPECT_NEAR(sol.energies[0], 0.6, 1e-8);
    EXPECT_NEAR(sol.unit_eigenvalue, -0.25, 1e-8);
    EXPECT_EQ(sol.scan.size(), 2000u);
}

TEST(ModelA, MatchesClosedFormOppositeMix)
{
    mixed::MixedCoulombParams const p{0.3, 0.5, -1.0, 0.0, {}};
    for (unsigned l = 0; l <= 1; ++l)
        for (unsigned n = 0; n <= 2; ++n) {
            auto const sol = oracle::solve_modelA(p, n, l);
            for (auto const& r : mixed::spectrum(p, n, l))
                if (r.n == n && r.l == l && r.status == LevelStatus::bound) {
                    ASSERT_EQ(sol.energies.size(), 1u);
                    EXPECT_NEAR(sol.energies[0], r.energy, 1e-8);
                }
        }
}

TEST(ModelA, ZeroCouplingHasNoBracket)
{
    try {
        oracle::solve_modelA(mixed::MixedCoulombParams{0.0, 0.0, 1.0, 0.0, {}}, 0, 0);
        FAIL() << "expected NoBracket";
    }
    catch (oracle::NoBracketError const& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoBracket);
        EXPECT_EQ(e.scan().size(), 2000u);
        for (auto const& s : e.scan())
            EXPECT_GE(s.f, 0.0);
    }
}

TEST(ModelA, BitwiseDeterministic)
{
    mixed::MixedCoulombParams const p{0.5, 0.2, 0.5, 0.1, {}};
    auto const a = oracle::solve_modelA(p, 1, 1);
    auto const b = oracle::solve_modelA(p, 1, 1);
    ASSERT_EQ(a.energies.size(), b.energies.size());
    for (std::size_t i = 0; i < a.energies.size(); ++i)
        EXPECT_EQ(std::memcmp(&a.energies[i], &b.energies[i], sizeof(double)), 0);
}
