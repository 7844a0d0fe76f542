#include "kgbound/coulomb_mixed.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace kgb;
using mixed::MixedCoulombParams;

namespace
{

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    }
    catch (Error const& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

std::vector<MixedCoulombParams> grid()
{
    std::vector<MixedCoulombParams> out;
    for (double q : {0.1, 0.3, 0.5, 0.8})
        for (double b : {0.0, 0.2, 0.5})
            for (double beta : {1.0, -1.0, 0.5})
                for (double V0 : {0.0, 0.1})
                    out.push_back({q, b, beta, V0, {}});
    return out;
}

} // namespace

TEST(Derive, EqualMixGroundState)
{
    auto const d = mixed::derive(mixed::equal_mix(0.5, 0.0), 0, 0, 0.6);
    EXPECT_NEAR(d.gamma2, 0.0, 1e-15);
    EXPECT_NEAR(d.B, 1.0, 1e-15);
    EXPECT_NEAR(d.epsilon, 0.8, 1e-15);
    EXPECT_NEAR(d.gamma1, -1.6, 1e-15);
    EXPECT_NEAR(d.effective_L, 0.0, 1e-15);
}

TEST(Derive, FreeCaseAtThreshold)
{
    auto const d = mixed::derive(MixedCoulombParams{0.0, 0.0, 1.0, 0.0, {}}, 2, 1, 1.0);
    EXPECT_EQ(d.epsilon, 0.0);
    EXPECT_EQ(d.gamma1, 0.0);
    EXPECT_NEAR(d.gamma2, 2.0, 1e-15);
    EXPECT_NEAR(d.B, 4.0, 1e-15);
}

TEST(Derive, MassCouplingCancelsAtTwiceQ)
{
    MixedCoulombParams const p{0.4, 0.8, 1.0, 0.0, {}};
    EXPECT_NEAR(mixed::gamma2(p, 0), 0.0, 1e-15);
    EXPECT_NEAR(mixed::gamma2(p, 2), 6.0, 1e-15);
    // gamma1 = 2 q (M - E~) is nonnegative across the whole window.
    for (double E : {-0.99, 0.0, 0.99})
        EXPECT_GE(mixed::gamma1(p, E), 0.0);
}

TEST(Derive, Errors)
{
    EXPECT_EQ(code_of([] { mixed::effective_L(MixedCoulombParams{0.5, 0.0, 2.0, 0.0, {}}, 0); }),
              ErrorCode::UnrealRadicand);
    EXPECT_EQ(code_of([] { mixed::epsilon(mixed::equal_mix(0.5, 0.0), 1.5); }), ErrorCode::EnergyOutOfWindow);
    EXPECT_EQ(code_of([] { MixedCoulombParams{NAN, 0.0, 1.0, 0.0, {}}.check(); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { MixedCoulombParams{0.5, 0.0, 1.0, 0.0, {1.0, -1.0}}.check(); }),
              ErrorCode::InvalidArgument);
}

TEST(Candidates, EqualMixGroundPair)
{
    auto const e = mixed::candidate_energies(mixed::equal_mix(0.5, 0.0), 0, 0);
    EXPECT_NEAR(e.plus, 0.6, 1e-15);
    EXPECT_NEAR(e.minus, -1.0, 1e-15);
}

TEST(Candidates, EqualMixClosedForm)
{
    for (double q : {0.1, 0.5, 0.9})
        for (unsigned n = 0; n <= 3; ++n)
            for (unsigned l = 0; l <= 3; ++l) {
                double const B = n + l + 1.0;
                EXPECT_NEAR(mixed::candidate_energies(mixed::equal_mix(q, 0.0), n, l).plus,
                            (B * B - q * q) / (B * B + q * q), 1e-14);
            }
}

TEST(Candidates, ZeroCouplingSitsAtThreshold)
{
    auto const e = mixed::candidate_energies(MixedCoulombParams{0.0, 0.0, 1.0, 0.0, {}}, 1, 2);
    EXPECT_NEAR(e.plus, 1.0, 1e-15);
    EXPECT_NEAR(e.minus, -1.0, 1e-15);
}

TEST(Validate, Statuses)
{
    auto const p = mixed::equal_mix(0.5, 0.0);
    EXPECT_EQ(mixed::validate(p, 0, 0, 0.6, Branch::particle).status, LevelStatus::bound);
    EXPECT_LT(mixed::validate(p, 0, 0, 0.6, Branch::particle).residual, 1e-14);
    EXPECT_EQ(mixed::validate(p, 0, 0, -1.0, Branch::antiparticle).status, LevelStatus::threshold);
    EXPECT_EQ(mixed::validate(p, 0, 0, 0.5, Branch::particle).status, LevelStatus::spurious);
    EXPECT_EQ(mixed::validate(p, 0, 0, 1.5, Branch::particle).status, LevelStatus::unreal);
    EXPECT_EQ(mixed::validate(MixedCoulombParams{0.5, 0.0, 2.0, 0.0, {}}, 0, 0, 0.1, Branch::particle).status,
              LevelStatus::unreal);
}

TEST(Spectrum, OrderingAndSize)
{
    auto const rows = mixed::spectrum(mixed::equal_mix(0.5, 0.0), 3, 2);
    ASSERT_EQ(rows.size(), 2u * 4u * 3u);
    std::size_t i = 0;
    for (unsigned l = 0; l <= 2; ++l)
        for (unsigned n = 0; n <= 3; ++n)
            for (Branch br : {Branch::particle, Branch::antiparticle}) {
                EXPECT_EQ(rows[i].l, l);
                EXPECT_EQ(rows[i].n, n);
                EXPECT_EQ(rows[i].branch, br);
                ++i;
            }
}

TEST(Spectrum, DegenerateInNPlusL)
{
    std::map<unsigned, double> by_sum;
    for (auto const& r : mixed::spectrum(mixed::equal_mix(0.3, 0.0), 4, 4)) {
        if (r.branch != Branch::particle)
            continue;
        ASSERT_EQ(r.status, LevelStatus::bound);
        auto [it, fresh] = by_sum.emplace(r.n + r.l, r.energy);
        if (!fresh) {
            EXPECT_NEAR(r.energy, it->second, 1e-14);
        }
    }
}

TEST(Spectrum, ZeroCouplingAllThreshold)
{
    for (auto const& r : mixed::spectrum(MixedCoulombParams{0.0, 0.0, 1.0, 0.0, {}}, 3, 3))
        EXPECT_EQ(r.status, LevelStatus::threshold);
}

TEST(Spectrum, OppositeSignMirrorsEnergies)
{
    auto const up = mixed::spectrum(mixed::equal_mix(0.4, 0.0), 3, 2);
    auto const down = mixed::spectrum(mixed::opposite_mix(0.4, 0.0), 3, 2);
    ASSERT_EQ(up.size(), down.size());
    for (std::size_t i = 0; i + 1 < up.size(); i += 2) {
        EXPECT_NEAR(down[i].energy, -up[i + 1].energy, 1e-14);
        EXPECT_NEAR(down[i + 1].energy, -up[i].energy, 1e-14);
        EXPECT_EQ(down[i + 1].status, up[i].status);
    }
}

TEST(Spectrum, NoBoundLevelsWhenMassCouplingIsTwiceQ)
{
    for (double beta : {1.0, -1.0})
        for (auto const& r : mixed::spectrum(MixedCoulombParams{0.3, 0.6, beta, 0.0, {}}, 7, 3))
            EXPECT_NE(r.status, LevelStatus::bound) << "n=" << r.n << " l=" << r.l;
}

TEST(Spectrum, UnrealRowsDoNotAbort)
{
    auto const rows = mixed::spectrum(MixedCoulombParams{0.5, 0.0, 2.0, 0.0, {}}, 1, 2);
    EXPECT_EQ(rows.size(), 12u);
    EXPECT_EQ(rows[0].status, LevelStatus::unreal);
    EXPECT_EQ(rows[0].energy, 0.0);
}

TEST(Spectrum, BoundResidualsSmallSpuriousLarge)
{
    for (auto const& p : grid())
        for (auto const& r : mixed::spectrum(p, 3, 3)) {
            if (r.status == LevelStatus::bound) {
                EXPECT_LT(r.residual, 1e-10);
            }
            if (r.status == LevelStatus::spurious) {
                EXPECT_GT(r.residual, 1e-3);
            }
        }
}

TEST(Spectrum, ConstantShiftByV0)
{
    auto const base = mixed::spectrum(MixedCoulombParams{0.5, 0.2, 0.5, 0.0, {}}, 3, 2);
    auto const shifted = mixed::spectrum(MixedCoulombParams{0.5, 0.2, 0.5, 0.1, {}}, 3, 2);
    for (std::size_t i = 0; i < base.size(); ++i) {
        EXPECT_NEAR(shifted[i].energy, base[i].energy - 0.1, 1e-14);
        EXPECT_EQ(shifted[i].status, base[i].status);
    }
}

TEST(Spectrum, RestEnergyScalesLinearly)
{
    MixedCoulombParams p{0.5, 0.2, 1.0, 0.0, {1.0, 3.0}};
    auto const big = mixed::spectrum(p, 2, 2);
    p.constants.rest_energy = 1.0;
    auto const unit = mixed::spectrum(p, 2, 2);
    for (std::size_t i = 0; i < big.size(); ++i)
        EXPECT_NEAR(big[i].energy, 3.0 * unit[i].energy, 1e-13);
}

TEST(NuEnergies, AgreeWithBoundLevels)
{
    for (auto const& p : grid())
        for (unsigned l = 0; l <= 2; ++l)
            for (unsigned n = 0; n <= 2; ++n) {
                if (mixed::angular_radicand(p, l) < 0.0) {
                    EXPECT_THROW(mixed::nu_energies(p, n, l), Error);
                    continue;
                }
                std::vector<double> want;
                for (auto const& r : mixed::spectrum(p, n, l))
                    if (r.n == n && r.l == l && r.status == LevelStatus::bound)
                        want.push_back(r.energy);
                std::sort(want.begin(), want.end());
                auto const got = mixed::nu_energies(p, n, l);
                ASSERT_EQ(got.size(), want.size()) << "q=" << p.q << " b=" << p.b << " beta=" << p.beta;
                for (std::size_t i = 0; i < got.size(); ++i)
                    EXPECT_NEAR(got[i], want[i], 1e-12);
            }
}

TEST(NuEnergies, MismatchVanishesAtBoundLevel)
{
    EXPECT_NEAR(mixed::nu_mismatch(mixed::equal_mix(0.5, 0.0), 0, 0, 0.6), 0.0, 1e-14);
    EXPECT_GT(std::abs(mixed::nu_mismatch(mixed::equal_mix(0.5, 0.0), 0, 0, 0.5)), 1e-3);
}
