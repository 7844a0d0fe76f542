#ifndef KGBOUND_COULOMB_MIXED_HPP
#define KGBOUND_COULOMB_MIXED_HPP

// Mixed vector-scalar Coulomb-like fields V = V0 + beta S, S = -hbar_c q / r,
// with the position-dependent mass m(r) = m0 (1 + lambda0 b / r).
//
// The radial equation reduces to u'' = (eps^2 + gamma1/r + gamma2/r^2) u with
//
//   eps^2  = (M^2 - E~^2) / (hbar c)^2,   E~ = E + V0,   M = m0 c^2
//   gamma1 = (2 (b - q) M - 2 q beta E~) / (hbar c)
//   gamma2 = b (b - 2q) + q^2 (1 - beta^2) + l (l + 1)
//
// and the bound-state condition is eps * 2B = -gamma1, B = n + 1/2 + sqrt(gamma2 + 1/4).
// Squaring it gives the closed-form energy pair; back-substitution separates
// genuine levels from squaring artifacts.

#include "error.hpp"
#include "levels.hpp"
#include "nu_engine.hpp"
#include "units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace kgb::mixed
{

struct MixedCoulombParams
{
    double q = 0.0;
    double b = 0.0;
    double beta = 1.0;
    double V0 = 0.0;
    PhysicalConstants constants;

    /// q_v read off from V = V0 + beta S at V0 = 0.
    double vector_coupling() const { return beta * q; }

    void check() const
    {
        constants.check();
        for (double v : {q, b, beta, V0})
            if (!std::isfinite(v))
                throw Error(ErrorCode::InvalidArgument, "mixed-model parameters must be finite");
    }
};

/// V = S (equal magnitude and sign).
inline MixedCoulombParams equal_mix(double q, double b, PhysicalConstants c = {})
{
    return {q, b, 1.0, 0.0, c};
}

/// V = -S (equal magnitude, opposite sign).
inline MixedCoulombParams opposite_mix(double q, double b, PhysicalConstants c = {})
{
    return {q, b, -1.0, 0.0, c};
}

inline MixedCoulombParams constant_mass(double q, double beta, double V0 = 0.0, PhysicalConstants c = {})
{
    return {q, 0.0, beta, V0, c};
}

struct DerivedMixed
{
    double epsilon = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double B = 0.0;
    double effective_L = 0.0;
    double E_tilde = 0.0;
};

/// (l + 1/2)^2 + b(b - 2q) + q^2 (1 - beta^2) = gamma2 + 1/4.
inline double angular_radicand(MixedCoulombParams const& p, unsigned l)
{
    double const lh = l + 0.5;
    return lh * lh + p.b * (p.b - 2.0 * p.q) + p.q * p.q * (1.0 - p.beta * p.beta);
}

inline double gamma2(MixedCoulombParams const& p, unsigned l)
{
    double const ld = l;
    return p.b * (p.b - 2.0 * p.q) + p.q * p.q * (1.0 - p.beta * p.beta) + ld * (ld + 1.0);
}

inline double gamma1(MixedCoulombParams const& p, double E_tilde)
{
    double const M = p.constants.rest_energy;
    return (2.0 * (p.b - p.q) * M - 2.0 * p.q * p.beta * E_tilde) / p.constants.hbar_c;
}

/// Decay rate sqrt(M^2 - E~^2) / hbar c; requires |E~| <= M.
inline double epsilon(MixedCoulombParams const& p, double E_tilde)
{
    double const M = p.constants.rest_energy;
    double const gap = (M - E_tilde) * (M + E_tilde);
    if (gap < 0.0)
        throw Error(ErrorCode::EnergyOutOfWindow,
                    "|E + V0| = " + std::to_string(std::abs(E_tilde)) + " exceeds the rest energy");
    return std::sqrt(gap) / p.constants.hbar_c;
}

/// L of the Laguerre index 2L+1; throws UnrealRadicand when complex.
inline double effective_L(MixedCoulombParams const& p, unsigned l)
{
    double const rad = angular_radicand(p, l);
    if (rad < 0.0)
        throw Error(ErrorCode::UnrealRadicand, "(l+1/2)^2 + b(b-2q) + q^2(1-beta^2) = " + std::to_string(rad) +
                                                   " < 0 for l = " + std::to_string(l));
    return std::sqrt(rad) - 0.5;
}

inline double B_nl(MixedCoulombParams const& p, unsigned n, unsigned l)
{
    return n + 1.0 + effective_L(p, l);
}

inline DerivedMixed derive(MixedCoulombParams const& p, unsigned n, unsigned l, double E)
{
    p.check();
    DerivedMixed d;
    d.effective_L = effective_L(p, l);
    d.B = n + 1.0 + d.effective_L;
    d.gamma2 = gamma2(p, l);
    d.E_tilde = E + p.V0;
    d.epsilon = epsilon(p, d.E_tilde);
    d.gamma1 = gamma1(p, d.E_tilde);
    return d;
}

struct EnergyPair
{
    double plus = 0.0;
    double minus = 0.0;
};

inline EnergyPair candidate_energies(MixedCoulombParams const& p, unsigned n, unsigned l)
{
    p.check();
    double const B = B_nl(p, n, l);
    double const q = p.q, b = p.b, beta = p.beta;
    double const inner = B * B - q * q * (1.0 - beta * beta) - b * (b - 2.0 * q);
    if (inner < 0.0)
        throw Error(ErrorCode::UnrealRadicand, "energy radicand negative for n = " + std::to_string(n));
    double const den = q * q * beta * beta + B * B;
    double const lead = q * (b - q) * beta;
    double const root = B * std::sqrt(inner);
    double const M = p.constants.rest_energy;
    return {-p.V0 + (lead + root) / den * M, -p.V0 + (lead - root) / den * M};
}

namespace detail
{

inline constexpr double threshold_gap = 1e-12;
inline constexpr double bound_residual = 1e-10;

} // namespace detail

/// Back-substitutes E into the unsquared condition eps 2B = -gamma1.
inline EnergyLevel validate(MixedCoulombParams const& p, unsigned n, unsigned l, double E, Branch branch)
{
    p.check();
    double const M = p.constants.rest_energy;
    double const Q = p.constants.hbar_c;
    EnergyLevel level;
    level.energy = E;
    level.branch = branch;
    level.n = n;
    level.l = l;

    double const rad = angular_radicand(p, l);
    double const E_tilde = E + p.V0;
    if (rad < 0.0 || !std::isfinite(E) || std::abs(E_tilde) > M * (1.0 + detail::threshold_gap)) {
        level.status = LevelStatus::unreal;
        level.residual = 0.0;
        return level;
    }
    double const B = n + 0.5 + std::sqrt(rad);
    double const g1 = gamma1(p, E_tilde);
    // The gap is tested on the energy: eps itself is a square root and turns a
    // one-ulp energy error into ~1e-8.
    if (1.0 - std::abs(E_tilde) / M <= detail::threshold_gap) {
        level.status = LevelStatus::threshold;
        level.residual = std::abs(g1) * Q;
        return level;
    }
    double const eps = epsilon(p, E_tilde);
    level.residual = std::abs(eps * 2.0 * B + g1) * Q;
    bool const offset_ok = p.V0 <= -E + M * (1.0 + detail::threshold_gap);
    level.status = (level.residual < detail::bound_residual * M && offset_ok) ? LevelStatus::bound
                                                                              : LevelStatus::spurious;
    return level;
}

/// Rows ordered by (l, n, branch), particle first. Per-row failures are
/// recorded as status = unreal and never abort the table.
inline std::vector<EnergyLevel> spectrum(MixedCoulombParams const& p, unsigned n_max, unsigned l_max)
{
    p.check();
    std::vector<EnergyLevel> rows;
    rows.reserve(2u * (n_max + 1u) * (l_max + 1u));
    for (unsigned l = 0; l <= l_max; ++l) {
        for (unsigned n = 0; n <= n_max; ++n) {
            try {
                EnergyPair const e = candidate_energies(p, n, l);
                rows.push_back(validate(p, n, l, e.plus, Branch::particle));
                rows.push_back(validate(p, n, l, e.minus, Branch::antiparticle));
            }
            catch (Error const& err) {
                if (err.code() != ErrorCode::UnrealRadicand)
                    throw;
                for (Branch br : {Branch::particle, Branch::antiparticle}) {
                    EnergyLevel lv;
                    lv.branch = br;
                    lv.n = n;
                    lv.l = l;
                    lv.status = LevelStatus::unreal;
                    rows.push_back(lv);
                }
            }
        }
    }
    return rows;
}

/// Hypergeometric-type form in z = r: tau~ = 0, sigma = z, sigma~ = -(eps^2 z^2 + gamma1 z + gamma2).
inline nu::NUProblem nu_problem(MixedCoulombParams const& p, unsigned l, double E)
{
    double const E_tilde = E + p.V0;
    double const eps = epsilon(p, E_tilde);
    double const g1 = gamma1(p, E_tilde);
    double const g2 = gamma2(p, l);
    return {{0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {-g2, -g1, -eps * eps}};
}

/// lambda - lambda_n from the NU engine at a trial energy.
inline double nu_mismatch(MixedCoulombParams const& p, unsigned n, unsigned l, double E)
{
    nu::NUProblem const prob = nu_problem(p, l, E);
    nu::Selection const sel = nu::select(prob);
    return nu::quantize(sel.branch, prob, n).mismatch();
}

/// Energies solving lambda = lambda_n, located by scanning the open window
/// |E~| < M and bisecting each sign change. Mechanical route through the NU
/// engine; no closed form is used.
inline std::vector<double> nu_energies(MixedCoulombParams const& p, unsigned n, unsigned l, std::size_t scan = 2000)
{
    p.check();
    if (angular_radicand(p, l) < 0.0)
        throw Error(ErrorCode::UnrealRadicand, "no real branch for l = " + std::to_string(l));
    double const M = p.constants.rest_energy;
    auto g = [&](double E_tilde) { return nu_mismatch(p, n, l, E_tilde - p.V0); };

    std::vector<double> roots;
    double prev_x = 0.0, prev_g = 0.0;
    bool have_prev = false;
    for (std::size_t j = 0; j < scan; ++j) {
        double const x = M * std::cos(std::numbers::pi * (j + 0.5) / static_cast<double>(scan));
        double gx;
        try {
            gx = g(x);
        }
        catch (Error const& e) {
            if (e.code() != ErrorCode::NoAdmissibleBranch)
                throw;
            have_prev = false;
            continue;
        }
        if (have_prev && ((prev_g < 0.0) != (gx < 0.0))) {
            double hi = prev_x, lo = x, ghi = prev_g;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * M; ++it) {
                double const mid = 0.5 * (lo + hi);
                double const gm = g(mid);
                if ((gm < 0.0) == (ghi < 0.0)) {
                    hi = mid;
                    ghi = gm;
                }
                else
                    lo = mid;
            }
            roots.push_back(0.5 * (lo + hi) - p.V0);
        }
        prev_x = x;
        prev_g = gx;
        have_prev = true;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace kgb::mixed

#endif // KGBOUND_COULOMB_MIXED_HPP
