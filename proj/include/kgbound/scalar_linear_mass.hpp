#ifndef KGBOUND_SCALAR_LINEAR_MASS_HPP
#define KGBOUND_SCALAR_LINEAR_MASS_HPP

// Pure scalar Coulomb-like field S = s / r with linear mass m(r) = m0 r / L.
// The radial equation becomes a pseudoharmonic Schroedinger problem
//
//   -u'' + (alpha1^2 r^2 + alpha2 / r^2) u = kappa u,
//   alpha1 = M / (hbar_c L),  alpha2 = (s / hbar_c)^2 + l(l+1),
//   kappa  = (E^2 - 2 M s / L) / hbar_c^2,
//
// solved in z = r^2. Two spectra are offered: a closed form
// (`as_printed`, 2n + 1 + ...) and the form the NU quantization actually
// produces (`corrected`, 4n + 2 + ...).

#include "error.hpp"
#include "levels.hpp"
#include "nu_engine.hpp"
#include "units.hpp"

#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kgb::scalar
{

struct LinearMassParams
{
    double s = 0.0;
    double length_scale = 1.0;
    PhysicalConstants constants;

    void check() const
    {
        constants.check();
        if (!std::isfinite(s))
            throw Error(ErrorCode::InvalidArgument, "s must be finite");
        if (!(length_scale > 0.0) || !std::isfinite(length_scale))
            throw Error(ErrorCode::InvalidArgument,
                        "length_scale must be positive, got " + std::to_string(length_scale));
    }
};

enum class SpectrumMode
{
    as_printed,
    corrected
};

constexpr std::string_view to_string(SpectrumMode m) { return m == SpectrumMode::as_printed ? "as_printed" : "corrected"; }

inline SpectrumMode parse_mode(std::string_view s)
{
    if (s == "as_printed" || s == "as-printed")
        return SpectrumMode::as_printed;
    if (s == "corrected")
        return SpectrumMode::corrected;
    throw Error(ErrorCode::InvalidArgument, "unknown mode '" + std::string(s) + "'");
}

struct DerivedLinear
{
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double Lambda = 0.0;
};

inline DerivedLinear derive(LinearMassParams const& p, unsigned l)
{
    p.check();
    double const Q = p.constants.hbar_c;
    double const ld = l;
    double const sq = p.s / Q;
    DerivedLinear d;
    d.alpha1 = p.constants.rest_energy / (Q * p.length_scale);
    d.alpha2 = sq * sq + ld * (ld + 1.0);
    d.Lambda = 0.5 * (std::sqrt((2.0 * ld + 1.0) * (2.0 * ld + 1.0) + 4.0 * sq * sq) - 1.0);
    return d;
}

/// Signed (2 M s / L - E^2) / hbar_c^2; never square-rooted.
inline double epsilon_squared(LinearMassParams const& p, double energy_squared)
{
    double const Q = p.constants.hbar_c;
    return (2.0 * p.constants.rest_energy * p.s / p.length_scale - energy_squared) / (Q * Q);
}

inline double energy_squared(LinearMassParams const& p, unsigned n, unsigned l, SpectrumMode mode)
{
    DerivedLinear const d = derive(p, l);
    double const M = p.constants.rest_energy;
    double const Q = p.constants.hbar_c;
    double const L = p.length_scale;
    double const root = 2.0 * d.Lambda + 1.0;
    double const ladder = mode == SpectrumMode::as_printed ? 2.0 * n + 1.0 + root : 4.0 * n + 2.0 + root;
    return M * (2.0 * p.s / L + Q / L * ladder);
}

/// tau~ = 1, sigma = 2z, sigma~ = -(alpha1^2 z^2 + eps_sq z + alpha2).
inline nu::NUProblem nu_problem(LinearMassParams const& p, unsigned l, double eps_sq)
{
    DerivedLinear const d = derive(p, l);
    return {{1.0, 0.0, 0.0}, {0.0, 2.0, 0.0}, {-d.alpha2, -eps_sq, -d.alpha1 * d.alpha1}};
}

/// lambda - lambda_n at a given E^2.
inline double nu_mismatch(LinearMassParams const& p, unsigned n, unsigned l, double energy_sq)
{
    nu::NUProblem const prob = nu_problem(p, l, epsilon_squared(p, energy_sq));
    nu::Selection const sel = nu::select(prob);
    return nu::quantize(sel.branch, prob, n).mismatch();
}

/// E^2 from the NU quantization alone. The mismatch is affine in eps^2, so two
/// evaluations pin the root.
inline double energy_squared_nu(LinearMassParams const& p, unsigned n, unsigned l)
{
    p.check();
    double const M = p.constants.rest_energy;
    double const Q = p.constants.hbar_c;
    double const L = p.length_scale;
    double const e0 = 2.0 * M * p.s / L;
    double const e1 = e0 + M * Q / L * 8.0 * (n + l + 2.0);
    double const g0 = nu_mismatch(p, n, l, e0);
    double const g1 = nu_mismatch(p, n, l, e1);
    return e0 - g0 * (e1 - e0) / (g1 - g0);
}

struct ScalarLevel
{
    EnergyLevel level;
    SpectrumMode mode = SpectrumMode::corrected;
    double energy_squared = 0.0;

    friend bool operator==(ScalarLevel const&, ScalarLevel const&) = default;
};

/// Rows ordered by (l, n, branch). Each (n, l) yields the pair +-sqrt(E^2);
/// E^2 < 0 rows are flagged unreal with energy 0. The residual column is the
/// NU quantization mismatch converted to energy^2 units (2 hbar_c^2 |lambda - lambda_n|).
inline std::vector<ScalarLevel> spectrum(LinearMassParams const& p, unsigned n_max, unsigned l_max,
                                         SpectrumMode mode)
{
    p.check();
    double const M = p.constants.rest_energy;
    double const Q = p.constants.hbar_c;
    std::vector<ScalarLevel> rows;
    rows.reserve(2u * (n_max + 1u) * (l_max + 1u));
    for (unsigned l = 0; l <= l_max; ++l) {
        for (unsigned n = 0; n <= n_max; ++n) {
            double const e2 = energy_squared(p, n, l, mode);
            double const residual = 2.0 * Q * Q * std::abs(nu_mismatch(p, n, l, e2));
            LevelStatus status;
            double energy = 0.0;
            if (e2 < 0.0)
                status = LevelStatus::unreal;
            else {
                energy = std::sqrt(e2);
                status = residual < 1e-10 * std::max(M * M, std::abs(e2)) ? LevelStatus::bound
                                                                          : LevelStatus::spurious;
            }
            for (Branch br : {Branch::particle, Branch::antiparticle}) {
                ScalarLevel row;
                row.level.energy = br == Branch::particle ? energy : -energy;
                row.level.branch = br;
                row.level.n = n;
                row.level.l = l;
                row.level.status = status;
                row.level.residual = residual;
                row.mode = mode;
                row.energy_squared = e2;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

struct AnharmonicComparison
{
    double lhs = 0.0; ///< alpha1 (2n + 2 Lambda + 3), the two-step oscillator ladder
    double rhs = 0.0; ///< alpha1 (4n + 2Lambda + 3), from the NU quantization
};

inline AnharmonicComparison anharmonic_check(LinearMassParams const& p, unsigned n, unsigned l)
{
    DerivedLinear const d = derive(p, l);
    return {d.alpha1 * (2.0 * n + 2.0 * d.Lambda + 3.0), d.alpha1 * (4.0 * n + 2.0 + 2.0 * d.Lambda + 1.0)};
}

} // namespace kgb::scalar

#endif // KGBOUND_SCALAR_LINEAR_MASS_HPP
