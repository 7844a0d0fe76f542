#ifndef KGBOUND_ORACLE_HPP
#define KGBOUND_ORACLE_HPP

// Finite-difference eigenvalue oracle for the effective radial equations.
//
// `discretize` is the textbook three-point scheme for -u'' + V u on a uniform
// grid with Dirichlet walls at r_min and r_max. It converges as h^2 only when
// u is smooth at the origin; with a 1/r^2 term u ~ r^p for non-integer p and
// the error degrades to h^(2p-1).
//
// `discretize_regularized` removes that: with p the larger root of
// p(p-1) = c_inv2, write u = r^p v. Then
//
//     -(r^{2p} v')' + r^{2p} (c_r2 r^2 + c_inv / r + offset) v = mu r^{2p} v
//
// has an analytic v. A vertex-centred finite-volume discretization (origin
// half-cell, exact cell moments of the weight) keeps the matrix symmetric
// tridiagonal after diagonal scaling, converges cleanly as h^2, and one
// Richardson step brings the error to ~1e-9.

#include "coulomb_mixed.hpp"
#include "error.hpp"
#include "potential.hpp"
#include "scalar_linear_mass.hpp"
#include "tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace kgb::oracle
{

struct RadialGrid
{
    double r_min = 1e-8;
    double r_max = 40.0;
    std::size_t points = 6000;

    double spacing() const { return (r_max - r_min) / static_cast<double>(points + 1); }
    double node(std::size_t i) const { return r_min + static_cast<double>(i + 1) * spacing(); }

    void check() const
    {
        if (!(r_min > 0.0) || !(r_max > r_min))
            throw Error(ErrorCode::InvalidArgument, "grid needs 0 < r_min < r_max");
        if (points < 200)
            throw Error(ErrorCode::InvalidArgument, "grid needs at least 200 points");
    }
};

/// Diagonal 2/h^2 + V(r_i), off-diagonal -1/h^2 over the interior nodes.
inline SymTridiagonal discretize(EffectivePotentialSpec const& spec, RadialGrid const& grid)
{
    grid.check();
    double const h = grid.spacing();
    double const inv_h2 = 1.0 / (h * h);
    SymTridiagonal t;
    t.diag.resize(grid.points);
    t.off.assign(grid.points - 1, -inv_h2);
    for (std::size_t i = 0; i < grid.points; ++i)
        t.diag[i] = 2.0 * inv_h2 + spec(grid.node(i));
    return t;
}

/// Indicial exponent p = 1/2 + sqrt(1/4 + c_inv2).
inline double indicial_exponent(double c_inv2)
{
    if (1.0 + 4.0 * c_inv2 < 0.0)
        throw Error(ErrorCode::UnsupportedRegime,
                    "1/r^2 coefficient " + std::to_string(c_inv2) + " < -1/4: fall to centre");
    return 0.5 + std::sqrt(std::max(0.25 + c_inv2, 0.0));
}

namespace detail
{

/// Integral of x^m over [x0, x1], m > -1, without cancellation for x0 > 0.
inline double power_moment(double m, double x0, double x1)
{
    double const e = m + 1.0;
    if (x0 <= 0.0)
        return std::pow(x1, e) / e;
    return std::pow(x0, e) * std::expm1(e * std::log1p((x1 - x0) / x0)) / e;
}

} // namespace detail

/// Regularized system on nodes r_i = i h, i = 0..points-1, h = r_max / points,
/// Dirichlet at r_max. Entries are formed from ratios normalized by each
/// node's own r^{2p}, so nothing overflows for large p or r_max.
inline SymTridiagonal discretize_regularized(EffectivePotentialSpec const& spec, double r_max, std::size_t points)
{
    if (!(r_max > 0.0) || points < 200)
        throw Error(ErrorCode::InvalidArgument, "regularized grid needs r_max > 0 and >= 200 points");
    double const p = indicial_exponent(spec.c_inv2);
    double const tp = 2.0 * p;
    double const h = r_max / static_cast<double>(points);
    std::size_t const n = points;

    auto scale_of = [&](std::size_t i) { return i == 0 ? h : static_cast<double>(i) * h; };

    std::vector<double> mass(n), pot(n);
    for (std::size_t i = 0; i < n; ++i) {
        double const a = scale_of(i);
        double const r = static_cast<double>(i) * h;
        double const x0 = std::max(r - 0.5 * h, 0.0) / a;
        double const x1 = (r + 0.5 * h) / a;
        mass[i] = a * detail::power_moment(tp, x0, x1);
        double v = spec.offset * mass[i];
        if (spec.c_r2 != 0.0)
            v += spec.c_r2 * a * a * a * detail::power_moment(tp + 2.0, x0, x1);
        if (spec.c_inv != 0.0)
            v += spec.c_inv * detail::power_moment(tp - 1.0, x0, x1);
        pot[i] = v;
    }

    SymTridiagonal t;
    t.diag.assign(n, 0.0);
    t.off.assign(n - 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double const a = scale_of(i);
        double const f_right = (static_cast<double>(i) + 0.5) * h;
        double flux = std::pow(f_right / a, tp);
        if (i > 0)
            flux += std::pow((static_cast<double>(i) - 0.5) * h / a, tp);
        t.diag[i] = flux / (h * mass[i]) + pot[i] / mass[i];
        if (i + 1 < n) {
            double const b = scale_of(i + 1);
            double const w = std::exp(tp * std::log(f_right) - p * std::log(a) - p * std::log(b));
            t.off[i] = -w / (h * std::sqrt(mass[i] * mass[i + 1]));
        }
    }
    return t;
}

/// n-th eigenvalue of -u'' + V u on (0, r_max) from the regularized scheme,
/// optionally Richardson-extrapolated from points and 2 * points.
inline double regularized_eigenvalue(EffectivePotentialSpec const& spec, double r_max, std::size_t points,
                                     unsigned n, bool richardson = true)
{
    double const coarse = eigenvalue_bisect(discretize_regularized(spec, r_max, points), n, 0.0);
    if (!richardson)
        return coarse;
    double const fine = eigenvalue_bisect(discretize_regularized(spec, r_max, 2 * points), n, 0.0);
    return (4.0 * fine - coarse) / 3.0;
}

struct OracleOptions
{
    std::size_t points = 6000;
    /// Outer wall in the solver's scaled length unit; 0 selects it automatically.
    double r_max = 0.0;
    bool richardson = true;
    std::size_t scan_points = 2000;
};

struct ScanSample
{
    double energy = 0.0;
    double f = 0.0;
};

/// NoBracket together with the scanned table of f(E).
class NoBracketError : public Error
{
  public:
    NoBracketError(std::string const& what, std::vector<ScanSample> scan)
        : Error(ErrorCode::NoBracket, what)
        , scan_(std::move(scan))
    {
    }

    std::vector<ScanSample> const& scan() const { return scan_; }

  private:
    std::vector<ScanSample> scan_;
};

struct MixedSolution
{
    std::vector<double> energies; ///< ascending
    double unit_eigenvalue = 0.0; ///< mu_n at gamma1 = -1
    double r_max = 0.0;           ///< scaled units (1 / |gamma1|)
    std::vector<ScanSample> scan;
};

/// mu_n of -u'' + (-1/r + gamma2/r^2) u, the Coulomb coupling scaled to one:
/// mu_n(gamma1) = gamma1^2 mu_n(-1) for gamma1 < 0.
inline std::pair<double, double> unit_coulomb_eigenvalue(double g2, unsigned n, OracleOptions const& opt)
{
    EffectivePotentialSpec const spec{0.0, -1.0, g2, 0.0};
    double r_max = opt.r_max;
    if (r_max <= 0.0) {
        r_max = 40.0;
        for (int iter = 0; iter < 12; ++iter) {
            double const mu = regularized_eigenvalue(spec, r_max, std::max<std::size_t>(opt.points / 4, 400), n, false);
            if (mu >= 0.0) {
                r_max *= 2.0;
                continue;
            }
            double const target = std::max(40.0, 40.0 / std::sqrt(-mu));
            if (target <= r_max * 1.05)
                break;
            r_max = target;
        }
    }
    return {regularized_eigenvalue(spec, r_max, opt.points, n, opt.richardson), r_max};
}

/// Roots of f(E) = mu_n(E) + eps(E)^2 inside the open window |E + V0| < M,
/// each bisected to 1e-13 M.
inline MixedSolution solve_modelA(mixed::MixedCoulombParams const& p, unsigned n, unsigned l,
                                  OracleOptions const& opt = {})
{
    p.check();
    double const g2 = mixed::gamma2(p, l);
    if (1.0 + 4.0 * g2 < 0.0)
        throw Error(ErrorCode::UnsupportedRegime, "1 + 4 gamma2 = " + std::to_string(1.0 + 4.0 * g2) + " < 0");
    MixedSolution sol;
    std::tie(sol.unit_eigenvalue, sol.r_max) = unit_coulomb_eigenvalue(g2, n, opt);
    double const mu_hat = sol.unit_eigenvalue;
    double const M = p.constants.rest_energy;
    double const Q = p.constants.hbar_c;

    auto f = [&](double E_tilde) {
        double const eps_sq = (M - E_tilde) * (M + E_tilde) / (Q * Q);
        double const g1 = mixed::gamma1(p, E_tilde);
        // gamma1 >= 0: the operator is nonnegative and its spectrum starts at 0.
        double const mu = g1 < 0.0 ? g1 * g1 * mu_hat : 0.0;
        return mu + eps_sq;
    };

    std::size_t const S = std::max<std::size_t>(opt.scan_points, 16);
    sol.scan.reserve(S);
    for (std::size_t j = 0; j < S; ++j) {
        double const x = M * std::cos(std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(S));
        sol.scan.push_back({x - p.V0, f(x)});
    }
    for (std::size_t j = 1; j < S; ++j) {
        double const fa = sol.scan[j - 1].f, fb = sol.scan[j].f;
        if ((fa < 0.0) == (fb < 0.0))
            continue;
        double hi = sol.scan[j - 1].energy + p.V0, lo = sol.scan[j].energy + p.V0;
        double fhi = fa;
        for (int it = 0; it < 200 && hi - lo > 1e-13 * M; ++it) {
            double const mid = 0.5 * (lo + hi);
            double const fm = f(mid);
            if ((fm < 0.0) == (fhi < 0.0)) {
                hi = mid;
                fhi = fm;
            }
            else
                lo = mid;
        }
        sol.energies.push_back(0.5 * (lo + hi) - p.V0);
    }
    if (sol.energies.empty())
        throw NoBracketError("f(E) has no sign change for n = " + std::to_string(n) + ", l = " + std::to_string(l),
                             sol.scan);
    std::sort(sol.energies.begin(), sol.energies.end());
    return sol;
}

/// E^2 = kappa_n hbar_c^2 + 2 M s / L with kappa_n the n-th eigenvalue of the
/// pseudoharmonic problem, computed in x = sqrt(alpha1) r (kappa = alpha1 kappa_hat).
inline double solve_modelB(scalar::LinearMassParams const& p, unsigned n, unsigned l, OracleOptions const& opt = {})
{
    scalar::DerivedLinear const d = scalar::derive(p, l);
    EffectivePotentialSpec const spec{1.0, 0.0, d.alpha2, 0.0};
    double const x_max = opt.r_max > 0.0 ? opt.r_max : 12.0;
    double const kappa_hat = regularized_eigenvalue(spec, x_max, opt.points, n, opt.richardson);
    double const Q = p.constants.hbar_c;
    return d.alpha1 * kappa_hat * Q * Q + 2.0 * p.constants.rest_energy * p.s / p.length_scale;
}

} // namespace kgb::oracle

#endif // KGBOUND_ORACLE_HPP
