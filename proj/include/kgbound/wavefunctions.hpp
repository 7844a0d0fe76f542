#ifndef KGBOUND_WAVEFUNCTIONS_HPP
#define KGBOUND_WAVEFUNCTIONS_HPP

// Radial eigenfunctions u(r) = N r^power exp(-decay r^k) L_n^alpha(2 decay r^k)
// with k = 1 for the mixed model and k = 2 for the linear-mass scalar model,
// their normalization, and a finite-difference check that u solves u'' = W u.

#include "coulomb_mixed.hpp"
#include "error.hpp"
#include "levels.hpp"
#include "potential.hpp"
#include "scalar_linear_mass.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kgb::wf
{

enum class Model
{
    mixed,
    scalar_linear
};

constexpr std::string_view to_string(Model m) { return m == Model::mixed ? "mixed" : "scalar-linear"; }

/// Generalized Laguerre polynomial by the three-term recurrence.
inline double laguerre(unsigned n, double alpha, double x)
{
    if (n == 0)
        return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (unsigned k = 2; k <= n; ++k) {
        double const kd = k;
        double const next = ((2.0 * kd - 1.0 + alpha - x) * cur - (kd - 1.0 + alpha) * prev) / kd;
        prev = cur;
        cur = next;
    }
    return cur;
}

struct RadialWavefunction
{
    Model model = Model::mixed;
    unsigned n = 0;
    unsigned l = 0;
    double power = 1.0;
    double decay = 1.0;
    double laguerre_alpha = 0.0;
    unsigned laguerre_n = 0;
    double norm = 1.0;
    double energy = 0.0;

    /// 1 for the mixed model, 2 for the scalar model.
    int radial_order() const { return model == Model::mixed ? 1 : 2; }

    double laguerre_argument(double r) const
    {
        double const rk = radial_order() == 1 ? r : r * r;
        return 2.0 * decay * rk;
    }

    /// u(r) without the normalization constant, assembled in logs so that
    /// large powers and exponents do not overflow separately.
    double shape(double r) const
    {
        if (r <= 0.0)
            return 0.0;
        double const rk = radial_order() == 1 ? r : r * r;
        double const envelope = std::exp(power * std::log(r) - decay * rk);
        if (envelope == 0.0)
            return 0.0;
        return envelope * laguerre(laguerre_n, laguerre_alpha, 2.0 * decay * rk);
    }

    double operator()(double r) const { return norm * shape(r); }

    /// Natural length: 1 / eps for the mixed model, 1 / sqrt(alpha1) for the scalar one.
    double length_scale() const { return radial_order() == 1 ? 1.0 / decay : 1.0 / std::sqrt(2.0 * decay); }
};

/// N = sqrt( n! (2 eps)^{2L+3} / (2 (n+L+1) Gamma(n+2L+2)) ).
inline double norm_closed_mixed(double eps, double L, unsigned n)
{
    double const nd = n;
    double const log_sq = std::lgamma(nd + 1.0) + (2.0 * L + 3.0) * std::log(2.0 * eps) -
                          std::log(2.0 * (nd + L + 1.0)) - std::lgamma(nd + 2.0 * L + 2.0);
    return std::exp(0.5 * log_sq);
}

inline double norm_closed_mixed(mixed::MixedCoulombParams const& p, EnergyLevel const& level)
{
    mixed::DerivedMixed const d = mixed::derive(p, level.n, level.l, level.energy);
    return norm_closed_mixed(d.epsilon, d.effective_L, level.n);
}

/// The as_printed scalar normalization, binomial (n-1 choose n) included.
/// That binomial is 1 at n = 0 and 0 for n >= 1, where the result is +inf.
inline double norm_printed_scalar(scalar::LinearMassParams const& p, unsigned n, unsigned l)
{
    scalar::DerivedLinear const d = scalar::derive(p, l);
    double const binom = n == 0 ? 1.0 : 0.0;
    double const a = d.Lambda + 1.5;
    double const num = 2.0 * std::pow(d.alpha1, a);
    double const den = binom * std::tgamma(a);
    if (den == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::sqrt(num / den);
}

/// N = sqrt(2 alpha1^{Lambda+3/2} n! / Gamma(n + Lambda + 3/2)), the scalar
/// normalization re-derived from the Laguerre orthogonality integral.
inline double norm_rederived_scalar(scalar::LinearMassParams const& p, unsigned n, unsigned l)
{
    scalar::DerivedLinear const d = scalar::derive(p, l);
    double const a = d.Lambda + 1.5;
    double const nd = n;
    return std::exp(0.5 * (std::log(2.0) + a * std::log(d.alpha1) + std::lgamma(nd + 1.0) - std::lgamma(nd + a)));
}

/// N with int_0^inf (N u)^2 dr = 1 by adaptive Gauss-Kronrod on (0, r_cut);
/// wf.norm is ignored.
inline double norm_quadrature(RadialWavefunction const& wf)
{
    if (!(wf.decay > 0.0))
        throw Error(ErrorCode::NonNormalizable, "decay rate " + std::to_string(wf.decay) + " <= 0");
    if (!(wf.power > -0.5))
        throw Error(ErrorCode::NonNormalizable, "power " + std::to_string(wf.power) + " <= -1/2");
    double const k = wf.radial_order();

    // Peak of the envelope r^{2p} e^{-2 d r^k}; the integrand is rescaled by it.
    double const r_peak = std::pow(std::max(wf.power, 1e-3) / (k * wf.decay), 1.0 / k);
    double const log_peak = 2.0 * wf.power * std::log(r_peak) - 2.0 * wf.decay * std::pow(r_peak, k);
    auto integrand = [&](double r) {
        if (r <= 0.0)
            return 0.0;
        double const rk = std::pow(r, k);
        double const lg = laguerre(wf.laguerre_n, wf.laguerre_alpha, 2.0 * wf.decay * rk);
        return std::exp(2.0 * wf.power * std::log(r) - 2.0 * wf.decay * rk - log_peak) * lg * lg;
    };

    // Beyond every Laguerre zero the tail decays monotonically; walk out until
    // it is below 1e-16 of the largest value seen.
    double const x_zeros = 4.0 * wf.laguerre_n + 2.0 * std::abs(wf.laguerre_alpha) + 10.0;
    double const r_zeros = std::pow(x_zeros / (2.0 * wf.decay), 1.0 / k);
    double r_cut = std::max(r_peak, r_zeros);
    double peak = 0.0;
    for (double r = r_cut / 64.0; r <= r_cut; r += r_cut / 64.0)
        peak = std::max(peak, integrand(r));
    while (integrand(r_cut) > 1e-16 * peak || integrand(1.1 * r_cut) > 1e-16 * peak) {
        peak = std::max(peak, integrand(r_cut));
        r_cut *= 1.1;
    }

    // One adaptive pass so the tolerance is relative to the whole integral;
    // per-piece relative targets are unreachable on the far tail.
    double const total =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, r_cut, 20, 1e-13);
    if (!(total > 0.0) || !std::isfinite(total))
        throw Error(ErrorCode::NonNormalizable, "norm integral is " + std::to_string(total));
    return std::exp(-0.5 * (std::log(total) + log_peak));
}

enum class NormSource
{
    closed_form,
    quadrature
};

/// u = N r^{L+1} e^{-eps r} L_n^{2L+1}(2 eps r) for a level marked bound.
inline RadialWavefunction build_mixed(mixed::MixedCoulombParams const& p, EnergyLevel const& level,
                                      NormSource source = NormSource::closed_form)
{
    if (level.status != LevelStatus::bound)
        throw Error(ErrorCode::NotBound, "level n = " + std::to_string(level.n) + ", l = " + std::to_string(level.l) +
                                             " has status " + std::string(to_string(level.status)));
    mixed::DerivedMixed const d = mixed::derive(p, level.n, level.l, level.energy);
    RadialWavefunction w;
    w.model = Model::mixed;
    w.n = level.n;
    w.l = level.l;
    w.power = d.effective_L + 1.0;
    w.decay = d.epsilon;
    w.laguerre_alpha = 2.0 * d.effective_L + 1.0;
    w.laguerre_n = level.n;
    w.energy = level.energy;
    w.norm = source == NormSource::closed_form ? norm_closed_mixed(d.epsilon, d.effective_L, level.n)
                                               : norm_quadrature(w);
    return w;
}

enum class ExponentForm
{
    corrected, ///< r^{Lambda+1}, from z = r^2 back-substitution
    as_printed ///< r^{(Lambda+1)/2}
};

/// u = N e^{-alpha1 r^2 / 2} r^{Lambda+1} L_n^{Lambda+1/2}(alpha1 r^2); N by quadrature.
inline RadialWavefunction build_scalar(scalar::LinearMassParams const& p, unsigned n, unsigned l, double E,
                                       ExponentForm form = ExponentForm::corrected)
{
    if (!std::isfinite(E))
        throw Error(ErrorCode::InvalidArgument, "energy must be finite");
    scalar::DerivedLinear const d = scalar::derive(p, l);
    RadialWavefunction w;
    w.model = Model::scalar_linear;
    w.n = n;
    w.l = l;
    w.power = form == ExponentForm::corrected ? d.Lambda + 1.0 : 0.5 * (d.Lambda + 1.0);
    w.decay = 0.5 * d.alpha1;
    w.laguerre_alpha = 0.5 * (2.0 * d.Lambda + 1.0);
    w.laguerre_n = n;
    w.energy = E;
    w.norm = norm_quadrature(w);
    return w;
}

/// 50 log-spaced points over [0.1, 10] natural lengths.
inline std::vector<double> standard_grid(RadialWavefunction const& w, std::size_t count = 50)
{
    double const len = w.length_scale();
    std::vector<double> r(count);
    for (std::size_t i = 0; i < count; ++i) {
        double const t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
        r[i] = len * std::pow(10.0, -1.0 + 2.0 * t);
    }
    return r;
}

/// max |u'' - W u| / max |u| over the grid, u'' by the five-point stencil
/// with step 1e-3 r.
inline double ode_residual(RadialWavefunction const& w, EffectivePotentialSpec const& W, std::span<double const> grid)
{
    double worst = 0.0;
    double umax = 0.0;
    for (double r : grid) {
        if (!(r > 0.0))
            throw Error(ErrorCode::InvalidArgument, "residual grid must lie in (0, inf)");
        double const h = 1e-3 * r;
        double const u0 = w(r);
        double const d2 = (-w(r + 2.0 * h) + 16.0 * w(r + h) - 30.0 * u0 + 16.0 * w(r - h) - w(r - 2.0 * h)) /
                          (12.0 * h * h);
        worst = std::max(worst, std::abs(d2 - W(r) * u0));
        umax = std::max(umax, std::abs(u0));
    }
    if (!(umax > 0.0))
        throw Error(ErrorCode::DegenerateProblem, "u vanishes on the residual grid");
    return worst / umax;
}

/// u'' = (eps^2 + gamma1/r + gamma2/r^2) u at the wavefunction's energy.
inline double ode_residual(RadialWavefunction const& w, mixed::MixedCoulombParams const& p, double E)
{
    auto const grid = standard_grid(w);
    return ode_residual(w, mixed_residual_operator(p, w.l, E), grid);
}

/// u'' = (alpha1^2 r^2 + alpha2/r^2 - kappa) u at energy E.
inline double ode_residual(RadialWavefunction const& w, scalar::LinearMassParams const& p, double E)
{
    auto const grid = standard_grid(w);
    return ode_residual(w, scalar_residual_operator(p, w.l, E), grid);
}

} // namespace kgb::wf

#endif // KGBOUND_WAVEFUNCTIONS_HPP
