#ifndef KGBOUND_POTENTIAL_HPP
#define KGBOUND_POTENTIAL_HPP

#include "coulomb_mixed.hpp"
#include "scalar_linear_mass.hpp"

namespace kgb
{

/// V(r) = c_r2 r^2 + c_inv / r + c_inv2 / r^2 + offset, the operator being -u'' + V u.
struct EffectivePotentialSpec
{
    double c_r2 = 0.0;
    double c_inv = 0.0;
    double c_inv2 = 0.0;
    double offset = 0.0;

    double operator()(double r) const { return c_r2 * r * r + c_inv / r + c_inv2 / (r * r) + offset; }
};

/// Mixed model at trial energy E: c_inv = gamma1(E), c_inv2 = gamma2.
inline EffectivePotentialSpec mixed_potential(mixed::MixedCoulombParams const& p, unsigned l, double E)
{
    return {0.0, mixed::gamma1(p, E + p.V0), mixed::gamma2(p, l), 0.0};
}

/// u'' = W u with W = eps^2 + gamma1/r + gamma2/r^2.
inline EffectivePotentialSpec mixed_residual_operator(mixed::MixedCoulombParams const& p, unsigned l, double E)
{
    EffectivePotentialSpec w = mixed_potential(p, l, E);
    double const eps = mixed::epsilon(p, E + p.V0);
    w.offset = eps * eps;
    return w;
}

inline EffectivePotentialSpec scalar_potential(scalar::LinearMassParams const& p, unsigned l)
{
    scalar::DerivedLinear const d = scalar::derive(p, l);
    return {d.alpha1 * d.alpha1, 0.0, d.alpha2, 0.0};
}

/// u'' = W u with W = alpha1^2 r^2 + alpha2/r^2 - kappa, kappa = -eps_sq.
inline EffectivePotentialSpec scalar_residual_operator(scalar::LinearMassParams const& p, unsigned l, double E)
{
    EffectivePotentialSpec w = scalar_potential(p, l);
    w.offset = scalar::epsilon_squared(p, E * E);
    return w;
}

} // namespace kgb

#endif // KGBOUND_POTENTIAL_HPP
