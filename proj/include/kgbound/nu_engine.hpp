#ifndef KGBOUND_NU_ENGINE_HPP
#define KGBOUND_NU_ENGINE_HPP

// Nikiforov-Uvarov solver for hypergeometric-type equations
//
//     psi'' + (tau~(z)/sigma(z)) psi' + (sigma~(z)/sigma(z)^2) psi = 0
//
// with deg tau~ <= 1, deg sigma in {1, 2}, deg sigma~ <= 2. The solver forms
// the radicand under the square root of pi(z), fixes k by requiring a double
// root in z, enumerates the four candidate pi(z), picks the one whose tau(z)
// decreases and whose phi(z) is normalizable, and exposes the eigenvalue
// condition lambda = lambda_n.

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace kgb::nu
{

/// c0 + c1 z + c2 z^2
struct QuadPoly
{
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;

    int degree() const
    {
        if (c2 != 0.0)
            return 2;
        if (c1 != 0.0)
            return 1;
        return 0;
    }

    double operator()(double z) const { return c0 + c1 * z + c2 * z * z; }

    QuadPoly derivative() const { return {c1, 2.0 * c2, 0.0}; }

    double scale() const { return std::max({std::abs(c0), std::abs(c1), std::abs(c2)}); }

    friend QuadPoly operator+(QuadPoly a, QuadPoly const& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
    friend QuadPoly operator-(QuadPoly a, QuadPoly const& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }
    friend QuadPoly operator*(double s, QuadPoly const& a) { return {s * a.c0, s * a.c1, s * a.c2}; }
    friend bool operator==(QuadPoly const&, QuadPoly const&) = default;
};

/// Product of two polynomials of degree <= 1; higher terms are dropped only if
/// both inputs are linear, which is the only use here.
inline QuadPoly square_linear(QuadPoly const& p)
{
    return {p.c0 * p.c0, 2.0 * p.c0 * p.c1, p.c1 * p.c1};
}

/// Coefficientwise closeness relative to the larger coefficient scale.
inline bool nearly_equal(QuadPoly const& a, QuadPoly const& b, double rel_tol = 1e-12)
{
    double const scale = std::max({a.scale(), b.scale(), 1e-300});
    QuadPoly const d = a - b;
    return d.scale() <= rel_tol * scale;
}

struct NUProblem
{
    QuadPoly tau_tilde;
    QuadPoly sigma;
    QuadPoly sigma_tilde;

    void check() const
    {
        if (tau_tilde.degree() > 1)
            throw Error(ErrorCode::InvalidArgument, "tau~ must have degree <= 1");
        if (sigma.degree() < 1)
            throw Error(ErrorCode::InvalidArgument, "sigma must have degree 1 or 2");
        for (double c : {tau_tilde.c0, tau_tilde.c1, sigma.c0, sigma.c1, sigma.c2, sigma_tilde.c0, sigma_tilde.c1,
                         sigma_tilde.c2})
            if (!std::isfinite(c))
                throw Error(ErrorCode::InvalidArgument, "non-finite polynomial coefficient");
    }

    /// sigma = c z with c > 0, the shape both physical models produce.
    bool sigma_through_origin() const { return sigma.c0 == 0.0 && sigma.c2 == 0.0 && sigma.c1 > 0.0; }
};

enum class Sign
{
    plus,
    minus
};

inline char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

struct NUBranch
{
    double k = 0.0;
    QuadPoly pi;
    QuadPoly tau;
    double lambda = 0.0;
    QuadPoly sqrt_radicand;
    Sign sign_choice = Sign::plus;

    double tau_slope() const { return tau.c1; }
};

/// rho(z) = z^rho_power e^{rho_exp_rate z}, phi(z) = z^phi_power e^{phi_exp_rate z}
struct FactorForms
{
    double rho_power = 0.0;
    double rho_exp_rate = 0.0;
    double phi_power = 0.0;
    double phi_exp_rate = 0.0;
};

struct Selection
{
    NUBranch branch;
    /// More than one branch passed the filter; the smallest lambda was kept.
    bool multiple_branches = false;
    std::size_t admissible_count = 0;
};

struct Quantization
{
    double lambda = 0.0;
    double lambda_n = 0.0;

    double mismatch() const { return lambda - lambda_n; }
};

namespace detail
{

/// (sigma' - tau~) / 2, a polynomial of degree <= 1.
inline QuadPoly half_drift(NUProblem const& p)
{
    QuadPoly const d = p.sigma.derivative() - p.tau_tilde;
    return 0.5 * d;
}

/// Radicand coefficients are affine in k: R_k = base + k * sigma.
inline QuadPoly radicand_base(NUProblem const& p)
{
    return square_linear(half_drift(p)) - p.sigma_tilde;
}

} // namespace detail

inline QuadPoly radicand(NUProblem const& problem, double k)
{
    return detail::radicand_base(problem) + k * problem.sigma;
}

/// All real k for which the radicand is a perfect square in z.
inline std::vector<double> solve_k(NUProblem const& problem)
{
    problem.check();
    QuadPoly const base = detail::radicand_base(problem);
    QuadPoly const& slope = problem.sigma;

    double const A0 = base.c2, A1 = slope.c2;
    double const B0 = base.c1, B1 = slope.c1;
    double const C0 = base.c0, C1 = slope.c0;
    double const coef_scale = std::max({base.scale(), slope.scale(), 1e-300});
    double const tiny = 1e-14 * coef_scale;

    // Radicand never quadratic: the z-term has to vanish.
    if (std::abs(A0) <= tiny && std::abs(A1) <= tiny) {
        if (std::abs(B1) <= tiny) {
            if (std::abs(C1) <= tiny && std::abs(B0) <= tiny)
                throw Error(ErrorCode::DegenerateProblem, "radicand does not depend on k");
            if (std::abs(B0) > tiny)
                return {};
            throw Error(ErrorCode::DegenerateProblem, "every k with nonnegative constant term is a solution");
        }
        double const k = -B0 / B1;
        if (C0 + C1 * k < -tiny)
            return {};
        return {k};
    }

    // disc_z(R_k) = (B0 + B1 k)^2 - 4 (A0 + A1 k)(C0 + C1 k) = d2 k^2 + d1 k + d0
    double const d2 = B1 * B1 - 4.0 * A1 * C1;
    double const d1 = 2.0 * B0 * B1 - 4.0 * (A0 * C1 + A1 * C0);
    double const d0 = B0 * B0 - 4.0 * A0 * C0;
    double const d_scale = std::max({std::abs(d2), std::abs(d1), std::abs(d0)});
    if (d_scale == 0.0)
        throw Error(ErrorCode::DegenerateProblem, "radicand is a perfect square for every k");

    std::vector<double> roots;
    if (std::abs(d2) <= 1e-14 * d_scale) {
        if (std::abs(d1) <= 1e-14 * d_scale)
            throw Error(ErrorCode::DegenerateProblem, "discriminant condition does not depend on k");
        roots.push_back(-d0 / d1);
    }
    else {
        double disc = d1 * d1 - 4.0 * d2 * d0;
        double const disc_scale = std::max(d1 * d1, std::abs(4.0 * d2 * d0));
        if (disc < 0.0) {
            if (disc < -1e-13 * disc_scale)
                return {};
            disc = 0.0;
        }
        double const sq = std::sqrt(disc);
        if (sq == 0.0) {
            roots.push_back(-d1 / (2.0 * d2));
        }
        else {
            // Stable pair: no subtraction of nearly equal magnitudes.
            double const qv = -0.5 * (d1 + std::copysign(sq, d1));
            double const r1 = qv / d2;
            double const r2 = qv != 0.0 ? d0 / qv : -r1;
            roots.push_back(std::max(r1, r2));
            roots.push_back(std::min(r1, r2));
        }
    }

    // Keep only k with a real square root (nonnegative leading coefficient).
    std::vector<double> real_roots;
    for (double k : roots) {
        QuadPoly const r = radicand(problem, k);
        double const s = std::max(r.scale(), 1e-300);
        if (r.c2 < -1e-12 * s)
            continue;
        if (std::abs(r.c2) <= 1e-14 * s && r.c0 < -1e-12 * s)
            continue;
        real_roots.push_back(k);
    }
    return real_roots;
}

/// Exact linear square root of R_k with nonnegative leading coefficient.
inline QuadPoly sqrt_radicand(NUProblem const& problem, double k)
{
    QuadPoly const r = radicand(problem, k);
    double const s = std::max(r.scale(), 1e-300);
    if (r.c2 > 1e-14 * s) {
        double const t1 = std::sqrt(r.c2);
        return {r.c1 / (2.0 * t1), t1, 0.0};
    }
    return {std::sqrt(std::max(r.c0, 0.0)), 0.0, 0.0};
}

inline std::vector<NUBranch> branches(NUProblem const& problem)
{
    std::vector<NUBranch> out;
    QuadPoly const half = detail::half_drift(problem);
    for (double k : solve_k(problem)) {
        QuadPoly const root = sqrt_radicand(problem, k);
        for (Sign s : {Sign::plus, Sign::minus}) {
            NUBranch b;
            b.k = k;
            b.sqrt_radicand = root;
            b.sign_choice = s;
            b.pi = s == Sign::plus ? half + root : half - root;
            b.tau = problem.tau_tilde + 2.0 * b.pi;
            b.lambda = k + b.pi.c1;
            out.push_back(b);
        }
    }
    return out;
}

inline FactorForms derive_factors(NUBranch const& branch, NUProblem const& problem)
{
    if (!problem.sigma_through_origin())
        throw Error(ErrorCode::UnsupportedSigma, "factor forms need sigma(z) = c z with c > 0");
    double const c = problem.sigma.c1;
    FactorForms f;
    f.rho_power = (branch.tau.c0 - c) / c;
    f.rho_exp_rate = branch.tau.c1 / c;
    f.phi_power = branch.pi.c0 / c;
    f.phi_exp_rate = branch.pi.c1 / c;
    return f;
}

/// tau' < 0 and, for sigma through the origin, phi vanishing at both ends.
inline bool admissible(NUBranch const& branch, NUProblem const& problem)
{
    double const tol = 1e-12 * std::max(branch.tau.scale(), 1.0);
    if (!(branch.tau_slope() < -tol))
        return false;
    if (problem.sigma_through_origin()) {
        FactorForms const f = derive_factors(branch, problem);
        double const ptol = 1e-12 * std::max(std::abs(branch.pi.c0), 1.0);
        if (!(f.phi_power > ptol) || !(f.phi_exp_rate < 0.0))
            return false;
    }
    return true;
}

inline Selection select(NUProblem const& problem, std::span<NUBranch const> candidates)
{
    if (candidates.empty())
        throw Error(ErrorCode::NoAdmissibleBranch, "no candidate branches");
    Selection sel;
    bool found = false;
    for (NUBranch const& b : candidates) {
        if (!admissible(b, problem))
            continue;
        ++sel.admissible_count;
        if (!found || b.lambda < sel.branch.lambda) {
            sel.branch = b;
            found = true;
        }
    }
    if (!found)
        throw Error(ErrorCode::NoAdmissibleBranch,
                    "none of " + std::to_string(candidates.size()) +
                        " branches has tau' < 0 with a normalizable phi(z)");
    sel.multiple_branches = sel.admissible_count > 1;
    return sel;
}

inline Selection select(NUProblem const& problem)
{
    auto const all = branches(problem);
    return select(problem, all);
}

/// lambda_n = -n tau' - n(n-1) sigma'' / 2
inline Quantization quantize(NUBranch const& branch, NUProblem const& problem, unsigned n)
{
    double const nd = static_cast<double>(n);
    double const sigma_dd = 2.0 * problem.sigma.c2;
    Quantization q;
    q.lambda = branch.lambda;
    q.lambda_n = n == 0 ? 0.0 : -nd * branch.tau_slope() - 0.5 * nd * (nd - 1.0) * sigma_dd;
    return q;
}

} // namespace kgb::nu

#endif // KGBOUND_NU_ENGINE_HPP
