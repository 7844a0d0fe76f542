#ifndef KGBOUND_TRIDIAGONAL_HPP
#define KGBOUND_TRIDIAGONAL_HPP

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace kgb
{

/// Symmetric tridiagonal matrix: diag[0..n), off[0..n-1) with off[i] = T(i, i+1).
struct SymTridiagonal
{
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence of the LDL^T pivots).
inline std::size_t sturm_count(SymTridiagonal const& t, double x)
{
    std::size_t const n = t.size();
    if (n == 0)
        return 0;
    constexpr double pivmin = std::numeric_limits<double>::min() * 1e10;
    std::size_t count = 0;
    double q = t.diag[0] - x;
    if (std::abs(q) < pivmin)
        q = -pivmin;
    if (q < 0.0)
        ++count;
    for (std::size_t i = 1; i < n; ++i) {
        double const e = t.off[i - 1];
        q = t.diag[i] - x - e * e / q;
        if (std::abs(q) < pivmin)
            q = -pivmin;
        if (q < 0.0)
            ++count;
    }
    return count;
}

struct Interval
{
    double lo;
    double hi;
};

inline Interval gershgorin(SymTridiagonal const& t)
{
    std::size_t const n = t.size();
    Interval iv{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0)
            radius += std::abs(t.off[i - 1]);
        if (i + 1 < n)
            radius += std::abs(t.off[i]);
        iv.lo = std::min(iv.lo, t.diag[i] - radius);
        iv.hi = std::max(iv.hi, t.diag[i] + radius);
    }
    return iv;
}

/// The index-th smallest eigenvalue (0-based) by bisection on Sturm counts.
/// Stops once the bracket is below abs_tol or cannot shrink further.
inline double eigenvalue_bisect(SymTridiagonal const& t, std::size_t index, double abs_tol = 1e-12)
{
    if (index >= t.size())
        throw Error(ErrorCode::InvalidArgument, "eigenvalue index " + std::to_string(index) + " out of range");
    Interval iv = gershgorin(t);
    double lo = iv.lo - 1e-12 * std::max(1.0, std::abs(iv.lo));
    double hi = iv.hi + 1e-12 * std::max(1.0, std::abs(iv.hi));
    for (int iter = 0; iter < 400; ++iter) {
        double const mid = 0.5 * (lo + hi);
        if (hi - lo <= abs_tol || mid <= lo || mid >= hi)
            return mid;
        if (sturm_count(t, mid) > index)
            hi = mid;
        else
            lo = mid;
    }
    throw Error(ErrorCode::ConvergenceFailure, "bisection did not converge for eigenvalue index " + std::to_string(index));
}

/// The `count` algebraically smallest eigenvalues, ascending.
inline std::vector<double> eigen_lowest(SymTridiagonal const& t, std::size_t count, double abs_tol = 1e-12)
{
    if (count == 0 || count > t.size() / 10)
        throw Error(ErrorCode::InvalidArgument, "requested " + std::to_string(count) + " eigenvalues of a " +
                                                    std::to_string(t.size()) + "-point system (limit points/10)");
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(eigenvalue_bisect(t, i, abs_tol));
    return out;
}

namespace detail
{

/// Solve (T - shift I) x = b with partial pivoting; T tridiagonal.
inline std::vector<double> shifted_solve(SymTridiagonal const& t, double shift, std::vector<double> b)
{
    std::size_t const n = t.size();
    // Row i of the factor holds u0 (diagonal), u1, u2 (two super-diagonals).
    std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0);
    std::vector<double> sub(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        u0[i] = t.diag[i] - shift;
        if (i + 1 < n) {
            u1[i] = t.off[i];
            sub[i] = t.off[i];
        }
    }
    std::vector<double> mult(n, 0.0);
    std::vector<char> swapped(n, 0);
    constexpr double tiny = 1e-300;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // Eliminate sub[i] (entry (i+1, i)) using rows i and i+1.
        if (std::abs(sub[i]) > std::abs(u0[i])) {
            swapped[i] = 1;
            double const f = u0[i] / sub[i];
            double const r0 = sub[i], r1 = u0[i + 1], r2 = (i + 1 < n - 1) ? u1[i + 1] : 0.0;
            double const s1 = u1[i], s2 = u2[i];
            u0[i] = r0;
            u1[i] = r1;
            u2[i] = r2;
            u0[i + 1] = s1 - f * r1;
            if (i + 1 < n - 1)
                u1[i + 1] = s2 - f * r2;
            mult[i] = f;
            std::swap(b[i], b[i + 1]);
        }
        else {
            double const piv = std::abs(u0[i]) < tiny ? tiny : u0[i];
            double const f = sub[i] / piv;
            u0[i + 1] -= f * u1[i];
            if (i + 1 < n - 1)
                u1[i + 1] -= f * u2[i];
            mult[i] = f;
        }
        b[i + 1] -= mult[i] * b[i];
    }
    std::vector<double> x(n);
    for (std::size_t k = n; k-- > 0;) {
        double s = b[k];
        if (k + 1 < n)
            s -= u1[k] * x[k + 1];
        if (k + 2 < n)
            s -= u2[k] * x[k + 2];
        double const piv = std::abs(u0[k]) < tiny ? tiny : u0[k];
        x[k] = s / piv;
    }
    return x;
}

} // namespace detail

/// Eigenvector of an (accurately known) eigenvalue by inverse iteration,
/// normalized to unit 2-norm with a positive first significant entry.
inline std::vector<double> eigenvector(SymTridiagonal const& t, double eigenvalue)
{
    std::size_t const n = t.size();
    double const norm_scale = std::max(std::abs(gershgorin(t).lo), std::abs(gershgorin(t).hi));
    double const shift = eigenvalue + 1e-13 * std::max(norm_scale, 1.0);
    std::vector<double> x(n, 1.0);
    for (int iter = 0; iter < 3; ++iter) {
        x = detail::shifted_solve(t, shift, x);
        double nrm = 0.0;
        for (double v : x)
            nrm += v * v;
        nrm = std::sqrt(nrm);
        if (!(nrm > 0.0) || !std::isfinite(nrm))
            throw Error(ErrorCode::ConvergenceFailure, "inverse iteration broke down");
        for (double& v : x)
            v /= nrm;
    }
    double maxabs = 0.0;
    for (double v : x)
        maxabs = std::max(maxabs, std::abs(v));
    for (double v : x) {
        if (std::abs(v) > 1e-8 * maxabs) {
            if (v < 0.0)
                for (double& w : x)
                    w = -w;
            break;
        }
    }
    return x;
}

/// Sign changes among entries above rel_threshold * max|v|.
inline std::size_t sign_changes(std::span<double const> v, double rel_threshold = 1e-9)
{
    double maxabs = 0.0;
    for (double x : v)
        maxabs = std::max(maxabs, std::abs(x));
    double const cut = rel_threshold * maxabs;
    std::size_t changes = 0;
    int last = 0;
    for (double x : v) {
        if (std::abs(x) <= cut)
            continue;
        int const s = x > 0.0 ? 1 : -1;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace kgb

#endif // KGBOUND_TRIDIAGONAL_HPP
