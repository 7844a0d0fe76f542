#ifndef KGBOUND_UNITS_HPP
#define KGBOUND_UNITS_HPP

#include "error.hpp"

#include <cmath>
#include <string>

namespace kgb
{

/// Unit system of a run. Energies are in units of `rest_energy`'s unit,
/// lengths in units of `hbar_c / energy`. Natural units set both to 1, so the
/// Compton-like wavelength is the unit of length.
struct PhysicalConstants
{
    double hbar_c = 1.0;
    double rest_energy = 1.0;

    /// lambda_0 = hbar / (m_0 c), derived and never stored.
    double compton_length() const { return hbar_c / rest_energy; }

    void check() const
    {
        if (!(hbar_c > 0.0) || !std::isfinite(hbar_c))
            throw Error(ErrorCode::InvalidArgument, "hbar_c must be positive, got " + std::to_string(hbar_c));
        if (!(rest_energy > 0.0) || !std::isfinite(rest_energy))
            throw Error(ErrorCode::InvalidArgument,
                        "rest_energy must be positive, got " + std::to_string(rest_energy));
    }
};

} // namespace kgb

#endif // KGBOUND_UNITS_HPP
