#ifndef KGBOUND_FORMAT_HPP
#define KGBOUND_FORMAT_HPP

// Fixed number formatting for CSV output and JSON (de)serialization of the
// spectrum tables. CSV numbers carry 12 significant digits; JSON numbers
// round-trip exactly.

#include "levels.hpp"
#include "scalar_linear_mass.hpp"
#include "units.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kgb
{

/// 12 significant digits; scientific notation for nonzero |x| < 1e-3.
inline std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0.0 ? "inf" : "-inf";
    if (x == 0.0)
        return "0";
    char buf[48];
    if (std::abs(x) < 1e-3)
        std::snprintf(buf, sizeof buf, "%.11e", x);
    else
        std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// Quotes a CSV field when it contains a separator, quote or newline.
inline std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_csv_row(std::ostream& os, std::vector<std::string> const& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0)
            os << ',';
        os << csv_field(fields[i]);
    }
    os << '\n';
}

enum class EnergyUnits
{
    rest_energy, ///< energies divided by m0 c^2
    absolute
};

constexpr std::string_view to_string(EnergyUnits u) { return u == EnergyUnits::rest_energy ? "rest-energy" : "absolute"; }

inline EnergyUnits parse_units(std::string_view s)
{
    if (s == "rest-energy" || s == "rest_energy")
        return EnergyUnits::rest_energy;
    if (s == "absolute")
        return EnergyUnits::absolute;
    throw Error(ErrorCode::InvalidArgument, "unknown units '" + std::string(s) + "'");
}

inline double energy_unit(EnergyUnits u, PhysicalConstants const& c)
{
    return u == EnergyUnits::rest_energy ? c.rest_energy : 1.0;
}

/// Energies and residuals expressed in the chosen unit.
inline std::vector<EnergyLevel> in_units(std::vector<EnergyLevel> rows, EnergyUnits u, PhysicalConstants const& c)
{
    double const unit = energy_unit(u, c);
    for (auto& r : rows) {
        r.energy /= unit;
        r.residual /= unit;
    }
    return rows;
}

/// E, E^2 and the (energy^2-valued) residual in the chosen unit.
inline std::vector<scalar::ScalarLevel> in_units(std::vector<scalar::ScalarLevel> rows, EnergyUnits u,
                                                 PhysicalConstants const& c)
{
    double const unit = energy_unit(u, c);
    for (auto& r : rows) {
        r.level.energy /= unit;
        r.level.residual /= unit * unit;
        r.energy_squared /= unit * unit;
    }
    return rows;
}

inline std::vector<std::string> const& level_columns()
{
    static std::vector<std::string> const cols{"n", "l", "branch", "energy", "status", "residual"};
    return cols;
}

inline std::vector<std::string> level_fields(EnergyLevel const& r)
{
    return {std::to_string(r.n),          std::to_string(r.l),   std::string(to_string(r.branch)),
            format_number(r.energy),      std::string(to_string(r.status)), format_number(r.residual)};
}

inline std::vector<std::string> scalar_columns()
{
    auto cols = level_columns();
    cols.push_back("mode");
    cols.push_back("energy_squared");
    return cols;
}

inline std::vector<std::string> level_fields(scalar::ScalarLevel const& r)
{
    auto f = level_fields(r.level);
    f.push_back(std::string(to_string(r.mode)));
    f.push_back(format_number(r.energy_squared));
    return f;
}

inline void to_json(nlohmann::json& j, EnergyLevel const& r)
{
    j = nlohmann::json{{"n", r.n},
                       {"l", r.l},
                       {"branch", std::string(to_string(r.branch))},
                       {"energy", r.energy},
                       {"status", std::string(to_string(r.status))},
                       {"residual", r.residual}};
}

inline void from_json(nlohmann::json const& j, EnergyLevel& r)
{
    r.n = j.at("n").get<unsigned>();
    r.l = j.at("l").get<unsigned>();
    r.branch = parse_branch(j.at("branch").get<std::string>());
    r.energy = j.at("energy").get<double>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.residual = j.at("residual").get<double>();
}

namespace scalar
{

inline void to_json(nlohmann::json& j, ScalarLevel const& r)
{
    kgb::to_json(j, r.level);
    j["mode"] = std::string(to_string(r.mode));
    j["energy_squared"] = r.energy_squared;
}

inline void from_json(nlohmann::json const& j, ScalarLevel& r)
{
    kgb::from_json(j, r.level);
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.energy_squared = j.at("energy_squared").get<double>();
}

} // namespace scalar

} // namespace kgb

#endif // KGBOUND_FORMAT_HPP
