#ifndef KGBOUND_RUN_CONFIG_HPP
#define KGBOUND_RUN_CONFIG_HPP

// Flat key=value run configuration shared by the CLI commands. A config file
// holds one key=value per line ('#' starts a comment); command-line flags are
// applied afterwards and win.

#include "coulomb_mixed.hpp"
#include "error.hpp"
#include "format.hpp"
#include "oracle.hpp"
#include "scalar_linear_mass.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>

namespace kgb
{

enum class ModelKind
{
    mixed,
    scalar_linear
};

constexpr std::string_view to_string(ModelKind m) { return m == ModelKind::mixed ? "mixed" : "scalar-linear"; }

inline ModelKind parse_model(std::string_view s)
{
    if (s == "mixed")
        return ModelKind::mixed;
    if (s == "scalar-linear" || s == "scalar_linear")
        return ModelKind::scalar_linear;
    throw Error(ErrorCode::InvalidArgument, "unknown model '" + std::string(s) + "'");
}

enum class OutputFormat
{
    csv,
    json
};

inline OutputFormat parse_output(std::string_view s)
{
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    throw Error(ErrorCode::InvalidArgument, "unknown output format '" + std::string(s) + "'");
}

inline double parse_real(std::string_view key, std::string_view text)
{
    double v = 0.0;
    auto const* end = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v))
        throw Error(ErrorCode::InvalidArgument, std::string(key) + ": '" + std::string(text) + "' is not a finite number");
    return v;
}

inline unsigned parse_count(std::string_view key, std::string_view text)
{
    unsigned v = 0;
    auto const* end = text.data() + text.size();
    auto const [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw Error(ErrorCode::InvalidArgument,
                    std::string(key) + ": '" + std::string(text) + "' is not a nonnegative integer");
    return v;
}

struct RunConfig
{
    ModelKind model = ModelKind::mixed;
    double q = 0.5;
    double b = 0.0;
    double beta = 1.0;
    double V0 = 0.0;
    double s = 0.0;
    double length_scale = 1.0;
    PhysicalConstants constants;
    unsigned n_max = 3;
    unsigned l_max = 3;
    scalar::SpectrumMode mode = scalar::SpectrumMode::corrected;
    OutputFormat output = OutputFormat::csv;
    EnergyUnits units = EnergyUnits::rest_energy;
    oracle::OracleOptions grid;

    static constexpr std::array<std::string_view, 16> keys{
        "model", "q",     "b",      "beta",  "V0",     "s",      "length_scale", "hbar_c",
        "rest_energy", "n_max", "l_max", "mode", "output", "units", "points", "r_max"};

    /// Parameters that `sweep` may vary.
    static constexpr std::array<std::string_view, 8> sweep_keys{"q",      "b",      "beta",        "V0",
                                                                "s",      "length_scale", "hbar_c", "rest_energy"};

    static bool is_sweep_key(std::string_view key)
    {
        for (auto k : sweep_keys)
            if (k == key)
                return true;
        return false;
    }

    void set(std::string_view key, std::string_view value)
    {
        if (key == "model")
            model = parse_model(value);
        else if (key == "q")
            q = parse_real(key, value);
        else if (key == "b")
            b = parse_real(key, value);
        else if (key == "beta")
            beta = parse_real(key, value);
        else if (key == "V0")
            V0 = parse_real(key, value);
        else if (key == "s")
            s = parse_real(key, value);
        else if (key == "length_scale")
            length_scale = parse_real(key, value);
        else if (key == "hbar_c")
            constants.hbar_c = parse_real(key, value);
        else if (key == "rest_energy")
            constants.rest_energy = parse_real(key, value);
        else if (key == "n_max")
            n_max = parse_count(key, value);
        else if (key == "l_max")
            l_max = parse_count(key, value);
        else if (key == "mode")
            mode = scalar::parse_mode(value);
        else if (key == "output")
            output = parse_output(value);
        else if (key == "units")
            units = parse_units(value);
        else if (key == "points")
            grid.points = parse_count(key, value);
        else if (key == "r_max")
            grid.r_max = parse_real(key, value);
        else
            throw Error(ErrorCode::InvalidArgument, "unknown key '" + std::string(key) + "'");
    }

    void set(std::string_view key, double value)
    {
        char buf[32];
        auto const [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
        set(key, std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
    }

    mixed::MixedCoulombParams mixed_params() const { return {q, b, beta, V0, constants}; }
    scalar::LinearMassParams scalar_params() const { return {s, length_scale, constants}; }

    void check() const
    {
        if (model == ModelKind::mixed)
            mixed_params().check();
        else
            scalar_params().check();
        if (grid.points < 200)
            throw Error(ErrorCode::InvalidArgument, "points must be at least 200");
        if (grid.r_max < 0.0)
            throw Error(ErrorCode::InvalidArgument, "r_max must be >= 0 (0 selects it automatically)");
    }

    /// "key=value" pairs of the model parameters, in a fixed order.
    std::string describe() const
    {
        std::string out = "model=" + std::string(to_string(model));
        auto add = [&](char const* k, double v) { out += std::string(" ") + k + "=" + format_number(v); };
        if (model == ModelKind::mixed) {
            add("q", q);
            add("b", b);
            add("beta", beta);
            add("V0", V0);
        }
        else {
            add("s", s);
            add("length_scale", length_scale);
        }
        add("hbar_c", constants.hbar_c);
        add("rest_energy", constants.rest_energy);
        if (model == ModelKind::scalar_linear)
            out += " mode=" + std::string(to_string(mode));
        out += " units=" + std::string(to_string(units));
        return out;
    }
};

inline std::string_view trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Applies every key=value line of the stream to cfg.
inline void load_config(std::istream& in, RunConfig& cfg)
{
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v = line;
        if (auto const hash = v.find('#'); hash != std::string_view::npos)
            v = v.substr(0, hash);
        v = trim(v);
        if (v.empty())
            continue;
        auto const eq = v.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::InvalidArgument, "config line " + std::to_string(lineno) + ": expected key=value");
        cfg.set(trim(v.substr(0, eq)), trim(v.substr(eq + 1)));
    }
}

inline void load_config_file(std::string const& path, RunConfig& cfg)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open config file '" + path + "'");
    load_config(in, cfg);
}

} // namespace kgb

#endif // KGBOUND_RUN_CONFIG_HPP
