// kgbound: spectra, wavefunctions, NU branch inspection, verification reports
// and parameter sweeps for the Klein-Gordon Coulomb-like models.
//
// Exit codes: 0 success, 1 a verification check failed, 2 invalid parameters
// or usage, 3 the requested level is not bound.

#include "kgbound/coulomb_mixed.hpp"
#include "kgbound/format.hpp"
#include "kgbound/nu_engine.hpp"
#include "kgbound/run_config.hpp"
#include "kgbound/scalar_linear_mass.hpp"
#include "kgbound/verify.hpp"
#include "kgbound/wavefunctions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{

using nlohmann::json;
using namespace kgb;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_not_bound = 3;

/// Raw flag values of one subcommand, keyed by config key.
struct Flags
{
    std::string config_file;
    std::map<std::string, std::string> raw;
    std::map<std::string, CLI::Option*> options;
};

void add_config_flags(CLI::App& app, Flags& f)
{
    app.add_option("--config", f.config_file, "key=value config file; flags override it");
    struct Spec
    {
        char const* flag;
        char const* key;
        char const* help;
    };
    static Spec const specs[] = {
        {"--model", "model", "mixed | scalar-linear"},
        {"--q", "q", "Coulomb coupling q (mixed)"},
        {"--b", "b", "mass-shape parameter b (mixed)"},
        {"--beta", "beta", "mixing ratio V = V0 + beta S (mixed)"},
        {"--V0,--v0", "V0", "constant vector offset (mixed)"},
        {"--s", "s", "scalar coupling s (scalar-linear)"},
        {"--length-scale", "length_scale", "mass length scale L (scalar-linear)"},
        {"--hbar-c", "hbar_c", "hbar c"},
        {"--rest-energy", "rest_energy", "m0 c^2"},
        {"--n-max", "n_max", "largest radial quantum number"},
        {"--l-max", "l_max", "largest orbital quantum number"},
        {"--mode", "mode", "corrected | as_printed (scalar-linear)"},
        {"--output", "output", "csv | json"},
        {"--units", "units", "rest-energy | absolute"},
        {"--points", "points", "oracle grid points"},
        {"--grid-r-max", "r_max", "oracle outer wall (0 = automatic)"},
    };
    for (auto const& s : specs)
        f.options[s.key] = app.add_option(s.flag, f.raw[s.key], s.help);
}

RunConfig resolve(Flags const& f)
{
    RunConfig cfg;
    if (!f.config_file.empty())
        load_config_file(f.config_file, cfg);
    for (auto const& [key, opt] : f.options)
        if (opt->count() > 0)
            cfg.set(key, f.raw.at(key));
    cfg.check();
    return cfg;
}

json parameters_json(RunConfig const& cfg)
{
    json p;
    if (cfg.model == ModelKind::mixed) {
        p["q"] = cfg.q;
        p["b"] = cfg.b;
        p["beta"] = cfg.beta;
        p["V0"] = cfg.V0;
    }
    else {
        p["s"] = cfg.s;
        p["length_scale"] = cfg.length_scale;
        p["mode"] = std::string(to_string(cfg.mode));
    }
    p["hbar_c"] = cfg.constants.hbar_c;
    p["rest_energy"] = cfg.constants.rest_energy;
    return p;
}

json envelope(std::string const& command, RunConfig const& cfg)
{
    return json{{"schema", 1},
                {"command", command},
                {"model", std::string(to_string(cfg.model))},
                {"parameters", parameters_json(cfg)},
                {"units", std::string(to_string(cfg.units))}};
}

void csv_preamble(std::ostream& os, std::string const& command, RunConfig const& cfg)
{
    os << "# schema=1\n";
    os << "# command=" << command << ' ' << cfg.describe() << '\n';
}

// ---- spectrum ----------------------------------------------------------------

struct SpectrumTable
{
    std::vector<EnergyLevel> mixed;
    std::vector<scalar::ScalarLevel> scalar;
};

SpectrumTable compute_spectrum(RunConfig const& cfg)
{
    SpectrumTable t;
    if (cfg.model == ModelKind::mixed)
        t.mixed = in_units(mixed::spectrum(cfg.mixed_params(), cfg.n_max, cfg.l_max), cfg.units, cfg.constants);
    else
        t.scalar = in_units(scalar::spectrum(cfg.scalar_params(), cfg.n_max, cfg.l_max, cfg.mode), cfg.units,
                            cfg.constants);
    return t;
}

std::vector<std::string> spectrum_columns(RunConfig const& cfg)
{
    return cfg.model == ModelKind::mixed ? level_columns() : scalar_columns();
}

void write_rows(std::ostream& os, SpectrumTable const& t, std::vector<std::string> const& prefix = {})
{
    auto emit = [&](std::vector<std::string> fields) {
        fields.insert(fields.begin(), prefix.begin(), prefix.end());
        write_csv_row(os, fields);
    };
    for (auto const& r : t.mixed)
        emit(level_fields(r));
    for (auto const& r : t.scalar)
        emit(level_fields(r));
}

json rows_json(SpectrumTable const& t)
{
    return t.scalar.empty() ? json(t.mixed) : json(t.scalar);
}

int cmd_spectrum(RunConfig const& cfg, std::ostream& os)
{
    SpectrumTable const t = compute_spectrum(cfg);
    if (cfg.output == OutputFormat::json) {
        json j = envelope("spectrum", cfg);
        j["rows"] = cfg.model == ModelKind::mixed ? json(t.mixed) : json(t.scalar);
        os << j.dump(2) << '\n';
        return exit_ok;
    }
    csv_preamble(os, "spectrum", cfg);
    write_csv_row(os, spectrum_columns(cfg));
    write_rows(os, t);
    return exit_ok;
}

// ---- wavefunction ------------------------------------------------------------

struct WavefunctionArgs
{
    unsigned n = 0;
    unsigned l = 0;
    std::string branch = "particle";
    std::size_t samples = 100;
    double r_min = 0.0;
    double r_max = 0.0;
    bool with_u2 = false;
    std::string exponent = "corrected";
};

int cmd_wavefunction(RunConfig const& cfg, WavefunctionArgs const& a, std::ostream& os)
{
    Branch const branch = parse_branch(a.branch);
    EnergyLevel level;
    wf::RadialWavefunction w;
    if (cfg.model == ModelKind::mixed) {
        auto const p = cfg.mixed_params();
        mixed::EnergyPair pair;
        try {
            pair = mixed::candidate_energies(p, a.n, a.l);
        }
        catch (Error const& e) {
            if (e.code() != ErrorCode::UnrealRadicand)
                throw;
            throw Error(ErrorCode::NotBound, e.what());
        }
        level = mixed::validate(p, a.n, a.l, branch == Branch::particle ? pair.plus : pair.minus, branch);
        w = wf::build_mixed(p, level, wf::NormSource::quadrature);
    }
    else {
        auto const p = cfg.scalar_params();
        scalar::ScalarLevel found;
        for (auto const& r : scalar::spectrum(p, a.n, a.l, cfg.mode))
            if (r.level.n == a.n && r.level.l == a.l && r.level.branch == branch)
                found = r;
        level = found.level;
        if (level.status != LevelStatus::bound)
            throw Error(ErrorCode::NotBound, "scalar level n = " + std::to_string(a.n) + ", l = " +
                                                 std::to_string(a.l) + " has status " +
                                                 std::string(to_string(level.status)));
        wf::ExponentForm form;
        if (a.exponent == "corrected")
            form = wf::ExponentForm::corrected;
        else if (a.exponent == "as_printed" || a.exponent == "as-printed")
            form = wf::ExponentForm::as_printed;
        else
            throw Error(ErrorCode::InvalidArgument, "unknown exponent form '" + a.exponent + "'");
        w = wf::build_scalar(p, a.n, a.l, level.energy, form);
    }

    // Default window: a hundredth of a natural length out to past the last node.
    double const len = w.length_scale();
    double const reach = 4.0 * a.n + 2.0 * w.power + 10.0;
    double const r_lo = a.r_min > 0.0 ? a.r_min : 0.01 * len;
    double const r_hi = a.r_max > 0.0 ? a.r_max : (w.radial_order() == 1 ? reach : std::sqrt(reach)) * len;
    if (!(r_hi > r_lo))
        throw Error(ErrorCode::InvalidArgument, "sampling window needs 0 < r_min < r_max");
    std::vector<double> r(a.samples);
    for (std::size_t i = 0; i < a.samples; ++i) {
        double const t = a.samples == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(a.samples - 1);
        r[i] = r_lo * std::pow(r_hi / r_lo, t);
    }

    double const unit = energy_unit(cfg.units, cfg.constants);
    if (cfg.output == OutputFormat::json) {
        json j = envelope("wavefunction", cfg);
        j["level"] = {{"n", a.n},
                      {"l", a.l},
                      {"branch", std::string(to_string(branch))},
                      {"energy", level.energy / unit},
                      {"status", std::string(to_string(level.status))}};
        j["wavefunction"] = {{"power", w.power},
                             {"decay", w.decay},
                             {"laguerre_alpha", w.laguerre_alpha},
                             {"laguerre_n", w.laguerre_n},
                             {"norm", w.norm}};
        json samples = json::array();
        for (double x : r) {
            double const u = w(x);
            json s{{"r", x}, {"u", u}};
            if (a.with_u2)
                s["u2"] = u * u;
            samples.push_back(s);
        }
        j["samples"] = samples;
        os << j.dump(2) << '\n';
        return exit_ok;
    }
    csv_preamble(os, "wavefunction", cfg);
    os << "# n=" << a.n << '\n';
    os << "# l=" << a.l << '\n';
    os << "# branch=" << to_string(branch) << '\n';
    os << "# E=" << format_number(level.energy / unit) << '\n';
    os << "# N=" << format_number(w.norm) << '\n';
    os << "# power=" << format_number(w.power) << '\n';
    os << "# decay=" << format_number(w.decay) << '\n';
    os << "# laguerre_alpha=" << format_number(w.laguerre_alpha) << '\n';
    write_csv_row(os, a.with_u2 ? std::vector<std::string>{"r", "u", "u2"} : std::vector<std::string>{"r", "u"});
    for (double x : r) {
        double const u = w(x);
        std::vector<std::string> fields{format_number(x), format_number(u)};
        if (a.with_u2)
            fields.push_back(format_number(u * u));
        write_csv_row(os, fields);
    }
    return exit_ok;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(RunConfig const& cfg, bool details, std::ostream& os)
{
    verify::Report report;
    if (cfg.model == ModelKind::mixed) {
        report = verify::run_mixed_suite(cfg.grid);
        report.checks.push_back(verify::check_mixed_config(cfg.mixed_params(), std::min(cfg.n_max, 2u),
                                                           std::min(cfg.l_max, 2u), cfg.grid));
    }
    else {
        report = verify::run_scalar_suite(cfg.mode, cfg.grid);
        report.checks.push_back(
            verify::check_scalar_config(cfg.scalar_params(), cfg.n_max, cfg.l_max, cfg.mode, cfg.grid));
    }
    bool const ok = report.all_passed();

    if (cfg.output == OutputFormat::json) {
        json j = envelope("verify", cfg);
        j["passed"] = ok;
        json checks = json::array();
        for (auto const& c : report.checks) {
            json jc{{"criterion", c.criterion}, {"check", c.name},       {"tolerance", c.tolerance},
                    {"observed", c.observed},   {"passed", c.passed},    {"informational", c.informational},
                    {"detail", c.detail}};
            if (details) {
                json cmp = json::array();
                for (auto const& x : c.comparisons)
                    cmp.push_back({{"case", x.label},
                                   {"reference", x.reference},
                                   {"value", x.value},
                                   {"abs_dev", x.abs_dev},
                                   {"rel_dev", x.rel_dev},
                                   {"tolerance", x.tolerance},
                                   {"passed", x.passed}});
                jc["comparisons"] = cmp;
            }
            checks.push_back(jc);
        }
        j["checks"] = checks;
        os << j.dump(2) << '\n';
        return ok ? exit_ok : exit_verify_failed;
    }

    csv_preamble(os, "verify", cfg);
    os << "# passed=" << (ok ? "true" : "false") << '\n';
    auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };
    if (!details) {
        write_csv_row(os, {"criterion", "check", "tolerance", "observed", "passed", "informational", "detail"});
        for (auto const& c : report.checks)
            write_csv_row(os, {std::to_string(c.criterion), c.name, format_number(c.tolerance),
                               format_number(c.observed), yes_no(c.passed), yes_no(c.informational), c.detail});
    }
    else {
        write_csv_row(os, {"criterion", "check", "case", "reference", "value", "abs_dev", "rel_dev", "tolerance",
                           "passed"});
        for (auto const& c : report.checks)
            for (auto const& x : c.comparisons)
                write_csv_row(os, {std::to_string(c.criterion), c.name, x.label, format_number(x.reference),
                                   format_number(x.value), format_number(x.abs_dev), format_number(x.rel_dev),
                                   format_number(x.tolerance), yes_no(x.passed)});
    }
    return ok ? exit_ok : exit_verify_failed;
}

// ---- nu-solve ----------------------------------------------------------------

json poly_json(nu::QuadPoly const& p) { return json::array({p.c0, p.c1, p.c2}); }

json branch_json(nu::NUBranch const& b, nu::NUProblem const& prob)
{
    return json{{"k", b.k},
                {"sign", std::string(1, nu::to_char(b.sign_choice))},
                {"sqrt_radicand", poly_json(b.sqrt_radicand)},
                {"pi", poly_json(b.pi)},
                {"tau", poly_json(b.tau)},
                {"tau_slope", b.tau_slope()},
                {"lambda", b.lambda},
                {"admissible", nu::admissible(b, prob)}};
}

int cmd_nu_solve(RunConfig const& cfg, unsigned n, unsigned l, std::optional<double> energy, std::ostream& os)
{
    json j = envelope("nu-solve", cfg);
    j["n"] = n;
    j["l"] = l;
    nu::NUProblem prob;
    if (cfg.model == ModelKind::mixed) {
        if (!energy)
            throw Error(ErrorCode::InvalidArgument, "nu-solve for the mixed model needs --energy");
        double const E = *energy * energy_unit(cfg.units, cfg.constants);
        prob = mixed::nu_problem(cfg.mixed_params(), l, E);
        j["energy"] = *energy;
    }
    else {
        auto const p = cfg.scalar_params();
        double const unit = energy_unit(cfg.units, cfg.constants);
        double const e2 = energy ? (*energy * unit) * (*energy * unit) : scalar::energy_squared(p, n, l, cfg.mode);
        prob = scalar::nu_problem(p, l, scalar::epsilon_squared(p, e2));
        j["energy_squared"] = e2 / (unit * unit);
        j["epsilon_squared"] = scalar::epsilon_squared(p, e2);
    }
    j["problem"] = {{"tau_tilde", poly_json(prob.tau_tilde)},
                    {"sigma", poly_json(prob.sigma)},
                    {"sigma_tilde", poly_json(prob.sigma_tilde)}};

    int code = exit_ok;
    try {
        j["k_roots"] = nu::solve_k(prob);
        auto const all = nu::branches(prob);
        json bs = json::array();
        for (auto const& b : all)
            bs.push_back(branch_json(b, prob));
        j["branches"] = bs;
        auto const sel = nu::select(prob, all);
        json js = branch_json(sel.branch, prob);
        js["multiple_branches"] = sel.multiple_branches;
        js["admissible_count"] = sel.admissible_count;
        if (prob.sigma_through_origin()) {
            auto const f = nu::derive_factors(sel.branch, prob);
            js["factors"] = {{"rho_power", f.rho_power},
                             {"rho_exp_rate", f.rho_exp_rate},
                             {"phi_power", f.phi_power},
                             {"phi_exp_rate", f.phi_exp_rate}};
        }
        j["selected"] = js;
        auto const qz = nu::quantize(sel.branch, prob, n);
        j["quantization"] = {{"lambda", qz.lambda}, {"lambda_n", qz.lambda_n}, {"mismatch", qz.mismatch()}};
        j["status"] = "ok";
    }
    catch (Error const& e) {
        if (e.code() != ErrorCode::NoAdmissibleBranch && e.code() != ErrorCode::DegenerateProblem)
            throw;
        j["status"] = "no-bound-state";
        j["error"] = e.what();
        code = exit_not_bound;
    }
    os << j.dump(2) << '\n';
    return code;
}

// ---- sweep -------------------------------------------------------------------

std::vector<double> parse_values(std::string const& text)
{
    std::vector<double> out;
    std::string_view rest = text;
    while (!trim(rest).empty()) {
        auto const comma = rest.find(',');
        std::string_view item = trim(rest.substr(0, comma));
        out.push_back(parse_real("values", item));
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    return out;
}

int cmd_sweep(RunConfig const& cfg, std::string const& key, std::string const& values_text, std::ostream& os)
{
    if (!RunConfig::is_sweep_key(key))
        throw Error(ErrorCode::InvalidArgument, "cannot sweep unknown key '" + key + "'");
    auto const values = parse_values(values_text);
    std::vector<std::pair<double, SpectrumTable>> blocks;
    for (double v : values) {
        RunConfig c = cfg;
        c.set(key, v);
        c.check();
        blocks.emplace_back(v, compute_spectrum(c));
    }
    if (cfg.output == OutputFormat::json) {
        json j = envelope("sweep", cfg);
        j["key"] = key;
        json bl = json::array();
        for (auto const& [v, t] : blocks)
            bl.push_back({{"value", v}, {"rows", rows_json(t)}});
        j["blocks"] = bl;
        os << j.dump(2) << '\n';
        return exit_ok;
    }
    csv_preamble(os, "sweep", cfg);
    os << "# key=" << key << '\n';
    auto cols = spectrum_columns(cfg);
    cols.insert(cols.begin(), key);
    write_csv_row(os, cols);
    for (auto const& [v, t] : blocks)
        write_rows(os, t, {format_number(v)});
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Klein-Gordon bound states with position-dependent mass and Coulomb-like fields"};
    app.require_subcommand(1);

    Flags spectrum_flags, wave_flags, verify_flags, nu_flags, sweep_flags;

    auto* spectrum = app.add_subcommand("spectrum", "closed-form spectrum table");
    add_config_flags(*spectrum, spectrum_flags);

    WavefunctionArgs wargs;
    auto* wave = app.add_subcommand("wavefunction", "sample a normalized radial wavefunction");
    add_config_flags(*wave, wave_flags);
    wave->add_option("--n", wargs.n, "radial quantum number");
    wave->add_option("--l", wargs.l, "orbital quantum number");
    wave->add_option("--branch", wargs.branch, "particle | antiparticle");
    wave->add_option("--samples", wargs.samples, "number of log-spaced samples (0: header only)");
    wave->add_option("--r-min", wargs.r_min, "first sample radius");
    wave->add_option("--r-max", wargs.r_max, "last sample radius");
    wave->add_flag("--u2", wargs.with_u2, "add a u^2 column");
    wave->add_option("--exponent", wargs.exponent, "corrected | as_printed (scalar-linear)");

    bool details = false;
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks for the selected model");
    add_config_flags(*verify_cmd, verify_flags);
    verify_cmd->add_flag("--details", details, "list every individual comparison");

    unsigned nu_n = 0, nu_l = 0;
    std::optional<double> nu_energy;
    auto* nu_cmd = app.add_subcommand("nu-solve", "dump the NU problem, k roots, branches and quantization (JSON)");
    add_config_flags(*nu_cmd, nu_flags);
    nu_cmd->add_option("--n", nu_n, "radial quantum number");
    nu_cmd->add_option("--l", nu_l, "orbital quantum number");
    nu_cmd->add_option("--energy", nu_energy, "trial energy E");

    std::string sweep_key, sweep_values;
    auto* sweep = app.add_subcommand("sweep", "spectrum over a list of parameter values (long format)");
    add_config_flags(*sweep, sweep_flags);
    sweep->add_option("--key", sweep_key, "parameter to vary")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values");

    try {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e) {
        app.exit(e);
        return exit_bad_input;
    }

    std::ostringstream out;
    int code = exit_ok;
    try {
        if (spectrum->parsed())
            code = cmd_spectrum(resolve(spectrum_flags), out);
        else if (wave->parsed())
            code = cmd_wavefunction(resolve(wave_flags), wargs, out);
        else if (verify_cmd->parsed())
            code = cmd_verify(resolve(verify_flags), details, out);
        else if (nu_cmd->parsed())
            code = cmd_nu_solve(resolve(nu_flags), nu_n, nu_l, nu_energy, out);
        else if (sweep->parsed())
            code = cmd_sweep(resolve(sweep_flags), sweep_key, sweep_values, out);
    }
    catch (Error const& e) {
        std::cerr << "kgbound: " << e.what() << '\n';
        return e.code() == ErrorCode::NotBound ? exit_not_bound : exit_bad_input;
    }
    catch (std::exception const& e) {
        std::cerr << "kgbound: " << e.what() << '\n';
        return exit_bad_input;
    }
    std::cout << out.str();
    return code;
}
