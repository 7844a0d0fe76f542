#include "kgbound/format.hpp"
#include "kgbound/run_config.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

using namespace kgb;

TEST(FormatNumber, Digits)
{
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(0.6), "0.6");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(-2.5e-5), "-2.50000000000e-05");
    EXPECT_EQ(format_number(1234567.0), "1234567");
    EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(format_number(std::nan("")), "nan");
}

TEST(Csv, Quoting)
{
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    std::ostringstream os;
    write_csv_row(os, {"x", "1,2", "z"});
    EXPECT_EQ(os.str(), "x,\"1,2\",z\n");
}

TEST(Json, EnergyLevelRoundTrip)
{
    for (auto const& r : mixed::spectrum(mixed::MixedCoulombParams{0.3, 0.5, -1.0, 0.1, {}}, 3, 2)) {
        nlohmann::json const j = r;
        auto const back = nlohmann::json::parse(j.dump()).get<EnergyLevel>();
        EXPECT_EQ(back, r);
    }
}

TEST(Json, ScalarLevelRoundTrip)
{
    for (auto const& r : scalar::spectrum(scalar::LinearMassParams{0.7, 1.3, {}}, 2, 2, scalar::SpectrumMode::as_printed)) {
        nlohmann::json const j = r;
        auto const back = nlohmann::json::parse(j.dump()).get<scalar::ScalarLevel>();
        EXPECT_EQ(back, r);
    }
}

TEST(Units, ConversionDividesByRestEnergy)
{
    PhysicalConstants const c{1.0, 2.0};
    mixed::MixedCoulombParams p{0.5, 0.0, 1.0, 0.0, c};
    auto const rows = mixed::spectrum(p, 1, 1);
    auto const rel = in_units(rows, EnergyUnits::rest_energy, c);
    auto const abs = in_units(rows, EnergyUnits::absolute, c);
    EXPECT_NEAR(rel[0].energy, 0.6, 1e-15);
    EXPECT_NEAR(abs[0].energy, 1.2, 1e-15);
    EXPECT_EQ(parse_units("absolute"), EnergyUnits::absolute);
    EXPECT_THROW(parse_units("eV"), Error);
}

TEST(Units, ScalarSquaresTheUnit)
{
    PhysicalConstants const c{1.0, 2.0};
    auto const rows = scalar::spectrum(scalar::LinearMassParams{0.0, 1.0, c}, 0, 0, scalar::SpectrumMode::corrected);
    auto const rel = in_units(rows, EnergyUnits::rest_energy, c);
    EXPECT_NEAR(rel[0].energy_squared, rows[0].energy_squared / 4.0, 1e-15);
    EXPECT_NEAR(rel[0].level.energy * rel[0].level.energy, rel[0].energy_squared, 1e-14);
}

TEST(Columns, LevelFields)
{
    EnergyLevel r;
    r.n = 1;
    r.l = 2;
    r.energy = 0.5;
    r.status = LevelStatus::bound;
    EXPECT_EQ(level_fields(r), (std::vector<std::string>{"1", "2", "particle", "0.5", "bound", "0"}));
    EXPECT_EQ(scalar_columns().size(), 8u);
}

TEST(Config, SetAndDescribe)
{
    RunConfig cfg;
    cfg.set("q", "0.3");
    cfg.set("beta", -1.0);
    cfg.set("model", "mixed");
    cfg.set("n_max", "5");
    EXPECT_EQ(cfg.q, 0.3);
    EXPECT_EQ(cfg.beta, -1.0);
    EXPECT_EQ(cfg.n_max, 5u);
    EXPECT_EQ(cfg.describe(), "model=mixed q=0.3 b=0 beta=-1 V0=0 hbar_c=1 rest_energy=1 units=rest-energy");
    cfg.set("model", "scalar-linear");
    cfg.set("mode", "as_printed");
    EXPECT_EQ(cfg.describe(), "model=scalar-linear s=0 length_scale=1 hbar_c=1 rest_energy=1 mode=as_printed "
                              "units=rest-energy");
}

TEST(Config, Rejections)
{
    RunConfig cfg;
    EXPECT_THROW(cfg.set("colour", "red"), Error);
    EXPECT_THROW(cfg.set("q", "abc"), Error);
    EXPECT_THROW(cfg.set("n_max", "-1"), Error);
    EXPECT_THROW(cfg.set("model", "dirac"), Error);
    cfg.set("points", "100");
    EXPECT_THROW(cfg.check(), Error);
    EXPECT_TRUE(RunConfig::is_sweep_key("V0"));
    EXPECT_FALSE(RunConfig::is_sweep_key("n_max"));
}

TEST(Config, LoadFromStream)
{
    std::istringstream in("# mixed run\n  q = 0.25  # inline\n\nb=0.5\nbeta = -1\n");
    RunConfig cfg;
    load_config(in, cfg);
    EXPECT_EQ(cfg.q, 0.25);
    EXPECT_EQ(cfg.b, 0.5);
    EXPECT_EQ(cfg.beta, -1.0);

    std::istringstream bad("q 0.25\n");
    EXPECT_THROW(load_config(bad, cfg), Error);
    std::istringstream unknown("speed=3\n");
    EXPECT_THROW(load_config(unknown, cfg), Error);
    EXPECT_THROW(load_config_file("/nonexistent/kgbound.cfg", cfg), Error);
}
