#include <doctest.h>

#include <cmath>
#include <sstream>

#include "levcool/config.hpp"
#include "levcool/errors.hpp"

using namespace levcool;

namespace {

Config parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_config(in, "test.cfg");
}

}  // namespace

TEST_CASE("defaults resolve to a valid point")
{
    const auto p = Config{}.resolve();
    CHECK(p.kappa == 100.0);
    CHECK(p.kappa3 == 1.0);
    CHECK(p.delta3 == 0.5);
    CHECK(p.Omega_m == 0.25);
    CHECK(p.J == 0.0);
}

TEST_CASE("key = value with comments and blank lines")
{
    const auto p = parse("# coupled preset\n\nkappa = 50   # trailing comment\nkappa3=2\n  J = 3.5\ndelta2p = -1e1\n").resolve();
    CHECK(p.kappa == 50.0);
    CHECK(p.kappa3 == 2.0);
    CHECK(p.J == 3.5);
    CHECK(p.delta2p == -10.0);
}

TEST_CASE("parse errors carry the line and the offending key")
{
    CHECK_THROWS_WITH_AS(parse("kappa = 1\nkapa = 2\n"), doctest::Contains("test.cfg:2"), ValidationError);
    CHECK_THROWS_WITH_AS(parse("kapa = 2\n"), doctest::Contains("kapa"), ValidationError);
    CHECK_THROWS_WITH_AS(parse("kappa = 1\nkappa = 2\n"), doctest::Contains("repeated"), ValidationError);
    CHECK_THROWS_WITH_AS(parse("kappa =\n"), doctest::Contains("no value"), ValidationError);
    CHECK_THROWS_WITH_AS(parse("kappa 5\n"), doctest::Contains("key = value"), ValidationError);
    CHECK_THROWS_WITH_AS(parse("kappa = five\n"), doctest::Contains("kappa"), ValidationError);
    CHECK_THROWS_AS(parse("kappa = nan\n"), ValidationError);
    CHECK_THROWS_AS(parse("omega_m_units = furlongs\n"), ValidationError);
}

TEST_CASE("invalid values are caught on resolve")
{
    CHECK_THROWS_AS(parse("kappa = -1\n").resolve(), ValidationError);
    CHECK_THROWS_AS(parse("J = -1\n").resolve(), ValidationError);
}

TEST_CASE("symbolic coupling and detuning rules")
{
    auto p = parse("kappa = 100\nJ = sqrt_kappa\ndelta2p = closed_form\n").resolve();
    CHECK(p.J == 10.0);
    CHECK(p.delta2p == doctest::Approx(100.0 / 1.5));

    p = parse("kappa = 100\nkappa3 = 4\nJ = input_output\n").resolve();
    CHECK(p.J == 20.0);

    p = parse("kappa = 100\nJ = 15\ndelta2p = effective_sideband\n").resolve();
    const double eta2 = p.J * p.J / (p.delta2p * p.delta2p + 2500.0);
    CHECK(p.delta3 - eta2 * p.delta2p == doctest::Approx(-1.0).epsilon(1e-12));
    // with J = sqrt(kappa) the effective detuning cannot go below delta3 - 1
    CHECK_THROWS_AS(parse("kappa = 100\nJ = sqrt_kappa\ndelta2p = effective_sideband\n").resolve(), ValidationError);

    // rules follow their inputs when those change
    Config c = parse("J = sqrt_kappa\ndelta2p = closed_form\n");
    c.set_number("kappa", 400.0);
    CHECK(c.resolve().J == 20.0);
    CHECK(c.resolve().delta2p == doctest::Approx(400.0 / 1.5));
    c.set_number("J", 3.0);
    CHECK(c.resolve().J == 3.0);
}

TEST_CASE("SI rates need omega_m")
{
    CHECK_THROWS_WITH_AS(parse("omega_m_units = si\nkappa = 1e8\n").resolve(), doctest::Contains("omega_m"), ValidationError);
    const auto p = parse("omega_m_units = si\nomega_m = 1e6\nkappa = 1e8\nkappa3 = 1e6\nOmega_m = 2.5e5\ngamma = 10\n"
                         "delta3 = 5e5\n").resolve();
    CHECK(p.kappa == doctest::Approx(100.0));
    CHECK(p.Omega_m == doctest::Approx(0.25));
    CHECK(p.gamma == doctest::Approx(1e-5));
    CHECK(p.delta3 == doctest::Approx(0.5));
}

TEST_CASE("recoil heating from the sphere radius")
{
    const auto p = parse("radius_nm = 50\n").resolve();
    CHECK(p.gamma_sc == doctest::Approx(1.0336e-3).epsilon(1e-4));
    CHECK(parse("radius_nm = 100\n").resolve().gamma_sc == doctest::Approx(8.0 * p.gamma_sc));
    CHECK_THROWS_WITH_AS(parse("radius_nm = 50\ngamma_sc = 1e-3\n").resolve(), doctest::Contains("radius_nm"),
                         ValidationError);
}

TEST_CASE("geometry keys reach the physical parameters")
{
    const auto c = parse("radius_nm = 75\nwaist_um = 30\ncavity_length_cm = 2\nlambda_um = 1.064\n");
    const auto phys = c.physical();
    CHECK(phys.radius == doctest::Approx(75e-9));
    CHECK(phys.waist == doctest::Approx(30e-6));
    CHECK(phys.cavity_length == doctest::Approx(0.02));
    CHECK(phys.wavelength == doctest::Approx(1.064e-6));
    CHECK(c.has_geometry());
    CHECK_FALSE(Config{}.has_geometry());
}

TEST_CASE("key vocabulary")
{
    for (const char* k : {"omega_m_units", "delta2p", "delta3", "kappa", "kappa3", "J", "Omega_m", "gamma", "gamma_sc",
                          "n_th", "radius_nm", "density", "epsilon", "lambda_um", "cavity_length_cm", "waist_um"}) {
        CHECK(Config::is_key(k));
    }
    CHECK_FALSE(Config::is_key("omega"));
    CHECK_THROWS_AS(load_config("/nonexistent/levcool.cfg"), ValidationError);
}
