#include <doctest.h>

#include <cmath>
#include <complex>

#include "levcool/errors.hpp"
#include "levcool/steady_state.hpp"

using namespace levcool;

namespace {

PhysicalParams weak_drive()
{
    PhysicalParams phys;
    const double w = phys.omega_m;
    phys.kappa = 100.0 * w;
    phys.kappa3 = w;
    phys.delta3 = 0.5 * w;
    phys.delta2 = 60.0 * w;
    phys.J = 10.0 * w;
    phys.E1 = trap_drive_for_frequency(phys);
    phys.E2 = complex(1e6 * w, 0.0);
    phys.E3 = complex(0.0, 2e4 * w);
    return phys;
}

}  // namespace

TEST_CASE("undriven cooling and auxiliary modes")
{
    PhysicalParams phys = weak_drive();
    phys.E2 = 0.0;
    phys.E3 = 0.0;
    const auto ss = solve_mean_fields(phys);
    CHECK(ss.converged);
    CHECK(ss.alpha2 == complex{});
    CHECK(ss.alpha3 == complex{});
    CHECK(ss.x0 == 0.0);
    CHECK(ss.alpha1 == -2.0 * complex(0.0, 1.0) * phys.E1 / phys.kappa);
    CHECK(ss.p0 == 0.0);
}

TEST_CASE("weak drive agrees with a one-shot hand iteration")
{
    const PhysicalParams phys = weak_drive();
    const auto ss = solve_mean_fields(phys);
    REQUIRE(ss.converged);
    CHECK(ss.p0 == 0.0);
    CHECK(ss.residual < 1e-10);

    // x0 = 0: solve the 2x2 block by substitution, then apply the displacement formula once.
    const complex i(0.0, 1.0);
    const complex a = i * phys.delta2 - phys.kappa / 2.0;
    const complex d = i * phys.delta3 - phys.kappa3 / 2.0;
    // a*a2 - iJ a3 = iE2 ; -iJ a2 + d a3 = iE3
    const complex a3_of = (i * phys.E3);
    const complex a2 = (i * phys.E2 + i * phys.J * a3_of / d) / (a + phys.J * phys.J / d);
    const complex a1 = -2.0 * i * phys.E1 / phys.kappa;
    const double x_est = std::norm(a2) / (2.0 * phys.wavenumber() * std::norm(a1));
    REQUIRE(2.0 * coupling_g(phys) * phys.wavenumber() * ss.x0 < 1e-2 * phys.kappa);
    CHECK(ss.x0 == doctest::Approx(x_est).epsilon(0.01));
    CHECK(ss.delta2p == doctest::Approx(phys.delta2 + 2.0 * coupling_g(phys) * phys.wavenumber() * ss.x0).epsilon(1e-14));
}

TEST_CASE("returned displacement is a fixed point of the map")
{
    const PhysicalParams phys = weak_drive();
    const auto ss = solve_mean_fields(phys);
    CHECK(displacement_map(phys, ss.x0) == doctest::Approx(ss.x0).epsilon(1e-10));
}

TEST_CASE("restoring force reproduces the trap frequency")
{
    const PhysicalParams phys = weak_drive();
    const auto ss = solve_mean_fields(phys);
    CHECK(implied_omega_m(phys, ss) == doctest::Approx(phys.omega_m).epsilon(1e-10));
}

TEST_CASE("linear point carries Omega_m = |2 g k x_zpf alpha2| / omega_m")
{
    const PhysicalParams phys = weak_drive();
    const auto ss = solve_mean_fields(phys);
    const auto p = linear_point(ss, phys);
    const double by_hand = 2.0 * coupling_g(phys) * phys.wavenumber() * x_zpf(phys) * std::abs(ss.alpha2) / phys.omega_m;
    CHECK(p.Omega_m == doctest::Approx(by_hand).epsilon(1e-13));
    CHECK(p.kappa == doctest::Approx(100.0));
    CHECK(p.delta2p == doctest::Approx(ss.delta2p / phys.omega_m));
    CHECK(p.J == doctest::Approx(10.0));

    PhysicalParams dark = phys;
    dark.E2 = 0.0;
    dark.E3 = 0.0;
    CHECK(linear_point(solve_mean_fields(dark), dark).Omega_m == 0.0);

    SteadyState raw;
    CHECK_THROWS_AS(linear_point(raw, phys), ValidationError);
}

TEST_CASE("inverse search for the drive giving Omega_m = omega_m / 4")
{
    const PhysicalParams phys = weak_drive();
    const double e2 = drive_for_coupling(phys, 0.25);
    PhysicalParams tuned = phys;
    tuned.E2 = e2;
    const auto ss = solve_mean_fields(tuned);
    CHECK(std::abs(ss.Omega_m) / phys.omega_m == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("mean-field preconditions and failures")
{
    PhysicalParams phys = weak_drive();
    phys.delta1 = 1.0;
    CHECK_THROWS_AS(solve_mean_fields(phys), ValidationError);

    phys = weak_drive();
    phys.E1 = 0.0;
    CHECK_THROWS_AS(solve_mean_fields(phys), TrapAbsentError);

    phys = weak_drive();
    MeanFieldOptions opt;
    opt.max_iterations = 1;
    opt.tolerance = 1e-300;
    try {
        solve_mean_fields(phys, opt);
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        CHECK(e.iterations() == 1);
        CHECK(e.residual() > 0.0);
    }
}
