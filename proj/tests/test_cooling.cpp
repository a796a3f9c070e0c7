#include <doctest.h>

#include <cmath>
#include <random>

#include "levcool/cooling.hpp"
#include "levcool/errors.hpp"
#include "levcool/response.hpp"
#include "oracles.hpp"

using namespace levcool;

namespace {

// Coupled preset: J = sqrt(kappa), closed-form detuning, r = 50 nm recoil.
NormalizedParams fig5(double kappa)
{
    NormalizedParams p;
    p.kappa = kappa;
    p.kappa3 = 1.0;
    p.delta3 = 0.5;
    p.J = std::sqrt(kappa);
    p.delta2p = kappa / 1.5;
    p.Omega_m = 0.25;
    p.gamma = 1e-5;
    p.gamma_sc = 1.0336e-3;
    return p;
}

double a_minus(const NormalizedParams& p)
{
    return oracle::force_spectrum(1.0, p.delta2p, p.delta3, p.kappa, p.kappa3, p.J, p.Omega_m);
}
double a_plus(const NormalizedParams& p)
{
    return oracle::force_spectrum(-1.0, p.delta2p, p.delta3, p.kappa, p.kappa3, p.J, p.Omega_m);
}

}  // namespace

TEST_CASE("sideband rates from the force spectrum")
{
    const NormalizedParams p = fig5(100.0);
    const auto r = rates(p);
    CHECK(r.A_minus == doctest::Approx(a_minus(p)).epsilon(1e-13));
    CHECK(r.A_plus == doctest::Approx(a_plus(p)).epsilon(1e-13));
    CHECK(r.A_minus == doctest::Approx(1.7645e-3).epsilon(1e-4));
    CHECK(r.A_plus < 0.25 * r.A_minus);
    CHECK(net_rate(p) == doctest::Approx(r.A_minus - r.A_plus).epsilon(1e-14));
}

TEST_CASE("trivial rate limits")
{
    NormalizedParams p = fig5(100.0);
    p.Omega_m = 0.0;
    CHECK(rates(p).A_minus == 0.0);
    CHECK(rates(p).A_plus == 0.0);
    CHECK(net_rate(p) == 0.0);
    CHECK(spring_shift(p) == 0.0);

    p = fig5(100.0);
    p.J = 0.0;
    p.delta2p = 0.0;
    CHECK(rates(p).A_minus == doctest::Approx(rates(p).A_plus).epsilon(1e-14));

    p.delta2p = -30.0;
    CHECK(net_rate(p) > 0.0);
}

TEST_CASE("cooling limit decomposition")
{
    const NormalizedParams p = fig5(100.0);
    const auto c = cooling_limit(p);
    REQUIRE(c.cooling);
    CHECK(c.n_q == doctest::Approx(a_plus(p) / (a_minus(p) - a_plus(p))).epsilon(1e-12));
    CHECK(c.n_c == doctest::Approx(p.gamma_sc / (a_minus(p) - a_plus(p))).epsilon(1e-12));
    CHECK(c.n_f == doctest::Approx(c.n_q + c.n_c).epsilon(1e-15));
    CHECK_NOTHROW(c.ensure_cooling());
}

TEST_CASE("heating regime is flagged, not reported as an occupancy")
{
    NormalizedParams p = fig5(100.0);
    p.J = 0.0;
    p.delta2p = 30.0;
    const auto c = cooling_limit(p);
    CHECK_FALSE(c.cooling);
    CHECK(std::isnan(c.n_f));
    CHECK(std::isnan(c.n_q));
    CHECK(std::isnan(c.n_c));
    CHECK(c.Gamma_opt < 0.0);
    CHECK_THROWS_AS(c.ensure_cooling(), NotCoolingError);
}

TEST_CASE("perfect cooling limit")
{
    // Deep resolved sideband: A_+ is negligible and gamma_sc = 0.
    NormalizedParams p;
    p.kappa = 1e-3;
    p.delta2p = -1.0;
    p.Omega_m = 1e-3;
    const auto c = cooling_limit(p);
    CHECK(c.n_f < 1e-6);
    CHECK(c.n_c == 0.0);
}

TEST_CASE("coupling scale law")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int i = 0; i < 50; ++i) {
        NormalizedParams p = fig5(10.0 + 90.0 * u(rng) / 3.0);
        const double c = u(rng);
        NormalizedParams q = p;
        q.Omega_m *= c;
        const auto a = cooling_limit(p);
        const auto b = cooling_limit(q);
        CHECK(b.A_minus == doctest::Approx(c * c * a.A_minus).epsilon(1e-12));
        CHECK(b.Gamma_opt == doctest::Approx(c * c * a.Gamma_opt).epsilon(1e-10));
        CHECK(b.n_q == doctest::Approx(a.n_q).epsilon(1e-10));
        CHECK(b.n_c == doctest::Approx(a.n_c / (c * c)).epsilon(1e-10));
    }
}

TEST_CASE("Gamma_opt two ways on random parameters")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        NormalizedParams p;
        p.kappa = std::pow(10.0, 3.0 * u(rng));
        p.kappa3 = std::pow(10.0, -1.0 + 2.0 * u(rng));
        p.J = std::sqrt(p.kappa) * u(rng);
        p.delta2p = -1000.0 + 2000.0 * u(rng);
        p.delta3 = -2.0 + 4.0 * u(rng);
        p.Omega_m = 0.25;
        const auto r = rates(p);
        CHECK(std::abs(net_rate(p) + 2.0 * self_energy(1.0, p).imag()) <= 1e-10 * (r.A_minus + r.A_plus));
    }
}

TEST_CASE("heating suppression relative to the single cavity")
{
    const NormalizedParams p = fig5(100.0);
    CHECK(rates(p).A_plus / rates(single_cavity(p)).A_plus < 1.0);
}

TEST_CASE("n_f increases with recoil heating")
{
    NormalizedParams p = fig5(60.0);
    double prev = -1.0;
    for (double g : {0.0, 1e-4, 1e-3, 1e-2}) {
        p.gamma_sc = g;
        const double n = cooling_limit(p).n_f;
        CHECK(n > prev);
        prev = n;
    }
}

TEST_CASE("optimal detuning")
{
    NormalizedParams p = fig5(100.0);
    CHECK(optimal_detuning(p, DetuningSearch::closed_form) == doctest::Approx(100.0 / 1.5).epsilon(1e-15));

    const double numeric = optimal_detuning(p, DetuningSearch::numeric);
    CHECK(std::abs(numeric - 100.0 / 1.5) < 0.2 * 100.0 / 1.5);
    // dense brute-force scan as reference
    auto nf = [&](double d) {
        NormalizedParams q = p;
        q.delta2p = d;
        return cooling_limit(q).n_f;
    };
    const double brute = oracle::grid_argmin(nf, -300.0, 300.0, 60001);
    CHECK(numeric == doctest::Approx(brute).epsilon(2e-4));

    p.J = 0.0;
    CHECK(optimal_detuning(p, DetuningSearch::numeric) < 0.0);

    p = fig5(100.0);
    p.delta3 = -1.0;
    CHECK_THROWS_AS(optimal_detuning(p, DetuningSearch::closed_form), ValidationError);
}

TEST_CASE("no cooling window")
{
    NormalizedParams p;
    p.kappa = 10.0;
    p.Omega_m = 0.0;
    CHECK_THROWS_AS(optimal_detuning(p, DetuningSearch::numeric), NoCoolingWindowError);
}

TEST_CASE("maximal cooling-rate detuning: blue for coupled, red for single")
{
    NormalizedParams p;
    p.kappa = 100.0;
    p.kappa3 = 1.0;
    p.J = 10.0;
    p.delta3 = 0.5;
    p.Omega_m = 0.25;
    p.gamma = 1e-5;
    const double coupled = max_cooling_rate_detuning(p);
    auto gamma_at = [&](const NormalizedParams& base, double d) {
        NormalizedParams q = base;
        q.delta2p = d;
        return -net_rate(q);
    };
    CHECK(coupled > 0.0);
    CHECK(coupled == doctest::Approx(oracle::grid_argmin([&](double d) { return gamma_at(p, d); }, -300, 300, 60001)).epsilon(2e-4));
    p.J = 0.0;
    const double single = max_cooling_rate_detuning(p);
    CHECK(single < 0.0);
    CHECK(single == doctest::Approx(oracle::grid_argmin([&](double d) { return gamma_at(p, d); }, -300, 300, 60001)).epsilon(2e-4));
}

TEST_CASE("scan_minimize")
{
    CHECK(scan_minimize([](double x) { return (x - 0.3) * (x - 0.3); }, -1.0, 1.0, 21, 1e-10) ==
          doctest::Approx(0.3).epsilon(1e-8));
    CHECK(std::isnan(scan_minimize([](double) { return NAN; }, -1.0, 1.0, 11, 1e-6)));
    // non-finite samples are skipped
    CHECK(scan_minimize([](double x) { return x < 0 ? NAN : (x - 0.5) * (x - 0.5); }, -1.0, 1.0, 41, 1e-10) ==
          doctest::Approx(0.5).epsilon(1e-8));
}
