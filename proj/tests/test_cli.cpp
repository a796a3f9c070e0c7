#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "levcool/cli.hpp"
#include "levcool/csv.hpp"

using namespace levcool;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "levcool_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::filesystem::path write_config(const std::string& name, const std::string& text)
{
    const auto p = scratch(name);
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("usage errors exit 2 and name the token")
{
    auto r = run({"frobnicate"});
    CHECK(r.code == cli::exit_validation);
    CHECK(r.err.find("frobnicate") != std::string::npos);

    r = run({});
    CHECK(r.code == cli::exit_validation);

    const auto cfg = write_config("bad.cfg", "kappa = 100\nkapa = 3\n");
    r = run({"rates", "--config", cfg.string()});
    CHECK(r.code == cli::exit_validation);
    CHECK(r.err.find("kapa") != std::string::npos);

    r = run({"sweep", "--axis1", "kappa:1:10:1:lin"});
    CHECK(r.code == cli::exit_validation);
    r = run({"figure", "--id", "fig9"});
    CHECK(r.code == cli::exit_validation);
    CHECK(r.err.find("fig9") != std::string::npos);
    r = run({"rates", "--wat"});
    CHECK(r.code == cli::exit_validation);
    CHECK(r.err.find("--wat") != std::string::npos);
}

TEST_CASE("rates schema")
{
    const auto cfg = write_config("f5.cfg", "kappa = 100\nJ = sqrt_kappa\ndelta2p = closed_form\nradius_nm = 50\n");
    const auto r = run({"rates", "--config", cfg.string()});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    const auto t = read_csv(in);
    CHECK(t.columns == std::vector<std::string>{"kappa", "delta2p", "A_minus", "A_plus", "Gamma_opt", "n_q", "n_c", "n_f", "flag"});
    REQUIRE(t.rows.size() == 1);
    CHECK(parse_double_field(t.rows[0][7]) == doctest::Approx(1.01426).epsilon(1e-4));
    CHECK(t.rows[0][8] == "ok");
}

TEST_CASE("not cooling is data, not failure")
{
    const auto r = run({"rates", "--set", "delta2p=40", "--set", "gamma_sc=1e-3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("nan") != std::string::npos);
    CHECK(r.out.find("not_cooling") != std::string::npos);

    const auto o = run({"oracle", "--set", "delta2p=40"});
    CHECK(o.code == 0);
    CHECK(o.out.find("not_cooling") != std::string::npos);
}

TEST_CASE("no cooling window is a numeric failure")
{
    const auto r = run({"limit", "--set", "Omega_m=0"});
    CHECK(r.code == cli::exit_numeric);
}

TEST_CASE("spectrum, stability, effective and oracle schemas")
{
    auto r = run({"spectrum", "--axis1", "omega:-2:0:11:lin", "--set", "J=10"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("omega,S\n", 0) == 0);

    r = run({"stability", "--set", "J=10", "--set", "delta2p=66.666666666666667"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("kappa,kappa3,J,delta2p,eta,Omega_eff,kappa_eff,Delta_eff,stable,margin", 0) == 0);

    r = run({"effective", "--set", "J=10", "--axis1", "delta2p:50:100:3:lin"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    CHECK(read_csv(in).rows.size() == 3);

    r = run({"oracle", "--set", "J=10", "--set", "delta2p=66.666666666666667", "--set", "gamma_sc=1e-3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("kappa,Omega_m,n_f_formula,n_lyapunov,rel_dev,stable", 0) == 0);
}

TEST_CASE("sweep output is byte-identical across runs")
{
    const auto cfg = write_config("f5s.cfg", "J = sqrt_kappa\ndelta2p = closed_form\nradius_nm = 50\n");
    const std::vector<std::string> args{"sweep", "--config", cfg.string(), "--axis1", "kappa:1:1000:200:log",
                                        "--quantity", "n_f", "--dual"};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("kappa,n_f,n_f_single,flag\n", 0) == 0);
}

TEST_CASE("figure writes CSV and a plot-script sidecar")
{
    const auto csv = scratch("d.csv");
    std::filesystem::remove(csv);
    const auto r = run({"figure", "--id", "fig3d", "--out", csv.string()});
    REQUIRE(r.code == 0);
    CHECK(std::filesystem::exists(csv));
    const auto gp = scratch("d.gp");
    REQUIRE(std::filesystem::exists(gp));
    std::ifstream in(gp);
    const std::string script((std::istreambuf_iterator<char>(in)), {});
    CHECK(script.find("'d.csv'") != std::string::npos);
}

TEST_CASE("unwritable output path is reported")
{
    const auto r = run({"rates", "--out", "/nonexistent/dir/out.csv"});
    CHECK(r.code == cli::exit_validation);
    CHECK(r.err.find("/nonexistent/dir/out.csv") != std::string::npos);
}
