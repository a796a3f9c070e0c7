#include "levcool/lyapunov.hpp"

#include <cmath>
#include <limits>

#include "levcool/cooling.hpp"
#include "levcool/errors.hpp"

namespace levcool {

namespace {

constexpr complex I{0.0, 1.0};

}  // namespace

LinearModel build_model(const NormalizedParams& p)
{
    p.validate();
    const double k = p.kappa / 2.0;
    const double k3 = p.kappa3 / 2.0;
    const double g = p.gamma / 2.0;
    const double d2 = p.delta2p;
    const double d3 = p.delta3;
    const double J = p.J;
    const double G = 2.0 * p.Omega_m;  // -Omega (a2 + a2^dag)(b + b^dag) = -2 Omega X2 q

    LinearModel m;
    // clang-format off
    m.drift <<
        -k,  -d2,  0.0,   J,   0.0, 0.0,
        d2,  -k,   -J,    0.0, G,   0.0,
        0.0,  J,   -k3,  -d3,  0.0, 0.0,
        -J,   0.0,  d3,  -k3,  0.0, 0.0,
        0.0,  0.0,  0.0,  0.0, -g,  1.0,
        G,    0.0,  0.0,  0.0, -1.0, -g;
    // clang-format on

    const double mech = p.gamma * (2.0 * p.n_th + 1.0) / 2.0 + p.gamma_sc;
    m.diffusion.setZero();
    m.diffusion.diagonal() << k, k, k3, k3, mech, mech;
    return m;
}

EigenStability eigen_stable(const LinearModel& model)
{
    Eigen::EigenSolver<Matrix6> solver(model.drift, false);
    const double max_re = solver.eigenvalues().real().maxCoeff();
    return {max_re < 0.0, max_re};
}

CovarianceResult solve_steady(const LinearModel& model, double residual_target)
{
    const auto stability = eigen_stable(model);
    if (!stability.stable) {
        throw UnstableError(stability.max_real_eigenvalue);
    }

    // vec(A V + V A^T) = (I (x) A + A (x) I) vec(V), column-major vec.
    using Matrix36 = Eigen::Matrix<double, 36, 36>;
    const Matrix6& A = model.drift;
    Matrix36 L = Matrix36::Zero();
    for (int c = 0; c < 6; ++c) {
        L.block<6, 6>(6 * c, 6 * c) += A;
        for (int r = 0; r < 6; ++r) {
            L.block<6, 6>(6 * r, 6 * c).diagonal().array() += A(r, c);
        }
    }
    Eigen::Matrix<double, 36, 1> rhs;
    for (int c = 0; c < 6; ++c) {
        rhs.segment<6>(6 * c) = -model.diffusion.col(c);
    }
    const Eigen::FullPivLU<Matrix36> lu(L);
    Eigen::Matrix<double, 36, 1> x = lu.solve(rhs);
    x += lu.solve(rhs - L * x);  // one refinement sweep

    CovarianceResult out;
    for (int c = 0; c < 6; ++c) {
        out.V.col(c) = x.segment<6>(6 * c);
    }
    out.V = 0.5 * (out.V + out.V.transpose()).eval();
    const Matrix6 residual = A * out.V + out.V * A.transpose() + model.diffusion;
    out.relative_residual = residual.norm() / model.diffusion.norm();
    out.stable = true;
    out.max_real_eigenvalue = stability.max_real_eigenvalue;
    out.n_phonon = (out.V(Q, Q) + out.V(P, P) - 1.0) / 2.0;
    if (!(out.relative_residual <= residual_target)) {
        throw IllConditionedError(out.relative_residual);
    }
    return out;
}

ComplexMatrix6 resolvent(const LinearModel& model, double omega)
{
    const ComplexMatrix6 M = -I * omega * ComplexMatrix6::Identity() - model.drift.cast<complex>();
    return M.partialPivLu().inverse();
}

ComplexVector6 annihilation_input(int x_index, double rate)
{
    // a_in = 1, a_in^dag = 0  =>  X_in = 1/sqrt2, Y_in = -i/sqrt2
    ComplexVector6 u = ComplexVector6::Zero();
    const double s = std::sqrt(rate) / std::sqrt(2.0);
    u(x_index) = s;
    u(x_index + 1) = -I * s;
    return u;
}

double model_force_spectrum(const NormalizedParams& p, double omega)
{
    NormalizedParams decoupled = p;
    decoupled.Omega_m = 0.0;
    const auto model = build_model(decoupled);
    const ComplexMatrix6 G = resolvent(model, omega);
    double total = 0.0;
    for (const auto& [index, rate] : {std::pair{int{X2}, p.kappa}, std::pair{int{X3}, p.kappa3}}) {
        const ComplexVector6 out = G * annihilation_input(index, rate);
        const complex a2 = (out(X2) + I * out(Y2)) / std::sqrt(2.0);
        total += std::norm(a2);
    }
    return p.Omega_m * p.Omega_m * total;
}

OracleReport oracle_compare(const NormalizedParams& p)
{
    const auto limit = cooling_limit(p);
    limit.ensure_cooling();

    OracleReport r;
    r.kappa = p.kappa;
    r.Omega_m = p.Omega_m;
    r.gamma_opt = limit.Gamma_opt;
    r.n_f_formula = limit.n_f;

    NormalizedParams bath_free = p;
    bath_free.gamma = 0.0;
    bath_free.n_th = 0.0;
    const auto exact = solve_steady(build_model(bath_free));
    r.n_lyapunov = exact.n_phonon;
    r.stable = exact.stable;
    r.rel_dev = std::abs(r.n_f_formula - r.n_lyapunov) / std::abs(r.n_lyapunov);

    NormalizedParams with_bath = p;
    with_bath.n_th = 0.0;
    r.n_formula_with_bath = (limit.A_plus + p.gamma_sc) / (limit.Gamma_opt + p.gamma);
    try {
        r.n_lyapunov_with_bath = solve_steady(build_model(with_bath)).n_phonon;
    } catch (const NumericError&) {
        r.n_lyapunov_with_bath = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

}  // namespace levcool
