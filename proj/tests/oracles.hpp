// Independent reference computations. Nothing here calls into the library.
#ifndef LEVCOOL_TESTS_ORACLES_HPP
#define LEVCOOL_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
template <std::size_t N>
using Mat = std::array<std::array<double, N>, N>;

// Lorentzian factors written out from the definitions.
inline cplx lorentz(double w, double detuning, double width)
{
    return 1.0 / cplx(width / 2.0, -(w + detuning));
}

// Coupled response and force spectrum, straight from the two-mode input-output algebra.
inline cplx chi_coupled(double w, double d2, double d3, double k, double k3, double J)
{
    const cplx a = lorentz(w, d2, k);
    const cplx b = lorentz(w, d3, k3);
    return a / (1.0 + J * J * a * b);
}

inline double force_spectrum(double w, double d2, double d3, double k, double k3, double J, double Om)
{
    const cplx c = chi_coupled(w, d2, d3, k, k3, J);
    const cplx b = lorentz(w, d3, k3);
    return Om * Om * std::norm(c) * (k + k3 * J * J * std::norm(b));
}

// Faddeev-LeVerrier: coefficients c[0..N] of det(z I - A) = sum c[i] z^(N-i), c[0] = 1.
template <std::size_t N>
std::vector<double> charpoly(const Mat<N>& A)
{
    std::vector<double> c(N + 1, 0.0);
    c[0] = 1.0;
    Mat<N> M{};  // M_0 = 0
    for (std::size_t k = 1; k <= N; ++k) {
        Mat<N> next{};
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                double s = 0.0;
                for (std::size_t l = 0; l < N; ++l) s += A[i][l] * M[l][j];
                next[i][j] = s + (i == j ? c[k - 1] : 0.0);
            }
        }
        M = next;
        double tr = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t l = 0; l < N; ++l) tr += A[i][l] * M[l][i];
        c[k] = -tr / static_cast<double>(k);
    }
    return c;
}

inline cplx horner(const std::vector<double>& c, cplx z)
{
    cplx v = 0.0;
    for (double a : c) v = v * z + a;
    return v;
}

// Durand-Kerner simultaneous iteration with a Newton polish per root.
inline std::vector<cplx> roots(const std::vector<double>& c)
{
    const std::size_t n = c.size() - 1;
    double radius = 0.0;
    for (std::size_t i = 1; i <= n; ++i) radius = std::max(radius, std::abs(c[i]));
    radius = 1.0 + radius;  // Cauchy bound
    std::vector<cplx> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = radius * std::pow(cplx(0.4, 0.9), static_cast<double>(i));
    for (int it = 0; it < 5000; ++it) {
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx den = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            const cplx step = horner(c, z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (change < 1e-15) break;
    }
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = c[i] * static_cast<double>(n - i);
    for (auto& r : z) {
        for (int it = 0; it < 5; ++it) {
            const cplx dp = horner(d, r);
            if (std::abs(dp) == 0.0) break;
            r -= horner(c, r) / dp;
        }
    }
    return z;
}

// Hurwitz test from the Routh array of a monic real polynomial.
inline bool routh_stable(const std::vector<double>& c)
{
    const std::size_t n = c.size() - 1;
    std::vector<std::vector<double>> rows(2);
    for (std::size_t i = 0; i <= n; i += 2) rows[0].push_back(c[i]);
    for (std::size_t i = 1; i <= n; i += 2) rows[1].push_back(c[i]);
    rows[1].resize(rows[0].size(), 0.0);
    for (std::size_t r = 2; r <= n; ++r) {
        const auto& a = rows[r - 2];
        const auto& b = rows[r - 1];
        if (b[0] == 0.0) return false;
        std::vector<double> next(a.size(), 0.0);
        for (std::size_t j = 0; j + 1 < a.size(); ++j) next[j] = (b[0] * a[j + 1] - a[0] * b[j + 1]) / b[0];
        rows.push_back(next);
    }
    for (std::size_t r = 0; r <= n; ++r)
        if (!(rows[r][0] > 0.0)) return false;
    return true;
}

// A V + V A^T + D = 0 for 2x2 A and symmetric D, by Cramer's rule on (x, y, z).
struct Cov2 {
    double xx, xy, yy;
};
inline Cov2 lyap2(double a, double b, double c, double d, double p, double q, double r)
{
    // 2a x + 2b y           = -p
    //  c x + (a+d) y + b z  = -q
    //        2c y  + 2d z   = -r
    const double m[3][3] = {{2 * a, 2 * b, 0}, {c, a + d, b}, {0, 2 * c, 2 * d}};
    const double rhs[3] = {-p, -q, -r};
    auto det3 = [](const double (&k)[3][3]) {
        return k[0][0] * (k[1][1] * k[2][2] - k[1][2] * k[2][1]) - k[0][1] * (k[1][0] * k[2][2] - k[1][2] * k[2][0]) +
               k[0][2] * (k[1][0] * k[2][1] - k[1][1] * k[2][0]);
    };
    const double D = det3(m);
    double out[3];
    for (int col = 0; col < 3; ++col) {
        double k[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) k[i][j] = j == col ? rhs[i] : m[i][j];
        out[col] = det3(k) / D;
    }
    return {out[0], out[1], out[2]};
}

// Brute-force argmin on a dense grid.
inline double grid_argmin(const std::function<double(double)>& f, double lo, double hi, int n)
{
    double best = lo;
    double fbest = INFINITY;
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const double v = f(x);
        if (std::isfinite(v) && v < fbest) {
            fbest = v;
            best = x;
        }
    }
    return best;
}

inline double rel(double a, double b)
{
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace oracle

#endif  // LEVCOOL_TESTS_ORACLES_HPP
