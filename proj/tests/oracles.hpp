#pragma once

// Reference computations used only by the tests. None of these call into the
// library code paths they are compared against.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// J_n(x) from the power series, summed in long double. Accurate for x <= 12.
inline double bessel_series(int n, double x) {
    long double term = 1.0L;
    for (int k = 1; k <= n; ++k) term *= static_cast<long double>(x) / (2.0L * k);
    long double sum = term;
    const long double q = -static_cast<long double>(x) * x / 4.0L;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * (k + n));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && k > x) break;
    }
    return static_cast<double>(sum);
}

// J_n(x) = (1/pi) int_0^pi cos(n t - x sin t) dt by composite Simpson.
inline double bessel_integral(int n, double x, int panels = 4000) {
    const double h = std::numbers::pi / panels;
    double s = 0.0;
    for (int i = 0; i <= panels; ++i) {
        const double t = i * h;
        const double f = std::cos(n * t - x * std::sin(t));
        const double wgt = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        s += wgt * f;
    }
    return s * h / 3.0 / std::numbers::pi;
}

// Root of omega0 J1(A xi / w) - A (1 - xi) / 2 by a fine scan for the bracket, then bisection.
inline double xi_by_scan(double A, double omega0, double omega_l) {
    auto f = [&](double xi) { return omega0 * bessel_series(1, A * xi / omega_l) - A * (1.0 - xi) / 2.0; };
    double lo = 0.0;
    double flo = f(lo);
    for (int i = 1; i <= 10000; ++i) {
        const double hi = i / 10000.0;
        const double fhi = f(hi);
        if ((flo < 0) != (fhi < 0)) {
            double a = lo, b = hi, fa = flo;
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = f(m);
                if ((fm < 0) == (fa < 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            return 0.5 * (a + b);
        }
        lo = hi;
        flo = fhi;
    }
    return std::nan("");
}

// Dressed Floquet state of the transformed-frame construction evaluated in the
// lab frame on a time grid: |u_a(t)> = e^{i w t/2} e^{-S(t)} R^dagger(t) |a~>,
// returned as (-, +) amplitude pairs.
struct DressedModes {
    std::vector<std::array<cplx, 2>> plus;
    std::vector<std::array<cplx, 2>> minus;
    int samples = 0;
};

inline DressedModes dressed_modes(double A, double xi, double theta, double omega_l, int samples) {
    DressedModes d;
    d.samples = samples;
    const double T = 2.0 * std::numbers::pi / omega_l;
    const cplx I{0.0, 1.0};
    // |+~> = cos th |+> + sin th |->, |-~> = sin th |+> - cos th |->, stored (-, +).
    const std::array<cplx, 2> tp{std::sin(theta), std::cos(theta)};
    const std::array<cplx, 2> tm{-std::cos(theta), std::sin(theta)};
    for (int k = 0; k < samples; ++k) {
        const double t = k * T / samples;
        // R^dagger = diag(e^{-i w t/2} on +, e^{+i w t/2} on -)
        auto apply = [&](const std::array<cplx, 2>& v) {
            std::array<cplx, 2> r{v[0] * std::exp(I * omega_l * t / 2.0), v[1] * std::exp(-I * omega_l * t / 2.0)};
            // e^{-S}, S = i (A xi / (2 w)) sin(w t) sigma_x
            const double phi = A * xi / (2.0 * omega_l) * std::sin(omega_l * t);
            const cplx c = std::cos(phi);
            const cplx s = -I * std::sin(phi);
            std::array<cplx, 2> out{c * r[0] + s * r[1], s * r[0] + c * r[1]};
            const cplx g = std::exp(I * omega_l * t / 2.0);
            return std::array<cplx, 2>{g * out[0], g * out[1]};
        };
        d.plus.push_back(apply(tp));
        d.minus.push_back(apply(tm));
    }
    return d;
}

// Fourier component n of <u_a(t)| O |u_b(t)> by the rectangle rule (exact for trigonometric polynomials).
inline cplx time_average_element(const std::vector<std::array<cplx, 2>>& ua, const std::vector<std::array<cplx, 2>>& ub,
                                 const std::array<std::array<cplx, 2>, 2>& op, int n, double omega_l) {
    const int N = static_cast<int>(ua.size());
    const double T = 2.0 * std::numbers::pi / omega_l;
    cplx s{0.0, 0.0};
    for (int k = 0; k < N; ++k) {
        const double t = k * T / N;
        cplx e{0.0, 0.0};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) e += std::conj(ua[k][i]) * op[i][j] * ub[k][j];
        s += e * std::exp(cplx{0.0, -n * omega_l * t});
    }
    return s / static_cast<double>(N);
}

// P int_0^inf alpha w e^{-w/c} / (w - x) dw in closed form via the exponential integral.
inline double ohmic_pv(double alpha, double c, double x) {
    if (x == 0.0) return alpha * c;
    return alpha * (c - x * std::exp(-x / c) * std::expint(x / c));
}

// Splitmix-style deterministic generator for property loops.
inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

}  // namespace oracle
