#include "mollow/chrw.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mollow/floquet.hpp"

namespace mollow {

namespace {

double bessel_j(int k, double x) {
    if (k < 0) return (k % 2 == 0 ? 1.0 : -1.0) * std::cyl_bessel_j(static_cast<double>(-k), x);
    return std::cyl_bessel_j(static_cast<double>(k), x);
}

double xi_residual(double xi, double A, double omega0, double omega_l) {
    return omega0 * bessel_j(1, A * xi / omega_l) - A * (1.0 - xi) / 2.0;
}

// arctan[2 (Omega - Delta) / amp] with Omega - Delta evaluated without cancellation.
double mixing_angle(double Delta, double Omega, double amp) {
    if (amp == 0.0 && Delta == 0.0) return std::numbers::pi / 4.0;
    const double gap = Delta > 0.0 ? (amp * amp / 4.0) / (Omega + Delta) : Omega - Delta;
    return std::atan2(2.0 * gap, amp);
}

// <a~|sigma_z|b~> for |+~> = cos t |+> + sin t |->, |-~> = sin t |+> - cos t |->.
double c_elem(double theta, Mode a, Mode b) {
    if (a != b) return std::sin(2.0 * theta);
    return a == Mode::plus ? std::cos(2.0 * theta) : -std::cos(2.0 * theta);
}

// <a~|sigma_-|b~>
double d_elem(double theta, Mode a, Mode b) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    if (a == Mode::plus && b == Mode::minus) return s * s;
    if (a == Mode::minus && b == Mode::plus) return -c * c;
    return a == Mode::plus ? s * c : -s * c;
}

int bessel_range(double z) {
    int k = static_cast<int>(std::ceil(z)) + 1;
    while (std::abs(bessel_j(k, z)) >= 1e-16 && k < 400) ++k;
    return std::max(k + 2, 3);
}

double x_z_value(double theta, double z, Mode a, Mode b, int n) {
    if (n % 2 != 0) return 0.0;
    const double c = c_elem(theta, a, b);
    const double dab = d_elem(theta, a, b);
    const double dba = d_elem(theta, b, a);
    const int m = std::abs(n);
    if (n == 0) return 0.5 * (c * bessel_j(0, z) + (dab + dba) * bessel_j(1, z));
    if (n > 0) return 0.5 * (c * bessel_j(m, z) + dab * bessel_j(m + 1, z) - dba * bessel_j(m - 1, z));
    return 0.5 * (c * bessel_j(m, z) - dab * bessel_j(m - 1, z) + dba * bessel_j(m + 1, z));
}

double x_plus_value(double theta, double z, Mode a, Mode b, int n) {
    if (n % 2 == 0) return 0.0;
    const double c = c_elem(theta, a, b);
    const double dab = d_elem(theta, a, b);
    const double dba = d_elem(theta, b, a);
    const double j0 = bessel_j(0, z);

    double raise = 0.0;  // sigma_+ e^{i w t} part
    if (n == 1) raise = 1.0 + j0;
    else if (n >= 3) raise = bessel_j(n - 1, z);
    else raise = bessel_j(1 - n, z);

    double lower = 0.0;  // sigma_- e^{-i w t} part
    if (n == -1) lower = 1.0 - j0;
    else if (n >= 1) lower = -bessel_j(n + 1, z);
    else lower = -bessel_j(-n - 1, z);

    const double longitudinal = n > 0 ? -c * bessel_j(n, z) : c * bessel_j(-n, z);
    return 0.5 * (dba * raise + dab * lower + longitudinal);
}

double x_x_value(double theta, Mode a, Mode b, int n) {
    if (n == -1) return 0.5 * d_elem(theta, a, b);
    if (n == 1) return 0.5 * d_elem(theta, b, a);
    return 0.0;
}

}  // namespace

double solve_xi(double A, double omega0, double omega_l) {
    if (A < 0.0) throw std::invalid_argument("amplitude must be nonnegative");
    if (!(omega_l > 0.0)) throw std::invalid_argument("driving frequency must be positive");
    if (A == 0.0) return omega_l / (omega0 + omega_l);

    double lo = 0.0;
    double hi = 1.0;
    double f_lo = xi_residual(lo, A, omega0, omega_l);
    const double f_hi = xi_residual(hi, A, omega0, omega_l);
    if (f_hi == 0.0) return hi;
    if ((f_lo < 0.0) == (f_hi < 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "no sign change for xi on [0, 1] at A=" << A << ", omega_l=" << omega_l << ": residual(0)=" << f_lo
           << ", residual(1)=" << f_hi;
        throw NumericalError(os.str());
    }
    for (int it = 0; it < 100 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = xi_residual(mid, A, omega0, omega_l);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ChrwParams chrw_params(double A, double omega0, double omega_l) {
    ChrwParams p;
    p.A = A;
    p.omega0 = omega0;
    p.omega_l = omega_l;
    p.xi = solve_xi(A, omega0, omega_l);
    p.A_tilde = 2.0 * A * (1.0 - p.xi);
    p.Delta_tilde = bessel_j(0, p.bessel_argument()) * omega0 - omega_l;
    p.Omega_R_tilde = std::hypot(p.Delta_tilde, p.A_tilde / 2.0);
    p.theta = mixing_angle(p.Delta_tilde, p.Omega_R_tilde, p.A_tilde);
    return p;
}

std::pair<double, double> chrw_quasienergies(const ChrwParams& p) {
    return {fold_quasienergy((p.omega_l + p.Omega_R_tilde) / 2.0, p.omega_l),
            fold_quasienergy((p.omega_l - p.Omega_R_tilde) / 2.0, p.omega_l)};
}

cplx chrw_x_z(const ChrwParams& p, Mode a, Mode b, int n) {
    return x_z_value(p.theta, p.bessel_argument(), a, b, n);
}

cplx chrw_x_x(const ChrwParams& p, Mode a, Mode b, int n) { return x_x_value(p.theta, a, b, n); }

cplx chrw_x_plus(const ChrwParams& p, Mode a, Mode b, int n) {
    return x_plus_value(p.theta, p.bessel_argument(), a, b, n);
}

cplx chrw_x_minus(const ChrwParams& p, Mode a, Mode b, int n) { return std::conj(chrw_x_plus(p, b, a, -n)); }

TransitionSet chrw_transitions(const ChrwParams& p, int n_max) {
    const int K = n_max > 0 ? n_max : bessel_range(p.bessel_argument());
    TransitionSet t{p.omega_l,
                    (p.omega_l + p.Omega_R_tilde) / 2.0,
                    (p.omega_l - p.Omega_R_tilde) / 2.0,
                    TransitionTable(Operator::x, K),
                    TransitionTable(Operator::z, K),
                    TransitionTable(Operator::plus, K)};
    for (Mode a : {Mode::minus, Mode::plus}) {
        for (Mode b : {Mode::minus, Mode::plus}) {
            for (int n = -K; n <= K; ++n) {
                t.x.at(a, b, n) = chrw_x_x(p, a, b, n);
                t.z.at(a, b, n) = chrw_x_z(p, a, b, n);
                t.plus.at(a, b, n) = chrw_x_plus(p, a, b, n);
            }
        }
    }
    return t;
}

RwaParams rwa_params(double A, double omega0, double omega_l) {
    if (A < 0.0) throw std::invalid_argument("amplitude must be nonnegative");
    if (!(omega_l > 0.0)) throw std::invalid_argument("driving frequency must be positive");
    RwaParams p;
    p.A = A;
    p.omega0 = omega0;
    p.omega_l = omega_l;
    p.Delta = omega0 - omega_l;
    p.Omega_R = std::hypot(p.Delta, A / 2.0);
    p.theta_A = mixing_angle(p.Delta, p.Omega_R, A);
    return p;
}

RwaSolution rwa_solution(double A, double omega0, double omega_l) {
    RwaSolution s;
    s.params = rwa_params(A, omega0, omega_l);
    const double w = omega_l;
    const double th = s.params.theta_A;
    s.epsilon_plus = fold_quasienergy((w + s.params.Omega_R) / 2.0, w);
    s.epsilon_minus = fold_quasienergy((w - s.params.Omega_R) / 2.0, w);

    constexpr int K = 2;
    TransitionSet t{w,
                    (w + s.params.Omega_R) / 2.0,
                    (w - s.params.Omega_R) / 2.0,
                    TransitionTable(Operator::x, K),
                    TransitionTable(Operator::z, K),
                    TransitionTable(Operator::plus, K)};
    for (Mode a : {Mode::minus, Mode::plus}) {
        for (Mode b : {Mode::minus, Mode::plus}) {
            t.x.at(a, b, -1) = 0.5 * d_elem(th, a, b);
            t.x.at(a, b, 1) = 0.5 * d_elem(th, b, a);
            t.z.at(a, b, 0) = 0.5 * c_elem(th, a, b);
            t.plus.at(a, b, 1) = d_elem(th, b, a);
        }
    }
    s.transitions = std::move(t);
    return s;
}

}  // namespace mollow
