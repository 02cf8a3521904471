#pragma once

#include <utility>

#include "mollow/transitions.hpp"

namespace mollow {

/// Closed-form Floquet solution for a single cosine drive (A/2) cos(w t) sigma_x,
/// obtained from a unitary transformation with self-consistent parameter xi
/// followed by a rotating-wave step in the transformed frame.
struct ChrwParams {
    double A = 0.0;
    double omega0 = 1.0;
    double omega_l = 1.0;
    double xi = 0.0;
    double A_tilde = 0.0;        // 2 A (1 - xi)
    double Delta_tilde = 0.0;    // J0(A xi / w) omega0 - w
    double Omega_R_tilde = 0.0;  // sqrt(Delta_tilde^2 + A_tilde^2 / 4)
    double theta = 0.0;          // dressed-state mixing angle

    double bessel_argument() const { return A * xi / omega_l; }
};

struct RwaParams {
    double A = 0.0;
    double omega0 = 1.0;
    double omega_l = 1.0;
    double Delta = 0.0;    // omega0 - omega_l
    double Omega_R = 0.0;  // sqrt(Delta^2 + A^2 / 4)
    double theta_A = 0.0;
};

// Root of omega0 J1(A xi / w) = A (1 - xi) / 2 on [0, 1]. A = 0 returns the small-A limit w / (omega0 + w).
double solve_xi(double A, double omega0, double omega_l);

ChrwParams chrw_params(double A, double omega0, double omega_l);

// (eps_+, eps_-) = ((w +- Omega_R_tilde) / 2) folded into the first zone.
std::pair<double, double> chrw_quasienergies(const ChrwParams& p);

cplx chrw_x_z(const ChrwParams& p, Mode a, Mode b, int n);
cplx chrw_x_x(const ChrwParams& p, Mode a, Mode b, int n);
cplx chrw_x_plus(const ChrwParams& p, Mode a, Mode b, int n);
cplx chrw_x_minus(const ChrwParams& p, Mode a, Mode b, int n);

// Tables over |n| <= n_max with the unfolded quasienergies (w +- Omega_R_tilde) / 2.
// n_max = 0 picks the range where the Bessel terms drop below 1e-16.
TransitionSet chrw_transitions(const ChrwParams& p, int n_max = 0);

RwaParams rwa_params(double A, double omega0, double omega_l);

struct RwaSolution {
    RwaParams params;
    double epsilon_plus = 0.0;   // folded
    double epsilon_minus = 0.0;  // folded
    TransitionSet transitions;   // unfolded gauge, gap = Omega_R
};

RwaSolution rwa_solution(double A, double omega0, double omega_l);

}  // namespace mollow
