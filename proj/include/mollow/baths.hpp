#pragma once

#include <complex>
#include <vector>

#include "mollow/transitions.hpp"

namespace mollow {

enum class BathKind { radiative, ohmic };

/// Zero-temperature reservoir coupled through sigma_x/2 or sigma_z/2.
/// radiative: G(w) = 2 kappa / pi for w > 0.
/// ohmic:     G(w) = alpha w exp(-w / omega_c) for w > 0.
struct BathSpec {
    BathKind kind = BathKind::radiative;
    Operator coupling = Operator::x;
    double kappa = 0.0;
    double alpha = 0.0;
    double omega_c = 10.0;

    static BathSpec radiative(double kappa, Operator coupling = Operator::x);
    static BathSpec ohmic(double alpha, double omega_c = 10.0, Operator coupling = Operator::z);

    // Throws std::invalid_argument on negative rates, nonpositive cutoff or a non-Hermitian coupling.
    void validate() const;
};

double spectral_function(const BathSpec& bath, double omega);

// R(x) = P int_0^inf G(w) / (w - x) dw. Defined as 0 for the radiative bath,
// whose flat spectrum makes the integral diverge.
double principal_value_shift(const BathSpec& bath, double x);

// gamma^+(Delta) = pi G(-Delta) - i R(-Delta); R enters only when lamb_shift is set.
cplx half_fourier_rate(const BathSpec& bath, double delta, bool lamb_shift = false);
// gamma^-(Delta) = conj(gamma^+(-Delta)).
cplx half_fourier_rate_minus(const BathSpec& bath, double delta, bool lamb_shift = false);

}  // namespace mollow
