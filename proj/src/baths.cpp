#include "mollow/baths.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace mollow {

BathSpec BathSpec::radiative(double kappa, Operator coupling) {
    BathSpec b;
    b.kind = BathKind::radiative;
    b.coupling = coupling;
    b.kappa = kappa;
    b.validate();
    return b;
}

BathSpec BathSpec::ohmic(double alpha, double omega_c, Operator coupling) {
    BathSpec b;
    b.kind = BathKind::ohmic;
    b.coupling = coupling;
    b.alpha = alpha;
    b.omega_c = omega_c;
    b.validate();
    return b;
}

void BathSpec::validate() const {
    if (coupling != Operator::x && coupling != Operator::z)
        throw std::invalid_argument("bath coupling must be sigma_x/2 or sigma_z/2");
    if (kind == BathKind::radiative && !(kappa >= 0.0 && std::isfinite(kappa)))
        throw std::invalid_argument("radiative bath needs kappa >= 0");
    if (kind == BathKind::ohmic) {
        if (!(alpha >= 0.0 && std::isfinite(alpha))) throw std::invalid_argument("ohmic bath needs alpha >= 0");
        if (!(omega_c > 0.0 && std::isfinite(omega_c))) throw std::invalid_argument("ohmic bath needs omega_c > 0");
    }
}

double spectral_function(const BathSpec& bath, double omega) {
    if (omega <= 0.0) return 0.0;
    switch (bath.kind) {
        case BathKind::radiative: return 2.0 * bath.kappa / std::numbers::pi;
        case BathKind::ohmic: return bath.alpha * omega * std::exp(-omega / bath.omega_c);
    }
    return 0.0;
}

double principal_value_shift(const BathSpec& bath, double x) {
    if (bath.kind == BathKind::radiative || bath.alpha == 0.0) return 0.0;

    using boost::math::quadrature::exp_sinh;
    using boost::math::quadrature::gauss_kronrod;
    const double tol = 1e-13;
    auto G = [&](double w) { return spectral_function(bath, w); };
    exp_sinh<double> tail_rule;

    if (x <= 0.0) {
        return tail_rule.integrate([&](double w) { return G(w) / (w - x); }, 0.0,
                                   std::numeric_limits<double>::infinity(), tol);
    }

    // Subtract G(x) on the symmetric interval [0, 2x], where P int dw / (w - x) vanishes.
    const double gx = G(x);
    const double slope = bath.alpha * std::exp(-x / bath.omega_c) * (1.0 - x / bath.omega_c);
    auto smooth = [&](double w) {
        const double d = w - x;
        if (std::abs(d) < 1e-9 * x) return slope;
        return (G(w) - gx) / d;
    };
    const double near = gauss_kronrod<double, 61>::integrate(smooth, 0.0, 2.0 * x, 15, tol);
    const double far = tail_rule.integrate([&](double w) { return G(w) / (w - x); }, 2.0 * x,
                                           std::numeric_limits<double>::infinity(), tol);
    return near + far;
}

cplx half_fourier_rate(const BathSpec& bath, double delta, bool lamb_shift) {
    const double re = std::numbers::pi * spectral_function(bath, -delta);
    const double im = lamb_shift ? -principal_value_shift(bath, -delta) : 0.0;
    return {re, im};
}

cplx half_fourier_rate_minus(const BathSpec& bath, double delta, bool lamb_shift) {
    return std::conj(half_fourier_rate(bath, -delta, lamb_shift));
}

}  // namespace mollow
