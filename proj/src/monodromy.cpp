#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "mollow/floquet.hpp"

namespace mollow {

namespace {

Eigen::Matrix2cd hamiltonian(const DrivingSpec& spec, double t) {
    const double f = spec.evaluate(t);
    Eigen::Matrix2cd h;
    h << -spec.omega0() / 2.0, f, f, spec.omega0() / 2.0;
    return h;
}

}  // namespace

int default_monodromy_steps(int n_max) { return std::max(4096, 512 * n_max); }

MonodromyResult monodromy_oracle(const DrivingSpec& spec, int steps) {
    if (steps < 16) throw std::invalid_argument("monodromy integration needs at least 16 steps");
    const double T = spec.period();
    const double h = T / steps;
    const cplx mi{0.0, -1.0};

    Eigen::Matrix2cd U = Eigen::Matrix2cd::Identity();
    for (int s = 0; s < steps; ++s) {
        const double t = s * h;
        const Eigen::Matrix2cd H0 = hamiltonian(spec, t);
        const Eigen::Matrix2cd Hh = hamiltonian(spec, t + h / 2.0);
        const Eigen::Matrix2cd H1 = hamiltonian(spec, t + h);
        const Eigen::Matrix2cd k1 = mi * H0 * U;
        const Eigen::Matrix2cd k2 = mi * Hh * (U + (h / 2.0) * k1);
        const Eigen::Matrix2cd k3 = mi * Hh * (U + (h / 2.0) * k2);
        const Eigen::Matrix2cd k4 = mi * H1 * (U + h * k3);
        U += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    MonodromyResult out;
    out.unitarity_error = (U.adjoint() * U - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    if (out.unitarity_error > 1e-8) {
        std::ostringstream os;
        os << "one-period propagator drifted from unitarity by " << out.unitarity_error << "; increase steps";
        throw NumericalError(os.str());
    }

    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(U);
    std::array<std::pair<double, Eigen::Vector2cd>, 2> modes;
    for (int k = 0; k < 2; ++k) {
        const double e = fold_quasienergy(-std::arg(es.eigenvalues()(k)) / T, spec.omega_l());
        modes[k] = {e, es.eigenvectors().col(k).normalized()};
    }
    std::sort(modes.begin(), modes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int k = 0; k < 2; ++k) {
        out.epsilon[k] = modes[k].first;
        out.modes[k] = modes[k].second;
    }
    return out;
}

}  // namespace mollow
