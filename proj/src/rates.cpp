#include "mollow/rates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "mollow/floquet.hpp"

namespace mollow {

RateSet compute_rates(const TransitionSet& t, std::span<const BathSpec> baths, const RateOptions& options) {
    if (baths.empty()) throw std::invalid_argument("at least one bath is required");
    const double pi = std::numbers::pi;
    const double w = t.omega_l;

    RateSet r;
    double total = 0.0;
    double shell = 0.0;

    for (const auto& bath : baths) {
        bath.validate();
        const TransitionTable& X = t.table(bath.coupling);
        const int K = X.n_max();
        auto G = [&](double omega) { return spectral_function(bath, omega); };
        for (int n = -K; n <= K; ++n) {
            const double d_mp = t.epsilon_minus - t.epsilon_plus + n * w;  // Delta_{-+,n}
            const double d_pm = t.epsilon_plus - t.epsilon_minus + n * w;  // Delta_{+-,n}
            const double x_mp = std::norm(X(Mode::minus, Mode::plus, n));
            const double x_pm = std::norm(X(Mode::plus, Mode::minus, n));
            const double x_pp = std::norm(X(Mode::plus, Mode::plus, n));

            const double pump = 2.0 * pi * x_mp * G(d_mp);
            const double rel = 2.0 * pi * x_pm * (G(d_pm) + G(-d_pm));
            const double deph = pi * (x_mp * (G(d_mp) + G(-d_mp)) + 2.0 * x_pp * (G(n * w) + G(-n * w)));
            r.W_minus_plus += pump;
            r.gamma_rel += rel;
            r.gamma_deph += deph;

            const double contribution = pump + rel + deph;
            total += contribution;
            if (std::abs(n) == K) shell += contribution;

            if (options.lamb_shift && x_mp > 0.0)
                r.delta_omega += x_mp * (principal_value_shift(bath, d_mp) - principal_value_shift(bath, -d_mp));
        }
    }

    if (total > 0.0 && shell > options.shell_tolerance * total) {
        std::ostringstream os;
        os << "transition tables too narrow: outermost Fourier shell carries " << shell / total
           << " of the total rate";
        throw NumericalError(os.str());
    }
    if (!(r.gamma_rel > 0.0)) throw NumericalError("relaxation rate vanishes; steady state is undefined");

    r.rho_pp_ss = r.W_minus_plus / r.gamma_rel;
    r.omega_pm = t.gap() + r.delta_omega;
    if (std::abs(r.omega_pm) < options.secular_factor * std::max(r.gamma_rel, r.gamma_deph)) {
        std::ostringstream os;
        os << "secular approximation questionable: |omega_pm| = " << std::abs(r.omega_pm)
           << " is not well above the linewidths";
        r.warnings.push_back(os.str());
    }
    return r;
}

std::pair<double, double> steady_populations(const RateSet& rates) {
    return {rates.rho_pp_ss, 1.0 - rates.rho_pp_ss};
}

}  // namespace mollow
