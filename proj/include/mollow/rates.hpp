#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mollow/baths.hpp"
#include "mollow/transitions.hpp"

namespace mollow {

struct RateSet {
    double W_minus_plus = 0.0;  // pumping rate into the + Floquet state
    double gamma_rel = 0.0;
    double gamma_deph = 0.0;
    double delta_omega = 0.0;   // zero unless the Lamb-shift gate is on
    double rho_pp_ss = 0.0;
    double omega_pm = 0.0;      // eps_+ - eps_- + delta_omega
    std::vector<std::string> warnings;

    double rho_mm_ss() const { return 1.0 - rho_pp_ss; }
};

struct RateOptions {
    bool lamb_shift = false;
    // Relative share of the outermost |n| shell above which the table range is rejected.
    double shell_tolerance = 1e-12;
    // Secular check: warn when |omega_pm| < secular_factor * max(gamma_rel, gamma_deph).
    double secular_factor = 10.0;
};

/// Rates of the secular Floquet master equation at zero temperature, summed over
/// all baths and over the full Fourier range of the tables.
RateSet compute_rates(const TransitionSet& t, std::span<const BathSpec> baths, const RateOptions& options = {});

std::pair<double, double> steady_populations(const RateSet& rates);

}  // namespace mollow
