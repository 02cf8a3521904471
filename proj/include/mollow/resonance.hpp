#pragma once

#include <vector>

#include "mollow/driving.hpp"
#include "mollow/floquet.hpp"

namespace mollow {

// P = (1 - 4 |X^z_{++,0}|^2) / 2, the period-averaged probability of leaving |+>.
double mean_transition_probability(const FloquetSolution& sol);
double mean_transition_probability(const DrivingSpec& spec, int n_max = 0, Coupling coupling = Coupling::full);

// Same quantity with only the co-rotating parts of the two-tone drive (A/2)[cos wt + r cos 2wt].
double rwa_biharmonic_pbar(double A, double r, double omega_l, int n_max = 0);

struct ResonancePeak {
    double omega_l = 0.0;
    double pbar = 0.0;
    double fwhm = 0.0;  // from the sampled curve; 0 when a half-maximum crossing is not bracketed
};

struct ResonanceScan {
    std::vector<double> omega_l_grid;
    std::vector<double> pbar_values;
    std::vector<ResonancePeak> peaks;
};

struct ScanOptions {
    double omega_min = 0.2;
    double omega_max = 1.2;
    int grid_points = 2000;
    double refine_tol = 1e-4;
    double threshold = 0.05;
    Coupling coupling = Coupling::full;
    int n_max = 0;
};

/// Coarse grid scan of P over the driving frequency, each local maximum (strict,
/// or a run of equal samples) above the threshold refined by golden-section search. Only the frequency of
/// the template is varied.
ResonanceScan scan_resonances(const DrivingSpec& templ, const ScanOptions& options = {});

}  // namespace mollow
