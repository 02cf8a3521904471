#include "mollow/resonance.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mollow {

namespace {

double pbar_at(const DrivingSpec& templ, double omega_l, const ScanOptions& opt) {
    return mean_transition_probability(templ.with_frequency(omega_l), opt.n_max, opt.coupling);
}

// Golden-section maximization on [a, b].
std::pair<double, double> refine_peak(const DrivingSpec& templ, double a, double b, const ScanOptions& opt) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = pbar_at(templ, c, opt);
    double fd = pbar_at(templ, d, opt);
    while (b - a > opt.refine_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = pbar_at(templ, c, opt);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = pbar_at(templ, d, opt);
        }
    }
    return fc > fd ? std::pair{c, fc} : std::pair{d, fd};
}

// Full width at half maximum from linear interpolation of the sampled curve.
double sampled_fwhm(const std::vector<double>& x, const std::vector<double>& y, std::size_t i, double peak) {
    const double half = peak / 2.0;
    if (y[i] <= half) return 0.0;
    std::size_t l = i;
    while (l > 0 && y[l] > half) --l;
    std::size_t r = i;
    while (r + 1 < y.size() && y[r] > half) ++r;
    if (y[l] > half || y[r] > half) return 0.0;
    auto cross = [&](std::size_t lo, std::size_t hi) {
        return x[lo] + (half - y[lo]) * (x[hi] - x[lo]) / (y[hi] - y[lo]);
    };
    return cross(r - 1, r) - cross(l, l + 1);
}

}  // namespace

double mean_transition_probability(const FloquetSolution& sol) {
    // X^z_{++,0} equals half the time-averaged <sigma_z> of the + mode.
    const double xz = sol.mean_sigma_z[index(Mode::plus)] / 2.0;
    return 0.5 * (1.0 - 4.0 * xz * xz);
}

double mean_transition_probability(const DrivingSpec& spec, int n_max, Coupling coupling) {
    SolveOptions opt;
    opt.n_max = n_max;
    opt.coupling = coupling;
    return mean_transition_probability(solve(spec, opt));
}

double rwa_biharmonic_pbar(double A, double r, double omega_l, int n_max) {
    return mean_transition_probability(biharmonic(A, r, 0.0, omega_l), n_max, Coupling::rotating);
}

ResonanceScan scan_resonances(const DrivingSpec& templ, const ScanOptions& opt) {
    if (!(opt.omega_min > 0.0) || !(opt.omega_max <= 2.0 * templ.omega0()) || !(opt.omega_min < opt.omega_max))
        throw std::invalid_argument("scan range must satisfy 0 < omega_min < omega_max <= 2 omega0");
    if (opt.grid_points < 3) throw std::invalid_argument("scan needs at least three grid points");
    if (!(opt.refine_tol > 0.0)) throw std::invalid_argument("refinement tolerance must be positive");

    ResonanceScan scan;
    const int N = opt.grid_points;
    const double step = (opt.omega_max - opt.omega_min) / (N - 1);
    scan.omega_l_grid.resize(static_cast<std::size_t>(N));
    scan.pbar_values.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        const double w = i == N - 1 ? opt.omega_max : opt.omega_min + i * step;
        scan.omega_l_grid[static_cast<std::size_t>(i)] = w;
        scan.pbar_values[static_cast<std::size_t>(i)] = pbar_at(templ, w, opt);
    }

    const auto& x = scan.omega_l_grid;
    const auto& y = scan.pbar_values;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        // A run of exactly equal samples counts as one maximum.
        std::size_t j = i;
        while (j + 2 < y.size() && y[j + 1] == y[i]) ++j;
        const bool peak = y[i] > y[i - 1] && y[j] > y[j + 1] && y[i] > opt.threshold;
        const std::size_t first = i;
        i = j;
        if (!peak) continue;
        auto [w, p] = refine_peak(templ, x[first - 1], x[j + 1], opt);
        if (y[first] > p) {
            w = x[first];
            p = y[first];
        }
        scan.peaks.push_back({w, p, sampled_fwhm(x, y, first, p)});
    }

    for (std::size_t k = 1; k < scan.peaks.size(); ++k) {
        const double spacing = scan.peaks[k].omega_l - scan.peaks[k - 1].omega_l;
        if (spacing < 2.0 * step) {
            std::ostringstream os;
            os << "scan grid too coarse: peaks " << spacing << " apart with grid step " << step;
            throw NumericalError(os.str());
        }
    }
    return scan;
}

}  // namespace mollow
