#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mollow/rates.hpp"
#include "mollow/transitions.hpp"

namespace mollow {

enum class LineKind { coherent_delta, incoherent_central, incoherent_red, incoherent_blue };
std::string_view to_string(LineKind k);

/// One term of the emission spectrum. Deltas carry hwhm 0; Lorentzians are
/// weight * hwhm / (hwhm^2 + (w - center)^2).
struct SpectralLine {
    LineKind kind = LineKind::incoherent_central;
    double center = 0.0;
    double weight = 0.0;
    double hwhm = 0.0;
    Mode alpha = Mode::plus;  // transition label (alpha, beta, n)
    Mode beta = Mode::plus;
    int n = 0;
    bool negative_center = false;  // center <= 0
};

struct SpectrumSample {
    double omega = 0.0;
    double intensity = 0.0;
};

struct FourierWindow {
    int lo = 0;
    int hi = 0;
};

// Lines with weight above 1e-14. Without a window every n in the table is considered.
std::vector<SpectralLine> assemble(const TransitionTable& x_plus, const RateSet& rates, double omega_l,
                                   std::optional<FourierWindow> n_window = std::nullopt);

// Sum of incoherent Lorentzians on a uniform grid. Deltas are skipped unless
// delta_width > 0, in which case they are drawn as Lorentzians of that width
// with weight/pi (plotting only).
std::vector<SpectrumSample> sample(std::span<const SpectralLine> lines, double omega_min, double omega_max,
                                   int points, double delta_width = 0.0);

double lorentzian(const SpectralLine& line, double omega);

// (red, blue) weights of the order-n triplet.
std::pair<double, double> sideband_weights(std::span<const SpectralLine> lines, int n);

// First-order correlation at zero delay.
double g1_at_zero(const TransitionTable& x_plus, const RateSet& rates);

// Coherent weight / pi plus incoherent weight.
double integrated_weight(std::span<const SpectralLine> lines);

void write_line_catalog(std::ostream& os, std::span<const SpectralLine> lines);
void write_grid(std::ostream& os, std::span<const SpectrumSample> grid);

}  // namespace mollow
