#include "mollow/spectrum.hpp"

#include <algorithm>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "mollow/format.hpp"

namespace mollow {

namespace {

constexpr double kMinWeight = 1e-14;

}  // namespace

std::string_view to_string(LineKind k) {
    switch (k) {
        case LineKind::coherent_delta: return "coherent_delta";
        case LineKind::incoherent_central: return "incoherent_central";
        case LineKind::incoherent_red: return "incoherent_red";
        case LineKind::incoherent_blue: return "incoherent_blue";
    }
    return "?";
}

std::vector<SpectralLine> assemble(const TransitionTable& x_plus, const RateSet& rates, double omega_l,
                                   std::optional<FourierWindow> n_window) {
    if (x_plus.op() != Operator::plus) throw std::invalid_argument("spectrum needs the sigma_+ table");
    const FourierWindow win = n_window.value_or(FourierWindow{-x_plus.n_max(), x_plus.n_max()});
    const double rho_pp = rates.rho_pp_ss;
    const double rho_mm = rates.rho_mm_ss();
    const double inversion2 = (rho_pp - rho_mm) * (rho_pp - rho_mm);
    const double gap = rates.omega_pm;

    std::vector<SpectralLine> lines;
    auto push = [&](LineKind kind, double center, double weight, double hwhm, Mode a, Mode b, int n) {
        if (weight > kMinWeight) lines.push_back({kind, center, weight, hwhm, a, b, n, center <= 0.0});
    };
    for (int n = win.lo; n <= win.hi; ++n) {
        const double pp = std::norm(x_plus(Mode::plus, Mode::plus, n));
        const double mp = std::norm(x_plus(Mode::minus, Mode::plus, n));
        const double pm = std::norm(x_plus(Mode::plus, Mode::minus, n));
        const double c = n * omega_l;
        push(LineKind::coherent_delta, c, std::numbers::pi * pp * inversion2, 0.0, Mode::plus, Mode::plus, n);
        push(LineKind::incoherent_central, c, pp * (1.0 - inversion2), rates.gamma_rel, Mode::plus, Mode::plus, n);
        push(LineKind::incoherent_red, c - gap, mp * rho_mm, rates.gamma_deph, Mode::minus, Mode::plus, n);
        push(LineKind::incoherent_blue, c + gap, pm * rho_pp, rates.gamma_deph, Mode::plus, Mode::minus, n);
    }
    return lines;
}

double lorentzian(const SpectralLine& line, double omega) {
    const double d = omega - line.center;
    return line.weight * line.hwhm / (line.hwhm * line.hwhm + d * d);
}

std::vector<SpectrumSample> sample(std::span<const SpectralLine> lines, double omega_min, double omega_max,
                                   int points, double delta_width) {
    if (points < 2) throw std::invalid_argument("sampling needs at least two points");
    if (!(omega_min < omega_max)) throw std::invalid_argument("sampling window must satisfy omega_min < omega_max");
    std::vector<SpectrumSample> grid(static_cast<std::size_t>(points));
    const double step = (omega_max - omega_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        const double w = i == points - 1 ? omega_max : omega_min + i * step;
        double s = 0.0;
        for (const auto& l : lines) {
            if (l.kind != LineKind::coherent_delta) {
                s += lorentzian(l, w);
            } else if (delta_width > 0.0) {
                SpectralLine broadened = l;
                broadened.hwhm = delta_width;
                broadened.weight = l.weight / std::numbers::pi;
                s += lorentzian(broadened, w);
            }
        }
        grid[static_cast<std::size_t>(i)] = {w, s};
    }
    return grid;
}

std::pair<double, double> sideband_weights(std::span<const SpectralLine> lines, int n) {
    double red = 0.0;
    double blue = 0.0;
    for (const auto& l : lines) {
        if (l.n != n) continue;
        if (l.kind == LineKind::incoherent_red) red += l.weight;
        if (l.kind == LineKind::incoherent_blue) blue += l.weight;
    }
    return {red, blue};
}

double g1_at_zero(const TransitionTable& x_plus, const RateSet& rates) {
    double g = 0.0;
    for (int n = -x_plus.n_max(); n <= x_plus.n_max(); ++n) {
        g += std::norm(x_plus(Mode::plus, Mode::plus, n)) +
             std::norm(x_plus(Mode::minus, Mode::plus, n)) * rates.rho_mm_ss() +
             std::norm(x_plus(Mode::plus, Mode::minus, n)) * rates.rho_pp_ss;
    }
    return g;
}

double integrated_weight(std::span<const SpectralLine> lines) {
    double s = 0.0;
    for (const auto& l : lines) s += l.kind == LineKind::coherent_delta ? l.weight / std::numbers::pi : l.weight;
    return s;
}

void write_line_catalog(std::ostream& os, std::span<const SpectralLine> lines) {
    os << "# kind center weight hwhm alpha beta n negative_center\n";
    for (const auto& l : lines) {
        os << to_string(l.kind) << ' ' << fmt17(l.center) << ' ' << fmt17(l.weight) << ' ' << fmt17(l.hwhm) << ' '
           << to_string(l.alpha) << ' ' << to_string(l.beta) << ' ' << l.n << ' ' << (l.negative_center ? 1 : 0)
           << '\n';
    }
}

void write_grid(std::ostream& os, std::span<const SpectrumSample> grid) {
    os << "# omega intensity\n";
    for (const auto& s : grid) os << fmt17(s.omega) << ' ' << fmt17(s.intensity) << '\n';
}

}  // namespace mollow
