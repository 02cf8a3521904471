#include "mollow/driving.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mollow {

namespace {

double wrap_phase(double phi) {
    double w = std::remainder(phi, 2.0 * std::numbers::pi);
    if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
    return w;
}

DriveComponent canonical(const RawComponent& t) {
    double amp = t.amplitude;
    double phase = t.phase;
    if (t.waveform == Waveform::sine) phase -= std::numbers::pi / 2.0;
    if (amp < 0.0) {
        amp = -amp;
        phase += std::numbers::pi;
    }
    return {t.harmonic, amp, wrap_phase(phase)};
}

}  // namespace

DrivingSpec::DrivingSpec(double omega_l, std::span<const RawComponent> terms, double omega0)
    : omega0_(omega0), omega_l_(omega_l) {
    if (!(omega_l > 0.0) || !std::isfinite(omega_l))
        throw std::invalid_argument("driving frequency must be positive, got " + std::to_string(omega_l));
    if (!std::isfinite(omega0))
        throw std::invalid_argument("level splitting must be finite");

    std::map<int, std::vector<DriveComponent>> by_harmonic;
    for (const auto& t : terms) {
        if (t.harmonic < 1)
            throw std::invalid_argument("harmonic index must be >= 1, got " + std::to_string(t.harmonic));
        if (!std::isfinite(t.amplitude) || !std::isfinite(t.phase))
            throw std::invalid_argument("drive component must be finite");
        by_harmonic[t.harmonic].push_back(canonical(t));
    }

    for (auto& [m, group] : by_harmonic) {
        DriveComponent c = group.front();
        if (group.size() > 1) {
            std::complex<double> phasor{0.0, 0.0};
            for (const auto& g : group) phasor += std::polar(g.amplitude, g.phase);
            c = {m, std::abs(phasor), wrap_phase(std::arg(phasor))};
        }
        if (c.amplitude != 0.0) components_.push_back(c);
    }
}

double DrivingSpec::period() const { return 2.0 * std::numbers::pi / omega_l_; }

int DrivingSpec::max_harmonic() const {
    return components_.empty() ? 0 : components_.back().harmonic;
}

double DrivingSpec::amplitude_sum() const {
    double s = 0.0;
    for (const auto& c : components_) s += c.amplitude;
    return s;
}

double DrivingSpec::evaluate(double t) const {
    // Reduce into one period so that t and t + T give the same argument.
    const double T = period();
    double tau = std::fmod(t, T);
    if (tau < 0.0) tau += T;
    double f = 0.0;
    for (const auto& c : components_)
        f += c.amplitude * std::cos(c.harmonic * omega_l_ * tau + c.phase);
    return f;
}

DrivingSpec DrivingSpec::with_frequency(double omega_l) const {
    std::vector<RawComponent> raw;
    raw.reserve(components_.size());
    for (const auto& c : components_) raw.push_back({c.harmonic, c.amplitude, c.phase, Waveform::cosine});
    return DrivingSpec(omega_l, raw, omega0_);
}

DrivingSpec harmonic(double A, double omega_l) {
    if (A < 0.0) throw std::invalid_argument("amplitude must be nonnegative");
    const RawComponent terms[] = {{1, A / 2.0, 0.0, Waveform::cosine}};
    return DrivingSpec(omega_l, terms);
}

DrivingSpec biharmonic(double A, double r, double phi, double omega_l) {
    if (A < 0.0) throw std::invalid_argument("amplitude must be nonnegative");
    if (r < 0.0) throw std::invalid_argument("amplitude ratio must be nonnegative");
    const RawComponent terms[] = {
        {1, A / 2.0, 0.0, Waveform::cosine},
        {2, r * A / 2.0, phi, Waveform::cosine},
    };
    return DrivingSpec(omega_l, terms);
}

DrivingSpec square_wave_like(double A, double omega_l, int N) {
    if (N < 1) throw std::invalid_argument("square-wave term count must be >= 1");
    if (A < 0.0) throw std::invalid_argument("amplitude must be nonnegative");
    std::vector<RawComponent> terms;
    terms.reserve(static_cast<std::size_t>(N));
    for (int l = 1; l <= N; ++l) {
        const int m = 2 * l - 1;
        terms.push_back({m, A / (2.0 * m), 0.0, Waveform::sine});
    }
    return DrivingSpec(omega_l, terms);
}

DrivingSpec custom_drive(double omega_l, std::span<const RawComponent> terms) {
    return DrivingSpec(omega_l, terms);
}

double evaluate(const DrivingSpec& spec, double t) { return spec.evaluate(t); }

}  // namespace mollow
