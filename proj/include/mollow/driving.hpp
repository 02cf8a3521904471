#pragma once

#include <span>
#include <vector>

namespace mollow {

enum class Waveform { cosine, sine };

// One Fourier term a*cos(m*omega_l*t + phase) of the sigma_x coefficient.
struct DriveComponent {
    int harmonic = 1;
    double amplitude = 0.0;
    double phase = 0.0;

    bool operator==(const DriveComponent&) const = default;
};

// Term as supplied by a caller, before conversion to cosine form.
struct RawComponent {
    int harmonic = 1;
    double amplitude = 0.0;
    double phase = 0.0;
    Waveform waveform = Waveform::cosine;
};

/// Periodic drive H(t) = omega0/2 sigma_z + f(t) sigma_x with f stored as a
/// normalized cosine series: one component per harmonic, sorted, nonzero
/// amplitudes, phases in (-pi, pi].
class DrivingSpec {
public:
    DrivingSpec(double omega_l, std::span<const RawComponent> terms, double omega0 = 1.0);

    double omega0() const { return omega0_; }
    double omega_l() const { return omega_l_; }
    double period() const;
    const std::vector<DriveComponent>& components() const { return components_; }

    int max_harmonic() const;
    // Sum of |a_m|; twice this is the peak-to-peak bound of f.
    double amplitude_sum() const;

    double evaluate(double t) const;

    // Copy with a different fundamental frequency; components unchanged.
    DrivingSpec with_frequency(double omega_l) const;

    bool operator==(const DrivingSpec&) const = default;

private:
    double omega0_;
    double omega_l_;
    std::vector<DriveComponent> components_;
};

DrivingSpec harmonic(double A, double omega_l);
DrivingSpec biharmonic(double A, double r, double phi, double omega_l);
DrivingSpec square_wave_like(double A, double omega_l, int N);
DrivingSpec custom_drive(double omega_l, std::span<const RawComponent> terms);

double evaluate(const DrivingSpec& spec, double t);

}  // namespace mollow
