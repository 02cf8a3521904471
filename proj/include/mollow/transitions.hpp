#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace mollow {

using cplx = std::complex<double>;

// Floquet-mode label. Bare levels use the same two values.
enum class Mode { minus = 0, plus = 1 };

constexpr Mode other(Mode a) { return a == Mode::plus ? Mode::minus : Mode::plus; }
constexpr int index(Mode a) { return static_cast<int>(a); }
std::string_view to_string(Mode a);

// Coupling operators: x = sigma_x/2, z = sigma_z/2, plus = sigma_+, minus = sigma_-.
enum class Operator { x, z, plus, minus };
std::string_view to_string(Operator op);

/// Fourier components X_{ab,n} of <u_a(t)|O|u_b(t)> over n in [-n_max, n_max].
/// Entries outside the stored range read as zero.
class TransitionTable {
public:
    TransitionTable() = default;
    TransitionTable(Operator op, int n_max);

    Operator op() const { return op_; }
    int n_max() const { return n_max_; }

    cplx operator()(Mode a, Mode b, int n) const;
    cplx& at(Mode a, Mode b, int n);

    // Relabel n -> n + shift for the rows where the selected mode appears.
    // Implements replacing mode `which` by its copy shifted by k photons.
    TransitionTable shifted(Mode which, int k) const;
    TransitionTable swapped() const;

    // Largest |X| among entries with |n| == n_max.
    double edge_magnitude() const;

private:
    std::size_t slot(Mode a, Mode b, int n) const;

    Operator op_ = Operator::x;
    int n_max_ = 0;
    std::vector<cplx> data_;
};

// X^- obtained from X^+ through X^-_{ab,n} = conj(X^+_{ba,-n}).
TransitionTable lowering_from_raising(const TransitionTable& plus);

/// Quasienergies plus the tables needed downstream, in one gauge.
/// The quasienergies need not lie in the first zone; the gap
/// epsilon_plus - epsilon_minus fixes where the sidebands sit.
struct TransitionSet {
    double omega_l = 1.0;
    double epsilon_plus = 0.0;
    double epsilon_minus = 0.0;
    TransitionTable x;
    TransitionTable z;
    TransitionTable plus;

    double gap() const { return epsilon_plus - epsilon_minus; }
    const TransitionTable& table(Operator op) const;

    // Mode `which` replaced by its copy shifted by k photons: epsilon += k*omega_l.
    TransitionSet shifted(Mode which, int k) const;
    TransitionSet swapped() const;
};

/// Photon gauge used for spectra. When every X^+_{+-,n} shares one parity of n
/// (harmonic drive), the + mode is shifted so those entries sit at odd n and the
/// gap lands in (-omega_l, omega_l]; otherwise the gap lands in (-omega_l/2,
/// omega_l/2]. Labels are swapped if the gap is negative.
TransitionSet emission_frame(const TransitionSet& t);

}  // namespace mollow
