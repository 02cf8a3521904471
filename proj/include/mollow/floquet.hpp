#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mollow/driving.hpp"
#include "mollow/transitions.hpp"

namespace mollow {

// Raised when a numerical procedure cannot reach its accuracy target.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Drop the counter-rotating half of each drive term when set to rotating.
enum class Coupling { full, rotating };

/// Sambe basis |level, n>, n in [-n_max, n_max], ordered (-, +) within each n.
inline int sambe_index(Mode level, int n, int n_max) { return 2 * (n + n_max) + index(level); }

// Fold into the half-open zone (-omega_l/2, omega_l/2].
double fold_quasienergy(double e, double omega_l);

/// Two Floquet modes with their Fourier tables and first-zone quasienergies.
struct FloquetSolution {
    double omega_l = 1.0;
    int n_max = 0;
    std::array<double, 2> epsilon{};          // indexed by Mode
    std::array<Eigen::VectorXcd, 2> coeffs;   // Sambe-ordered, indexed by Mode
    std::array<double, 2> mean_sigma_z{};     // time-averaged <sigma_z> per mode
    double boundary_weight = 0.0;             // max over modes of the weight at |n| = n_max
    std::vector<std::string> warnings;

    double epsilon_plus() const { return epsilon[index(Mode::plus)]; }
    double epsilon_minus() const { return epsilon[index(Mode::minus)]; }
    cplx coefficient(Mode mode, Mode level, int n) const;
    // Delta_{ab,n} = eps_a - eps_b + n omega_l
    double transition_frequency(Mode a, Mode b, int n) const;
};

struct SolveOptions {
    int n_max = 0;  // 0 selects default_n_max
    Coupling coupling = Coupling::full;
    double boundary_tolerance = 1e-10;
    bool escalate = true;
};

int default_n_max(const DrivingSpec& spec);

Eigen::MatrixXcd build_floquet_matrix(const DrivingSpec& spec, int n_max, Coupling coupling = Coupling::full);

FloquetSolution solve(const DrivingSpec& spec, int n_max);
FloquetSolution solve(const DrivingSpec& spec, const SolveOptions& options = {});

TransitionTable transition_coefficients(const FloquetSolution& sol, Operator op);

// Tables for x, z and sigma_+ in the gauge of the solution.
TransitionSet make_transition_set(const FloquetSolution& sol);

struct MonodromyResult {
    std::array<double, 2> epsilon{};             // folded, ascending
    std::array<Eigen::Vector2cd, 2> modes;       // |u(0)> in (-, +) level order
    double unitarity_error = 0.0;
};

int default_monodromy_steps(int n_max);

/// Independent check: RK4 propagation over one period and diagonalization
/// of the resulting propagator.
MonodromyResult monodromy_oracle(const DrivingSpec& spec, int steps);

}  // namespace mollow
