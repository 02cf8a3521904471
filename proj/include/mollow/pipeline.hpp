#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mollow/baths.hpp"
#include "mollow/driving.hpp"
#include "mollow/rates.hpp"
#include "mollow/spectrum.hpp"
#include "mollow/transitions.hpp"

namespace mollow {

enum class Solver { sambe, chrw, rwa };
std::string_view to_string(Solver s);
Solver parse_solver(std::string_view name);

// Amplitude A of a drive that is a single fundamental cosine; throws std::invalid_argument otherwise.
double single_tone_amplitude(const DrivingSpec& spec);

/// Transition tables from the chosen solver, brought to the emission frame.
TransitionSet solve_transitions(const DrivingSpec& spec, Solver solver, int n_max = 0);

struct EmissionResult {
    TransitionSet transitions;
    RateSet rates;
    std::vector<SpectralLine> lines;
};

// Rates and lines for tables already in the emission frame.
EmissionResult emission_from(const TransitionSet& transitions, std::span<const BathSpec> baths, bool lamb_shift = false);

EmissionResult compute_emission(const DrivingSpec& spec, std::span<const BathSpec> baths, Solver solver,
                                int n_max = 0, bool lamb_shift = false);

}  // namespace mollow
