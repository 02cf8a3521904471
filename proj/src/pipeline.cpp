#include "mollow/pipeline.hpp"

#include <stdexcept>
#include <string>

#include "mollow/chrw.hpp"
#include "mollow/floquet.hpp"

namespace mollow {

std::string_view to_string(Solver s) {
    switch (s) {
        case Solver::sambe: return "sambe";
        case Solver::chrw: return "chrw";
        case Solver::rwa: return "rwa";
    }
    return "?";
}

Solver parse_solver(std::string_view name) {
    if (name == "sambe") return Solver::sambe;
    if (name == "chrw") return Solver::chrw;
    if (name == "rwa") return Solver::rwa;
    throw std::invalid_argument("unknown solver '" + std::string(name) + "' (expected sambe, chrw or rwa)");
}

double single_tone_amplitude(const DrivingSpec& spec) {
    const auto& c = spec.components();
    if (c.empty()) return 0.0;
    if (c.size() != 1 || c.front().harmonic != 1)
        throw std::invalid_argument("chrw and rwa solvers accept only a single-harmonic drive");
    return 2.0 * c.front().amplitude;
}

TransitionSet solve_transitions(const DrivingSpec& spec, Solver solver, int n_max) {
    switch (solver) {
        case Solver::sambe: return emission_frame(make_transition_set(solve(spec, n_max)));
        case Solver::chrw: {
            const double A = single_tone_amplitude(spec);
            return emission_frame(chrw_transitions(chrw_params(A, spec.omega0(), spec.omega_l())));
        }
        case Solver::rwa: {
            const double A = single_tone_amplitude(spec);
            return emission_frame(rwa_solution(A, spec.omega0(), spec.omega_l()).transitions);
        }
    }
    throw std::invalid_argument("unknown solver");
}

EmissionResult emission_from(const TransitionSet& transitions, std::span<const BathSpec> baths, bool lamb_shift) {
    EmissionResult r;
    r.transitions = transitions;
    RateOptions opt;
    opt.lamb_shift = lamb_shift;
    r.rates = compute_rates(r.transitions, baths, opt);
    r.lines = assemble(r.transitions.plus, r.rates, r.transitions.omega_l);
    return r;
}

EmissionResult compute_emission(const DrivingSpec& spec, std::span<const BathSpec> baths, Solver solver, int n_max,
                                bool lamb_shift) {
    return emission_from(solve_transitions(spec, solver, n_max), baths, lamb_shift);
}

}  // namespace mollow
