#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "mollow/chrw.hpp"
#include "mollow/floquet.hpp"
#include "mollow/pipeline.hpp"
#include "mollow/rates.hpp"
#include "oracles.hpp"

using namespace mollow;
constexpr double pi = std::numbers::pi;

namespace {

RateSet rwa_rates(double A, double w, std::vector<BathSpec> baths, bool lamb = false) {
    RateOptions opt;
    opt.lamb_shift = lamb;
    return compute_rates(emission_frame(rwa_solution(A, 1.0, w).transitions), baths, opt);
}

}  // namespace

TEST_CASE("rotating-wave rates on resonance") {
    const double kappa = 0.02;
    const auto r = rwa_rates(0.2, 1.0, {BathSpec::radiative(kappa)});
    CHECK(std::abs(r.gamma_rel - kappa / 2.0) < 1e-12);
    CHECK(std::abs(r.gamma_deph - 3.0 * kappa / 4.0) < 1e-12);
    CHECK(std::abs(r.rho_pp_ss - 0.5) < 1e-12);
    CHECK(r.delta_omega == 0.0);
    CHECK(r.omega_pm == doctest::Approx(0.1));
}

TEST_CASE("rotating-wave rates off resonance") {
    const double kappa = 0.03;
    for (double A : {0.1, 0.3, 0.6}) {
        for (double w : {0.8, 0.95, 1.1, 1.3}) {
            const auto r = rwa_rates(A, w, {BathSpec::radiative(kappa)});
            const double th = rwa_params(A, 1.0, w).theta_A;
            const double s4 = std::pow(std::sin(th), 4), c4 = std::pow(std::cos(th), 4);
            const double s2 = std::pow(std::sin(2.0 * th), 2);
            CHECK(r.rho_pp_ss == doctest::Approx(s4 / (s4 + c4)).epsilon(1e-12));
            CHECK(r.gamma_rel == doctest::Approx(kappa * (s4 + c4)).epsilon(1e-12));
            CHECK(r.gamma_deph == doctest::Approx(kappa / 2.0 * (s4 + c4 + s2)).epsilon(1e-12));
        }
    }
}

TEST_CASE("rotating-wave population with a dephasing bath") {
    const double kappa = 0.02;
    for (double alpha : {0.0, 0.005, 0.01, 0.05}) {
        for (double A : {0.1, 0.3}) {
            for (double w : {0.9, 1.0, 1.1}) {
                const auto ohm = BathSpec::ohmic(alpha, 10.0);
                const auto r = rwa_rates(A, w, {BathSpec::radiative(kappa), ohm});
                const auto p = rwa_params(A, 1.0, w);
                const double s4 = std::pow(std::sin(p.theta_A), 4), c4 = std::pow(std::cos(p.theta_A), 4);
                const double s2 = std::pow(std::sin(2.0 * p.theta_A), 2);
                const double expected =
                    kappa * s4 / (kappa * (c4 + s4) + pi / 2.0 * spectral_function(ohm, p.Omega_R) * s2);
                CHECK(r.rho_pp_ss == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("steady populations") {
    RateSet r;
    r.gamma_rel = 0.4;
    r.W_minus_plus = 0.2;
    r.rho_pp_ss = r.W_minus_plus / r.gamma_rel;
    CHECK(steady_populations(r) == std::pair{0.5, 0.5});
    r.W_minus_plus = 0.0;
    r.rho_pp_ss = 0.0;
    CHECK(steady_populations(r) == std::pair{0.0, 1.0});
}

TEST_CASE("dephasing lowers the upper Floquet population") {
    const std::vector<BathSpec> clean = {BathSpec::radiative(0.02)};
    const std::vector<BathSpec> noisy = {BathSpec::radiative(0.02), BathSpec::ohmic(0.01, 10.0)};
    for (Solver s : {Solver::sambe, Solver::chrw}) {
        const auto t = solve_transitions(harmonic(0.3, 1.1), s);
        CHECK(compute_rates(t, noisy).rho_pp_ss < compute_rates(t, clean).rho_pp_ss);
    }
    for (double A : {0.05, 0.2, 0.4, 0.8}) {
        for (double w : {0.7, 0.9, 1.0, 1.2, 1.5}) {
            for (double alpha : {0.001, 0.01, 0.1}) {
                const auto a0 = rwa_rates(A, w, {BathSpec::radiative(0.02)});
                const auto a1 = rwa_rates(A, w, {BathSpec::radiative(0.02), BathSpec::ohmic(alpha, 10.0)});
                CHECK(a1.rho_pp_ss <= a0.rho_pp_ss);
            }
        }
    }
}

TEST_CASE("detailed balance holds only in the rotating-wave limit") {
    for (double A : {0.1, 0.4, 0.9}) {
        for (double w : {0.8, 1.0, 1.2}) {
            const auto t = emission_frame(rwa_solution(A, 1.0, w).transitions);
            const auto r = compute_rates(t, std::vector{BathSpec::radiative(0.02)});
            const double blue = std::norm(t.plus(Mode::plus, Mode::minus, 1)) * r.rho_pp_ss;
            const double red = std::norm(t.plus(Mode::minus, Mode::plus, 1)) * r.rho_mm_ss();
            CHECK(std::abs(blue - red) < 1e-12);
        }
    }
    for (Solver s : {Solver::sambe, Solver::chrw}) {
        for (double A : {0.25, 0.5, 0.75, 1.0}) {
            const auto t = solve_transitions(harmonic(A, 1.0), s);
            const auto r = compute_rates(t, std::vector{BathSpec::radiative(0.02)});
            const double blue = std::norm(t.plus(Mode::plus, Mode::minus, 1)) * r.rho_pp_ss;
            const double red = std::norm(t.plus(Mode::minus, Mode::plus, 1)) * r.rho_mm_ss();
            CHECK(red < blue);
        }
    }
}

TEST_CASE("rates scale linearly with the bath strength") {
    const auto t = solve_transitions(biharmonic(0.5, 0.5, 0.2, 0.9), Solver::sambe);
    const auto a = compute_rates(t, std::vector{BathSpec::radiative(0.01), BathSpec::ohmic(0.004, 5.0)});
    const auto b = compute_rates(t, std::vector{BathSpec::radiative(0.03), BathSpec::ohmic(0.012, 5.0)});
    CHECK(b.W_minus_plus == doctest::Approx(3.0 * a.W_minus_plus).epsilon(1e-12));
    CHECK(b.gamma_rel == doctest::Approx(3.0 * a.gamma_rel).epsilon(1e-12));
    CHECK(b.gamma_deph == doctest::Approx(3.0 * a.gamma_deph).epsilon(1e-12));
    CHECK(b.rho_pp_ss == doctest::Approx(a.rho_pp_ss).epsilon(1e-12));
    CHECK(a.gamma_rel >= a.W_minus_plus);
    CHECK(a.gamma_deph > 0.0);
}

TEST_CASE("Lamb shift gate") {
    const double A = 0.3, w = 1.05;
    const std::vector<BathSpec> baths = {BathSpec::radiative(0.02), BathSpec::ohmic(0.02, 3.0)};
    const auto off = rwa_rates(A, w, baths, false);
    const auto on = rwa_rates(A, w, baths, true);
    CHECK(off.delta_omega == 0.0);
    // Only the sigma_z/2 channel at n = 0 contributes: |X^z_{-+,0}|^2 = sin^2(2 theta) / 4.
    const auto p = rwa_params(A, 1.0, w);
    const double x2 = std::pow(std::sin(2.0 * p.theta_A), 2) / 4.0;
    const double expected = x2 * (oracle::ohmic_pv(0.02, 3.0, -p.Omega_R) - oracle::ohmic_pv(0.02, 3.0, p.Omega_R));
    CHECK(on.delta_omega == doctest::Approx(expected).epsilon(1e-9));
    CHECK(on.omega_pm == doctest::Approx(p.Omega_R + expected).epsilon(1e-12));
    CHECK(on.rho_pp_ss == off.rho_pp_ss);
}

TEST_CASE("rate errors and warnings") {
    const auto t = emission_frame(rwa_solution(0.2, 1.0, 1.0).transitions);
    CHECK_THROWS_AS(compute_rates(t, std::vector<BathSpec>{}), std::invalid_argument);

    TransitionSet narrow = t;
    narrow.x.at(Mode::minus, Mode::plus, 2) = 0.3;
    CHECK_THROWS_AS(compute_rates(narrow, std::vector{BathSpec::radiative(0.02)}), NumericalError);

    const auto wide = compute_rates(t, std::vector{BathSpec::radiative(0.05)});
    CHECK_FALSE(wide.warnings.empty());
    const auto fine = compute_rates(t, std::vector{BathSpec::radiative(0.001)});
    CHECK(fine.warnings.empty());
}
