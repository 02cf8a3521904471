#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "mollow/baths.hpp"
#include "oracles.hpp"

using namespace mollow;
constexpr double pi = std::numbers::pi;

TEST_CASE("spectral functions") {
    const auto rad = BathSpec::radiative(0.02);
    CHECK(rad.coupling == Operator::x);
    for (double w : {1e-6, 0.5, 3.0}) CHECK(spectral_function(rad, w) == doctest::Approx(0.04 / pi));

    const auto ohm = BathSpec::ohmic(0.01, 10.0);
    CHECK(ohm.coupling == Operator::z);
    CHECK(spectral_function(ohm, 10.0) == doctest::Approx(0.01 * 10.0 * std::exp(-1.0)));

    for (const auto& b : {rad, ohm}) {
        CHECK(spectral_function(b, -0.3) == 0.0);
        CHECK(spectral_function(b, 0.0) == 0.0);
    }
}

TEST_CASE("bath validation") {
    CHECK_THROWS_AS(BathSpec::radiative(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec::ohmic(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec::ohmic(0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(BathSpec::radiative(0.1, Operator::plus), std::invalid_argument);
}

TEST_CASE("half-Fourier rates") {
    const auto rad = BathSpec::radiative(0.02);
    CHECK(half_fourier_rate(rad, -0.5).real() == doctest::Approx(0.04));
    CHECK(half_fourier_rate(rad, -0.5).imag() == 0.0);
    CHECK(half_fourier_rate(rad, 0.5) == cplx(0.0, 0.0));

    const auto ohm = BathSpec::ohmic(0.01, 10.0);
    CHECK(half_fourier_rate(ohm, -1.0).real() == doctest::Approx(pi * 0.01 * std::exp(-0.1)));
    CHECK(half_fourier_rate(ohm, 0.5) == cplx(0.0, 0.0));
}

TEST_CASE("principal-value shift against the exponential-integral form") {
    const auto ohm = BathSpec::ohmic(0.03, 4.0);
    for (double x : {-2.0, -0.3, 0.0, 0.2, 1.0, 3.7, 9.0}) {
        CHECK(principal_value_shift(ohm, x) == doctest::Approx(oracle::ohmic_pv(0.03, 4.0, x)).epsilon(1e-10));
    }
    CHECK(principal_value_shift(BathSpec::radiative(0.02), 0.7) == 0.0);
    CHECK(half_fourier_rate(ohm, -1.0, true).imag() == doctest::Approx(-oracle::ohmic_pv(0.03, 4.0, 1.0)).epsilon(1e-10));
    CHECK(half_fourier_rate(ohm, -1.0, false).imag() == 0.0);
}

TEST_CASE("property: nonnegativity, one-sidedness and conjugation") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    const std::vector<BathSpec> baths = {BathSpec::radiative(0.05), BathSpec::ohmic(0.02, 3.0)};
    for (int i = 0; i < 200; ++i) {
        const double delta = d(gen);
        for (const auto& b : baths) {
            CHECK(spectral_function(b, delta) >= 0.0);
            if (delta >= 0.0) CHECK(half_fourier_rate(b, delta).real() == 0.0);
            const bool lamb = i % 20 == 0;
            const cplx plus = half_fourier_rate(b, delta, lamb);
            const cplx minus = half_fourier_rate_minus(b, -delta, lamb);
            CHECK(std::abs(plus - std::conj(minus)) < 1e-15);
        }
    }
}
