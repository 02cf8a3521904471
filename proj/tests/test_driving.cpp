#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "mollow/driving.hpp"

using namespace mollow;
constexpr double pi = std::numbers::pi;

TEST_CASE("harmonic drive stores half the amplitude on sigma_x") {
    const auto zero = harmonic(0.0, 1.0);
    CHECK(zero.components().empty());
    for (double t : {0.0, 0.7, 3.1}) CHECK(zero.evaluate(t) == 0.0);

    const auto d = harmonic(0.3, 1.0);
    CHECK(d.evaluate(0.0) == doctest::Approx(0.15).epsilon(1e-15));
    CHECK(d.evaluate(pi) == doctest::Approx(-0.15).epsilon(1e-15));
    CHECK(evaluate(d, 2.0 * pi) == doctest::Approx(0.15).epsilon(1e-15));
    CHECK_THROWS_AS(harmonic(0.3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(harmonic(0.3, -1.0), std::invalid_argument);
}

TEST_CASE("biharmonic drive") {
    CHECK(biharmonic(0.5, 1.0, 0.0, 1.0).evaluate(0.0) == doctest::Approx(0.5));
    CHECK(std::abs(biharmonic(0.5, 1.0, pi, 1.0).evaluate(0.0)) < 1e-16);
    CHECK(biharmonic(0.5, 1.0, pi / 2.0, 1.0).evaluate(0.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(biharmonic(0.5, 1.0, 0.0, 0.0), std::invalid_argument);

    SUBCASE("r = 0 is the harmonic drive") {
        for (double phi : {0.0, 0.4, pi}) {
            const auto b = biharmonic(0.37, 0.0, phi, 0.8);
            const auto h = harmonic(0.37, 0.8);
            CHECK(b == h);
            CHECK(b.components() == h.components());
        }
    }
}

TEST_CASE("square-wave-like drive") {
    CHECK_THROWS_AS(square_wave_like(1.0, 1.0, 0), std::invalid_argument);
    CHECK(std::abs(square_wave_like(0.8, 1.0, 100).evaluate(0.0)) < 1e-15);

    SUBCASE("single term is a sine of amplitude A/2") {
        const auto d = square_wave_like(0.6, 1.3, 1);
        for (double t : {0.1, 0.9, 2.2}) CHECK(d.evaluate(t) == doctest::Approx(0.3 * std::sin(1.3 * t)).epsilon(1e-14));
    }

    SUBCASE("quarter period equals the partial Leibniz sum") {
        double leibniz = 0.0;
        for (int l = 1; l <= 100; ++l) leibniz += (l % 2 ? 1.0 : -1.0) / (2 * l - 1);
        const double v = square_wave_like(1.0, 1.0, 100).evaluate(pi / 2.0);
        CHECK(std::abs(v - 0.5 * leibniz) < 1e-12);
    }
}

TEST_CASE("normalization merges repeated harmonics and converts sines") {
    const RawComponent terms[] = {
        {2, 0.1, 0.0, Waveform::cosine},
        {1, 0.2, 0.0, Waveform::sine},
        {2, 0.1, 0.0, Waveform::cosine},
        {3, -0.05, 0.0, Waveform::cosine},
        {4, 0.0, 1.0, Waveform::cosine},
    };
    const auto d = custom_drive(1.0, terms);
    REQUIRE(d.components().size() == 3);
    CHECK(d.components()[0].harmonic == 1);
    CHECK(d.components()[0].phase == doctest::Approx(-pi / 2.0));
    CHECK(d.components()[1].amplitude == doctest::Approx(0.2));
    CHECK(d.components()[2].amplitude == doctest::Approx(0.05));
    CHECK(d.components()[2].phase == doctest::Approx(pi));
    for (double t : {0.0, 0.3, 1.7}) {
        const double direct = 0.2 * std::sin(t) + 0.2 * std::cos(2 * t) - 0.05 * std::cos(3 * t);
        CHECK(d.evaluate(t) == doctest::Approx(direct).epsilon(1e-14));
    }

    const RawComponent bad[] = {{0, 0.1, 0.0, Waveform::cosine}};
    CHECK_THROWS_AS(custom_drive(1.0, bad), std::invalid_argument);
}

TEST_CASE("property: drives are periodic and real") {
    std::mt19937_64 gen(20240611);
    std::uniform_real_distribution<double> amp(0.0, 2.0);
    std::uniform_real_distribution<double> freq(0.1, 3.0);
    std::uniform_real_distribution<double> phase(-pi, pi);
    for (int trial = 0; trial < 200; ++trial) {
        const double w = freq(gen);
        const DrivingSpec d = trial % 2 ? biharmonic(amp(gen), amp(gen), phase(gen), w) : harmonic(amp(gen), w);
        std::uniform_real_distribution<double> time(-20.0, 20.0);
        const double t = time(gen);
        const double a = d.evaluate(t);
        const double b = d.evaluate(t + d.period());
        CHECK(std::isfinite(a));
        CHECK(std::abs(a - b) <= 1e-14 * (1.0 + std::abs(a)));
    }
    const auto sw = square_wave_like(0.5, 0.7, 100);
    std::uniform_real_distribution<double> one_period(0.0, sw.period());
    for (int trial = 0; trial < 50; ++trial) {
        const double t = one_period(gen);
        CHECK(std::abs(sw.evaluate(t) - sw.evaluate(t + sw.period())) <= 1e-14 * (1.0 + std::abs(sw.evaluate(t))));
    }
}
