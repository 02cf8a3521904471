#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "mollow/resonance.hpp"

using namespace mollow;

namespace {

ScanOptions window(double lo, double hi, int points, Coupling c = Coupling::full) {
    ScanOptions o;
    o.omega_min = lo;
    o.omega_max = hi;
    o.grid_points = points;
    o.coupling = c;
    return o;
}

const ResonancePeak& tallest(const ResonanceScan& s) {
    REQUIRE_FALSE(s.peaks.empty());
    const ResonancePeak* best = &s.peaks.front();
    for (const auto& p : s.peaks)
        if (p.pbar > best->pbar) best = &p;
    return *best;
}

}  // namespace

TEST_CASE("mean transition probability examples") {
    CHECK(mean_transition_probability(harmonic(0.0, 0.7)) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(mean_transition_probability(harmonic(0.2, 1.0), 0, Coupling::rotating) - 0.5) < 1e-12);
    CHECK(std::abs(rwa_biharmonic_pbar(0.2, 0.0, 1.0) - 0.5) < 1e-12);

    const auto at = [](double w) { return mean_transition_probability(biharmonic(0.5, 1.0, 0.0, w)); };
    CHECK(at(0.9933) > at(0.9913));
    CHECK(at(0.9933) > at(0.9953));
}

TEST_CASE("two-tone resonance positions") {
    const auto scan = scan_resonances(biharmonic(0.5, 1.0, 0.0, 1.0), window(0.2, 1.2, 1000));
    // A narrower fifth resonance near 0.225 is found as well.
    CHECK(scan.peaks.size() == 5);
    for (double expected : {0.2834, 0.3844, 0.5572, 0.9933}) {
        double nearest = 1.0;
        for (const auto& p : scan.peaks) nearest = std::min(nearest, std::abs(p.omega_l - expected));
        CHECK(nearest <= 1e-3);
    }
    for (const auto& p : scan.peaks) CHECK(p.pbar > 0.05);
    for (double p : scan.pbar_values) {
        CHECK(p >= 0.0);
        CHECK(p <= 0.5 + 1e-12);
    }
}

TEST_CASE("resonance width shrinks with the amplitude") {
    const auto weak = tallest(scan_resonances(harmonic(0.05, 1.0), window(0.85, 1.15, 600)));
    const auto strong = tallest(scan_resonances(harmonic(0.15, 1.0), window(0.85, 1.15, 600)));
    CHECK(weak.fwhm > 0.0);
    CHECK(strong.fwhm > 0.0);
    CHECK(weak.fwhm < strong.fwhm);
    CHECK(std::abs(weak.omega_l - 1.0) < 1e-3);
}

TEST_CASE("rotating-wave resonance has no Bloch-Siegert shift") {
    const auto rwa = tallest(scan_resonances(harmonic(0.3, 1.0), window(0.9, 1.1, 400, Coupling::rotating)));
    CHECK(std::abs(rwa.omega_l - 1.0) <= 1e-4);
    CHECK(rwa.pbar == doctest::Approx(0.5).epsilon(1e-6));

    const auto full = scan_resonances(biharmonic(0.5, 1.0, 0.0, 1.0), window(0.9, 1.1, 400));
    const auto cut = scan_resonances(biharmonic(0.5, 1.0, 0.0, 1.0), window(0.9, 1.1, 400, Coupling::rotating));
    CHECK(std::abs(tallest(full).omega_l - tallest(cut).omega_l) > 1e-3);
    for (double w : {0.5, 0.8, 1.05})
        CHECK(rwa_biharmonic_pbar(0.5, 1.0, w) ==
              doctest::Approx(mean_transition_probability(biharmonic(0.5, 1.0, 0.0, w), 0, Coupling::rotating)).epsilon(1e-12));
}

TEST_CASE("harmonic main resonance shift grows with the amplitude") {
    double previous = 0.0;
    for (double A : {0.1, 0.3, 0.5}) {
        const auto p = tallest(scan_resonances(harmonic(A, 1.0), window(0.95, 1.1, 300)));
        const double shift = std::abs(p.omega_l - 1.0);
        CHECK(shift > previous);
        // Leading-order estimate (A/2)^2 / 4 for the shift.
        CHECK(shift == doctest::Approx(A * A / 16.0).epsilon(0.15));
        previous = shift;
    }
}

TEST_CASE("property: probability bounds") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> amp(0.0, 2.0), freq(0.1, 2.0), ratio(0.0, 2.0), phase(-3.0, 3.0);
    for (int i = 0; i < 40; ++i) {
        const auto spec = biharmonic(amp(gen), ratio(gen), phase(gen), freq(gen));
        const double p = mean_transition_probability(spec);
        CHECK(p >= -1e-14);
        CHECK(p <= 0.5 + 1e-12);
    }
}

TEST_CASE("refined peaks are stable under grid doubling") {
    const auto coarse = scan_resonances(biharmonic(0.5, 1.0, 0.0, 1.0), window(0.5, 0.6, 100));
    const auto fine = scan_resonances(biharmonic(0.5, 1.0, 0.0, 1.0), window(0.5, 0.6, 200));
    REQUIRE(coarse.peaks.size() == 1);
    REQUIRE(fine.peaks.size() == 1);
    CHECK(std::abs(coarse.peaks[0].omega_l - fine.peaks[0].omega_l) <= 1e-4);
}

TEST_CASE("scan argument checks") {
    const auto t = harmonic(0.3, 1.0);
    CHECK_THROWS_AS(scan_resonances(t, window(0.0, 1.0, 100)), std::invalid_argument);
    CHECK_THROWS_AS(scan_resonances(t, window(0.5, 2.5, 100)), std::invalid_argument);
    CHECK_THROWS_AS(scan_resonances(t, window(0.8, 0.8, 100)), std::invalid_argument);
    CHECK_THROWS_AS(scan_resonances(t, window(0.5, 0.8, 2)), std::invalid_argument);
}
