#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "wrt/fit.hpp"
#include "wrt/manifold_spec.hpp"
#include "wrt/spectrum.hpp"
#include "wrt/sweep.hpp"

using namespace wrt;

TEST_CASE("sweeps of S^3 and friends") {
    auto s3 = parse_manifold("s3");
    KSweep raw = k_sweep(Family::su2, s3, 5, 40, SweepNorm::raw);
    for (std::size_t i = 0; i < raw.k_values.size(); ++i) {
        double kk = raw.k_values[i] + 2.0;
        CHECK(std::abs(raw.values[i] -
                       std::sqrt(2.0 / kk) * std::sin(std::numbers::pi / kk)) < 1e-12);
        if (i) CHECK(std::abs(raw.values[i]) < std::abs(raw.values[i - 1])); // monotone to 0
    }
    KSweep div = k_sweep(Family::su2, s3, 5, 40, SweepNorm::divided_by_s3);
    for (auto v : div.values) CHECK(std::abs(v - 1.0) < 1e-12);

    KSweep l21 = k_sweep(Family::su2, parse_manifold("lens:2,1"), 1, 20, SweepNorm::raw);
    CHECK(l21.k_values.front() == 1);
    CHECK(std::abs(l21.values.front()) < 1e-12); // RP^3 vanishes at k=1

    // u1 sweeps take even levels only
    KSweep u = k_sweep(Family::u1, s3, 3, 11, SweepNorm::raw);
    for (auto k : u.k_values) CHECK(k % 2 == 0);
}

TEST_CASE("spectrum of S^3 is a single peak at zero") {
    KSweep div = k_sweep(Family::su2, parse_manifold("s3"), 20, 84, SweepNorm::divided_by_s3);
    PhaseSpectrum ps = phase_spectrum(div, 0.05);
    REQUIRE(ps.peaks.size() == 1);
    CHECK(ps.peaks[0].location == doctest::Approx(0.0));
}

TEST_CASE("window-too-short guard") {
    KSweep s = k_sweep(Family::su2, parse_manifold("s3"), 20, 40, SweepNorm::raw);
    CHECK_THROWS(phase_spectrum(s, 0.05));
}

TEST_CASE("parseval") {
    KSweep s = k_sweep(Family::su2, parse_manifold("lens:3,1"), 20, 120, SweepNorm::divided_by_s3);
    CHECK(parseval_defect(s) < 1e-9);
}

TEST_CASE("L(5,1) peak locations have the -m^2/5 pattern") {
    KSweep s = k_sweep(Family::su2, parse_manifold("lens:5,1"), 20, 276, SweepNorm::divided_by_s3);
    PhaseSpectrum ps = phase_spectrum(s, 0.05, 20);
    REQUIRE(!ps.peaks.empty());
    // every detected location sits in {(-m^2 r / 5 mod 1)} for one unit r;
    // with r = 1 the set is {0, 4/5, 1/5}
    for (const auto& p : ps.peaks) {
        bool ok = false;
        for (int m = 0; m <= 2; ++m) {
            double loc = std::fmod(1.0 - m * m / 5.0 + 2.0, 1.0);
            if (std::abs(p.location - loc) < 1.0 / 200 || std::abs(p.location) < 1e-9) ok = true;
        }
        CHECK(ok);
    }
}

TEST_CASE("trivial coefficient on constants") {
    KSweep div = k_sweep(Family::su2, parse_manifold("s3"), 20, 120, SweepNorm::divided_by_s3);
    TrivialCoeff tc = trivial_coeff(div, 33, 8);
    for (auto c : tc.c0) CHECK(std::abs(c - 1.0) < 1e-12);
}

TEST_CASE("perturbative fit recovers planted coefficients") {
    std::vector<double> ks;
    std::vector<std::complex<double>> vals;
    std::complex<double> a(2.0, -0.5);
    for (int k = 20; k <= 200; k += 4) {
        ks.push_back(k);
        vals.push_back(a * (1.0 + 3.25 / k - 7.5 / (k * double(k))));
    }
    PerturbativeFit f = perturbative_fit(ks, vals, 2);
    CHECK(std::abs(f.amplitude - a) < 1e-9);
    CHECK(std::abs(f.coeffs[0] - 3.25) < 1e-8);
    CHECK(std::abs(f.coeffs[1] + 7.5) < 1e-6);
    CHECK(f.stable);
    CHECK(f.residual < 1e-10);

    // constant sequence: A recovered, corrections vanish
    std::vector<std::complex<double>> cst(ks.size(), std::complex<double>(4.0, 1.0));
    PerturbativeFit fc = perturbative_fit(ks, cst, 2);
    CHECK(std::abs(fc.amplitude - std::complex<double>(4.0, 1.0)) < 1e-12);
    CHECK(std::abs(fc.coeffs[0]) < 1e-10);
    CHECK(std::abs(fc.coeffs[1]) < 1e-8);
    CHECK(fc.stable);

    CHECK_THROWS(perturbative_fit({1.0, 2.0}, {1.0, 1.0}, 2)); // too short
}

TEST_CASE("fit honors the k-power prefactor and the level shift") {
    std::vector<double> ks;
    std::vector<std::complex<double>> vals;
    for (int k = 20; k <= 150; k += 2) {
        ks.push_back(k);
        vals.push_back(std::pow(k, 1.5) * (2.0 + 5.0 / (k + 2.0)));
    }
    PerturbativeFit f = perturbative_fit(ks, vals, 1, 1.5, 2.0);
    CHECK(std::abs(f.amplitude - 2.0) < 1e-10);
    CHECK(std::abs(f.coeffs[0] - 2.5) < 1e-8); // a1 relative to A

    // shift comparison: a series built in 1/(k+2) fits better with shift 2
    PerturbativeFit f0 = perturbative_fit(ks, vals, 1, 1.5, 0.0);
    MESSAGE("shift 0 residual ", f0.residual, " vs shift h_vee residual ", f.residual);
    CHECK(f.residual < f0.residual);
}

TEST_CASE("fit flags drifting sequences") {
    std::vector<double> ks;
    std::vector<std::complex<double>> vals;
    for (int k = 20; k <= 200; k += 2) {
        ks.push_back(k);
        vals.push_back(1.0 + 0.3 * std::sin(0.37 * k)); // not a 1/k series
    }
    PerturbativeFit f = perturbative_fit(ks, vals, 2);
    CHECK_FALSE(f.stable);
}

TEST_CASE("bohr-sommerfeld orbits") {
    auto o1 = bohr_sommerfeld_orbits(1);
    REQUIRE(o1.size() == 2);
    CHECK(o1[0] == doctest::Approx(std::numbers::pi / 3));
    CHECK(o1[1] == doctest::Approx(2 * std::numbers::pi / 3));
    auto o2 = bohr_sommerfeld_orbits(2);
    REQUIRE(o2.size() == 3);
    CHECK(o2[1] - o2[0] == doctest::Approx(o2[2] - o2[1])); // equally spaced
    for (unsigned k = 1; k <= 20; ++k) CHECK(bohr_sommerfeld_orbits(k).size() == k + 1);
}

TEST_CASE("L(2,1) trivial-connection fit is a regression fixture") {
    KSweep raw = k_sweep(Family::su2, parse_manifold("lens:2,1"), 20, 276, SweepNorm::raw);
    TrivialCoeff tc = trivial_coeff(raw, 129, 8);
    // normalize against the S^3 scale at matching window centers
    std::vector<std::complex<double>> comp;
    std::vector<double> ks;
    KSweep s3 = k_sweep(Family::su2, parse_manifold("s3"), 20, 276, SweepNorm::raw);
    TrivialCoeff t3 = trivial_coeff(s3, 129, 8);
    for (std::size_t i = 0; i < tc.c0.size(); ++i) {
        comp.push_back(tc.c0[i] / t3.c0[i]);
        ks.push_back(tc.k_centers[i]);
    }
    PerturbativeFit f = perturbative_fit(ks, comp, 2);
    // 1/|H1| * tau^{1/2} = 1/(2 sqrt(2)) at leading order
    CHECK(std::abs(f.amplitude) == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(2e-2));
    // recorded as regression fixtures only
    MESSAGE("L(2,1) trivial fit: A = ", std::abs(f.amplitude), ", a1 = ", f.coeffs[0].real(),
            ", a2 = ", f.coeffs[1].real());
    CHECK(std::isfinite(f.coeffs[0].real()));
    CHECK(std::isfinite(f.coeffs[1].real()));
}
