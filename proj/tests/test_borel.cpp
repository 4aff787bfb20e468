#include <doctest.h>

#include <cmath>
#include <complex>

#include "wrt/borel.hpp"

using namespace wrt;

namespace {

FormalSeries factorial_series(std::complex<double> omega, unsigned n) {
    FormalSeries s;
    double fact = 1;
    std::complex<double> pw = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (i > 0) fact *= i;
        s.coeffs.push_back(fact / pw);
        pw *= omega;
    }
    return s;
}

} // namespace

TEST_CASE("borel transform") {
    auto s = factorial_series(1.0, 8);
    auto b = borel_transform(s);
    for (auto c : b.coeffs) CHECK(std::abs(c - 1.0) < 1e-15); // geometric
    FormalSeries zero;
    zero.coeffs.assign(6, 0.0);
    for (auto c : borel_transform(zero).coeffs) CHECK(c == std::complex<double>(0, 0));
    FormalSeries ones;
    ones.coeffs.assign(6, 1.0);
    auto bo = borel_transform(ones);
    double fact = 1;
    for (std::size_t n = 0; n < 6; ++n) {
        if (n) fact *= n;
        CHECK(std::abs(bo.coeffs[n] - 1.0 / fact) < 1e-15);
    }
}

TEST_CASE("borel transform is linear") {
    auto s = factorial_series(1.0, 10);
    auto t = factorial_series(-2.0, 10);
    std::complex<double> alpha(0.3, 1.1);
    FormalSeries combo;
    for (unsigned i = 0; i < 10; ++i) combo.coeffs.push_back(alpha * s.coeffs[i] + t.coeffs[i]);
    auto lhs = borel_transform(combo);
    auto bs = borel_transform(s), bt = borel_transform(t);
    for (unsigned i = 0; i < 10; ++i)
        CHECK(std::abs(lhs.coeffs[i] - (alpha * bs.coeffs[i] + bt.coeffs[i])) < 1e-14);
}

TEST_CASE("pade basics") {
    // truncated geometric: [0/1] recovers 1/(1-z)
    FormalSeries g;
    g.coeffs.assign(8, 1.0);
    auto p = pade(g, 0, 1);
    REQUIRE(p.den.size() == 2);
    CHECK(std::abs(p.num[0] - 1.0) < 1e-14);
    CHECK(std::abs(p.den[1] + 1.0) < 1e-14);

    // polynomial input with M = 0 returns the polynomial
    FormalSeries poly;
    poly.coeffs = {{3, 0}, {0, 1}, {-2, 0}};
    auto q = pade(poly, 2, 0);
    for (unsigned i = 0; i < 3; ++i) CHECK(std::abs(q.num[i] - poly.coeffs[i]) < 1e-15);

    CHECK_THROWS(pade(poly, 5, 5)); // series too short
}

TEST_CASE("exact pade recovers planted rational functions") {
    // 1/((1-z)(2-z)) expanded to 20 terms
    std::vector<mpq_class> c;
    for (unsigned n = 0; n < 20; ++n)
        c.push_back(mpq_class(1) - mpq_class(1, mpz_class(1) << (n + 1)));
    auto p = pade_exact(c, 1, 2);
    // re-expand and compare exactly
    std::vector<mpq_class> re(20);
    for (unsigned n = 0; n < 20; ++n) {
        mpq_class acc = n < p.num.size() ? p.num[n] : mpq_class(0);
        for (unsigned j = 1; j < p.den.size() && j <= n; ++j) acc -= p.den[j] * re[n - j];
        re[n] = acc;
    }
    for (unsigned n = 0; n < 20; ++n) CHECK(re[n] == c[n]);
    // denominator recovers (1-z)(2-z)/2 = 1 - 3z/2 + z^2/2
    CHECK(p.den[1] == mpq_class(-3, 2));
    CHECK(p.den[2] == mpq_class(1, 2));
}

TEST_CASE("planted singularities recovered with stability") {
    for (std::complex<double> omega :
         {std::complex<double>(1, 0), std::complex<double>(-1, 0), std::complex<double>(0.3, 0.4)}) {
        auto s = factorial_series(omega, 20);
        for (unsigned terms : {17u, 19u, 20u}) { // [8/8], [9/9], [10/10] diagonals
            auto rep = borel_poles(s, terms);
            bool found = false;
            for (const auto& p : rep.poles)
                if (std::abs(p.location - omega) < 1e-5) found = true;
            CHECK(found);
        }
    }
    CHECK_THROWS(borel_poles(factorial_series(1.0, 20), 5)); // too few terms
}

TEST_CASE("stokes location table") {
    auto rep = borel_poles(factorial_series(1.0, 20), 20);
    REQUIRE(!rep.poles.empty());
    std::vector<mpq_class> cs = {mpq_class(0), mpq_class(1)};
    auto matches = stokes_location_check(rep, cs);
    bool matched_one = false;
    for (const auto& m : matches)
        if (m.matched && std::abs(m.nearest_difference - 1.0) < 1e-9 && m.gap < 1e-5)
            matched_one = true;
    CHECK(matched_one);

    auto empty = stokes_location_check(rep, {});
    for (const auto& m : empty) CHECK_FALSE(m.matched);
}

TEST_CASE("cs-unit rescaling moves poles as expected") {
    // series with instanton scale e^{2 pi i omega k}, omega = 1/10:
    // a_n = n! (-2 pi i omega)^{-n}... built directly in 1/k units
    double omega = 0.1;
    FormalSeries s;
    s.variable = SeriesVariable::inverse_k;
    double fact = 1;
    std::complex<double> a(0, -2 * M_PI * omega); // Borel singularity of the 1/k series
    std::complex<double> pw = 1;
    for (unsigned n = 0; n < 16; ++n) {
        if (n) fact *= n;
        s.coeffs.push_back(fact / pw);
        pw *= a;
    }
    auto cs = to_cs_units(s);
    auto rep = borel_poles(cs, 16);
    bool found = false;
    for (const auto& p : rep.poles)
        if (std::abs(std::abs(p.location) - omega) < 1e-6) found = true;
    CHECK(found);
}
