#include <doctest.h>

#include <random>

#include "wrt/cyclo.hpp"

using namespace wrt;

namespace {

Cyclotomic rat(long n, long d = 1) { return Cyclotomic::from_rational(mpq_class(n, d)); }

double cx_dist(const BigComplex& a, std::complex<double> b) {
    return std::abs(a.to_complex() - b);
}

Cyclotomic random_elem(std::mt19937& rng) {
    std::uniform_int_distribution<unsigned> order(1, 60);
    std::uniform_int_distribution<int> coeff(-3, 3), den(1, 4), nterms(1, 4);
    unsigned n = order(rng);
    Cyclotomic acc = rat(0);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::uniform_int_distribution<unsigned> pw(0, n - 1);
        acc = acc + Cyclotomic::from_rational(mpq_class(coeff(rng), den(rng))) *
                        Cyclotomic::root(n, pw(rng));
    }
    return acc;
}

} // namespace

TEST_CASE("roots of unity reduce to rationals where expected") {
    mpq_class r;
    CHECK(Cyclotomic::root(4, 2).to_rational(r));
    CHECK(r == -1);
    CHECK(Cyclotomic::root(1, 0).to_rational(r));
    CHECK(r == 1);
    // e^{i pi/3} = 1 + e^{2 i pi/3}, numerically and then exactly
    auto lhs = Cyclotomic::root(6, 1);
    auto rhs = rat(1) + Cyclotomic::root(6, 2);
    CHECK(cx_dist(lhs.eval(20), rhs.eval(20).to_complex()) < 1e-15);
    CHECK(lhs.eq(rhs));
}

TEST_CASE("arithmetic identities") {
    mpq_class r;
    auto sum = Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2);
    CHECK(sum.to_rational(r));
    CHECK(r == -1);
    auto prod = Cyclotomic::root(8, 1) * Cyclotomic::root(8, 7);
    CHECK(prod.to_rational(r));
    CHECK(r == 1);
    // (1 + zeta_8)(1 + zeta_8^{-1}) = 2 + sqrt(2)
    auto v = (rat(1) + Cyclotomic::root(8, 1)) * (rat(1) + Cyclotomic::root(8, -1));
    double direct = std::abs((1.0 + std::polar(1.0, M_PI / 4)) *
                             (1.0 + std::polar(1.0, -M_PI / 4)));
    CHECK(cx_dist(v.eval(20), {direct, 0}) < 1e-12);
    CHECK(cx_dist(v.eval(20), {2.0 + std::sqrt(2.0), 0}) < 1e-12);
}

TEST_CASE("equality mod Phi_N") {
    CHECK_FALSE(Cyclotomic::root(5, 1).eq(Cyclotomic::root(5, 2)));
    Cyclotomic s = rat(0);
    for (int i = 1; i <= 4; ++i) s = s + Cyclotomic::root(5, i);
    CHECK(s.eq(rat(-1)));
    // e^{-i pi/3} = 1 + e^{-2 i pi/3} (conjugate of the identity above)
    CHECK(Cyclotomic::root(6, -1).eq(rat(1) + Cyclotomic::root(6, -2)));
}

TEST_CASE("evaluation and precision") {
    auto i = Cyclotomic::root(4, 1).eval(20);
    CHECK(abs(i.re).to_double() < 1e-19);
    CHECK(std::abs(i.im.to_double() - 1.0) < 1e-19);
    mpq_class r;
    auto m1 = rat(-1).eval(30);
    CHECK(m1.re.to_double() == -1.0);
    CHECK(m1.im.to_double() == 0.0);
    // zeta_12 + zeta_12^{-1} = sqrt(3)
    auto v = Cyclotomic::root(12, 1) + Cyclotomic::root(12, -1);
    CHECK(cx_dist(v.eval(20), {std::sqrt(3.0), 0}) < 1e-12);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(777);
    for (int t = 0; t < 40; ++t) {
        auto a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
        CHECK(((a + b) + c).eq(a + (b + c)));
        CHECK((a * (b + c)).eq(a * b + a * c));
        CHECK((a * b).eq(b * a));
    }
}

TEST_CASE("embedding is a ring homomorphism") {
    std::mt19937 rng(778);
    for (int t = 0; t < 25; ++t) {
        auto a = random_elem(rng), b = random_elem(rng);
        auto lhs = (a * b).eval(20).to_complex();
        auto rhs = a.eval(20).to_complex() * b.eval(20).to_complex();
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("cyclotomic polynomial degrees match the totient") {
    for (unsigned n = 1; n <= 120; ++n)
        CHECK(cyclotomic_polynomial(n).size() - 1 == euler_phi(n));
}

TEST_CASE("promotion soundness") {
    std::mt19937 rng(779);
    for (int t = 0; t < 20; ++t) {
        auto a = random_elem(rng);
        for (unsigned m = 1; m <= 5; ++m) CHECK(a.promoted(a.order() * m).eq(a));
    }
}

TEST_CASE("inverse and powers") {
    std::mt19937 rng(780);
    for (int t = 0; t < 15; ++t) {
        auto a = random_elem(rng);
        if (a.is_zero()) continue;
        CHECK((a * a.inverse()).eq(Cyclotomic::from_rational(1)));
        CHECK(a.pow(-2).eq(a.inverse() * a.inverse()));
    }
    CHECK_THROWS_AS(Cyclotomic::from_rational(0).inverse(), std::domain_error);
}

TEST_CASE("conjugation matches complex conjugation") {
    std::mt19937 rng(781);
    for (int t = 0; t < 10; ++t) {
        auto a = random_elem(rng);
        auto lhs = a.conj().eval(20).to_complex();
        auto rhs = std::conj(a.eval(20).to_complex());
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
}
