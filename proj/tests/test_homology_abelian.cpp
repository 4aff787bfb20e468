#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "wrt/abelian.hpp"
#include "wrt/homology.hpp"
#include "wrt/manifold_spec.hpp"
#include "wrt/plumbing.hpp"

using namespace wrt;

namespace {

IntMat mat1(long v) {
    IntMat b(1, 1);
    b.at(0, 0) = v;
    return b;
}

// independent oracle: enumerate the torsion group and sum the phases directly
std::complex<double> gauss_oracle_lens(unsigned p, unsigned k) {
    std::complex<double> s = 0;
    for (unsigned y = 0; y < p; ++y) {
        double q = -0.5 * static_cast<double>(y) * y / p; // (1/2) * (-1/p) y^2
        double ang = 2.0 * std::numbers::pi * k * q;
        s += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s / std::sqrt(static_cast<double>(p));
}

} // namespace

TEST_CASE("smith normal form and homology") {
    auto h = homology_data(mat1(6), 4);
    CHECK(h.b1 == 0);
    REQUIRE(h.torsion.size() == 1);
    CHECK(h.torsion[0] == 6);
    REQUIRE(h.h1_mod_k.size() == 1);
    CHECK(h.h1_mod_k[0] == 2); // gcd(6,4)

    h = homology_data(mat1(0), 6);
    CHECK(h.b1 == 1);
    CHECK(h.torsion.empty());
    REQUIRE(h.h1_mod_k.size() == 1);
    CHECK(h.h1_mod_k[0] == 6);

    auto e8 = linking_matrix(poincare_sphere()).matrix;
    for (unsigned k : {2u, 4u, 8u}) {
        auto he = homology_data(e8, k);
        CHECK(he.torsion.empty()); // |det| = 1: trivial H^1 for every k
        CHECK(he.h1_mod_k.empty());
    }

    // linking form of L(p, 1): single generator with lambda = -1/p mod 1
    auto hl = homology_data(mat1(5), 2);
    REQUIRE(hl.linking_form.size() == 1);
    CHECK(hl.linking_form[0][0] == mpq_class(4, 5)); // -1/5 mod 1
}

TEST_CASE("smith transforms are exact") {
    IntMat b(3, 3);
    long vals[3][3] = {{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b.at(i, j) = vals[i][j];
    auto s = smith_normal_form(b);
    auto prod = s.u.mul(b).mul(s.v);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(prod.at(i, j) == (i == j ? s.diagonal[i] : 0));
    // divisibility chain
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
        if (s.diagonal[i] != 0 && s.diagonal[i + 1] != 0)
            CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    CHECK(abs(det_bareiss(b)) == 4);
}

TEST_CASE("linking form invariant: spec values") {
    CHECK(std::abs(linking_form_invariant(IntMat(0, 0), 4, 30) - 1.0) < 1e-12);
    for (unsigned k : {2u, 4u, 8u})
        CHECK(std::abs(linking_form_invariant(mat1(0), k, 30) - std::sqrt(double(k))) < 1e-12);
    // L(2,1) at k=4 against the exhaustive oracle
    auto v = linking_form_invariant(mat1(2), 4, 30);
    CHECK(std::abs(v - gauss_oracle_lens(2, 4)) < 1e-12);
    CHECK(std::abs(v - std::complex<double>(std::sqrt(2.0), 0)) < 1e-12);
    CHECK_THROWS(linking_form_invariant(mat1(2), 3, 30)); // odd k
}

TEST_CASE("u1 surgery invariant: spec values") {
    CHECK(std::abs(u1_surgery_invariant(IntMat(0, 0), 4, 30) - 0.5) < 1e-12); // k^{-1/2}
    CHECK(std::abs(u1_surgery_invariant(mat1(0), 6, 30) - 1.0) < 1e-12);
    for (unsigned k : {2u, 4u, 8u})
        CHECK(std::abs(u1_surgery_invariant(mat1(1), k, 30) - 1.0 / std::sqrt(double(k))) < 1e-12);
    CHECK_THROWS(u1_surgery_invariant(mat1(1), 5, 30));
}

TEST_CASE("multiplicativity under disjoint union") {
    IntMat b1 = mat1(3), b2 = mat1(-2);
    IntMat sum(2, 2);
    sum.at(0, 0) = 3;
    sum.at(1, 1) = -2;
    for (unsigned k : {2u, 4u, 6u}) {
        auto z1 = u1_surgery_invariant(b1, k, 30);
        auto z2 = u1_surgery_invariant(b2, k, 30);
        auto zs = u1_surgery_invariant(sum, k, 30);
        auto ze = u1_surgery_invariant(IntMat(0, 0), k, 30);
        CHECK(std::abs(zs * ze - z1 * z2) < 1e-10);
    }
}

TEST_CASE("reciprocity: link route = D * surgery route") {
    for (unsigned p = 1; p <= 8; ++p)
        for (unsigned k : {2u, 4u, 6u, 8u}) {
            auto zl = linking_form_invariant(mat1(p), k, 30);
            auto zs = u1_surgery_invariant(mat1(p), k, 30);
            CHECK(std::abs(zl - std::sqrt(double(k)) * zs) < 1e-9);
        }
    // beyond plumbing: a dense symmetric matrix
    IntMat b(2, 2);
    b.at(0, 0) = 2;
    b.at(0, 1) = 3;
    b.at(1, 0) = 3;
    b.at(1, 1) = -1;
    for (unsigned k : {2u, 4u, 6u}) {
        auto zl = linking_form_invariant(b, k, 30);
        auto zs = u1_surgery_invariant(b, k, 30);
        CHECK(std::abs(zl - std::sqrt(double(k)) * zs) < 1e-9);
    }
}

TEST_CASE("refinement and sign are configurable") {
    AbelianConfig plus;
    plus.sign = LinkingSign::plus_b_inverse;
    auto a = linking_form_invariant(mat1(3), 4, 30);
    auto b = linking_form_invariant(mat1(3), 4, 30, plus);
    CHECK(std::abs(a - std::conj(b)) < 1e-12); // sign flip conjugates the Gauss sum
    AbelianConfig full;
    full.refinement = Refinement::diagonal;
    auto c = linking_form_invariant(mat1(3), 4, 30, full);
    CHECK(std::abs(c - a) > 1e-6); // a genuinely different refinement
}
