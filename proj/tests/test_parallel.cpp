#include <doctest.h>

#include <omp.h>

#include "wrt/abelian.hpp"
#include "wrt/manifold_spec.hpp"
#include "wrt/mtc.hpp"
#include "wrt/rootsys.hpp"
#include "wrt/sweep.hpp"

using namespace wrt;

// The OpenMP kernels must agree bit-for-bit with their serial reference
// paths, independent of the thread count.

TEST_CASE("k_sweep parallel == serial") {
    auto g = parse_manifold("sigma235");
    KSweep a = k_sweep(Family::su2, g, 20, 60, SweepNorm::divided_by_s3, Exec::serial);
    KSweep b = k_sweep(Family::su2, g, 20, 60, SweepNorm::divided_by_s3, Exec::parallel);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("kac_peterson parallel == serial") {
    for (unsigned rank : {1u, 2u, 3u}) {
        auto rs = root_system_a(rank);
        CMat a = kac_peterson_s(rs, 3, 30, Exec::serial);
        CMat b = kac_peterson_s(rs, 3, 30, Exec::parallel);
        CHECK(a.max_abs_diff(b) == 0.0);
    }
}

TEST_CASE("fusion parallel == serial") {
    auto m = mtc_su2(9);
    CHECK(fusion(m, 30, Exec::serial) == fusion(m, 30, Exec::parallel));
}

TEST_CASE("gauss sums parallel == serial and thread-count independent") {
    IntMat b(3, 3);
    long vals[3][3] = {{2, 1, 0}, {1, -3, 1}, {0, 1, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b.at(i, j) = vals[i][j];
    auto serial = u1_surgery_invariant(b, 8, 30, Exec::serial);
    int saved = omp_get_max_threads();
    for (int t : {1, 2, 4}) {
        omp_set_num_threads(t);
        auto par = u1_surgery_invariant(b, 8, 30, Exec::parallel);
        CHECK(par == serial);
    }
    omp_set_num_threads(saved);
}
