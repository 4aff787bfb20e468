// Timing comparison of the OpenMP kernels against their serial reference
// paths: level sweeps, Kac-Peterson matrices, fusion tensors, and the
// abelian Gauss sums.

#include <omp.h>
#include <cstdio>
#include <functional>

#include "wrt/abelian.hpp"
#include "wrt/manifold_spec.hpp"
#include "wrt/mtc.hpp"
#include "wrt/rootsys.hpp"
#include "wrt/sweep.hpp"

using namespace wrt;

namespace {

double time_of(const std::function<void()>& f) {
    double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-34s %9.3f ms %9.3f ms %6.2fx\n", name, serial * 1e3, parallel * 1e3,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
    std::printf("%-34s %12s %12s %7s\n", "kernel", "serial", "omp", "speedup");
    std::printf("threads: %d\n", omp_get_max_threads());

    {
        auto star = parse_manifold("sigma235");
        double ts = time_of([&] { k_sweep(Family::su2, star, 20, 160, SweepNorm::divided_by_s3, Exec::serial); });
        double tp = time_of([&] { k_sweep(Family::su2, star, 20, 160, SweepNorm::divided_by_s3, Exec::parallel); });
        report("k_sweep sigma235 su2 k=20..160", ts, tp);
    }
    {
        auto rs = root_system_a(3);
        double ts = time_of([&] { kac_peterson_s(rs, 5, 30, Exec::serial); });
        double tp = time_of([&] { kac_peterson_s(rs, 5, 30, Exec::parallel); });
        report("kac_peterson A3 k=5", ts, tp);
    }
    {
        auto m = mtc_su2(12);
        double ts = time_of([&] { fusion(m, 30, Exec::serial); });
        double tp = time_of([&] { fusion(m, 30, Exec::parallel); });
        report("fusion su2 k=12", ts, tp);
    }
    {
        IntMat b(4, 4);
        for (int i = 0; i < 4; ++i) b.at(i, i) = 2;
        for (int i = 0; i < 3; ++i) { b.at(i, i + 1) = 1; b.at(i + 1, i) = 1; }
        double ts = time_of([&] { u1_surgery_invariant(b, 12, 30, Exec::serial); });
        double tp = time_of([&] { u1_surgery_invariant(b, 12, 30, Exec::parallel); });
        report("u1 Gauss sum m=4 k=12", ts, tp);
    }
    return 0;
}
