#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wrt/mtc.hpp"
#include "wrt/plumbing.hpp"
#include "wrt/surgery.hpp"

namespace wrt {

enum class SweepNorm { raw, divided_by_s3 };

struct KSweep {
    Family family;
    PlumbingGraph graph;
    SweepNorm normalization;
    std::vector<int> k_values;                 // strictly increasing
    std::vector<std::complex<double>> values;  // Z(k)
};

// Evaluate Z(k) for k in [k_min, k_max]; u1 sweeps visit even levels only.
// Parallel over k with deterministic slot assembly.
KSweep k_sweep(Family family, const PlumbingGraph& g, int k_min, int k_max,
               SweepNorm norm, Exec exec = Exec::parallel);

std::string sweep_to_csv(const KSweep& s, unsigned digits);
KSweep sweep_from_csv(const std::string& text);

// Z(S^3) at level k for the family (the D^{-1} normalization scale).
std::complex<double> z_s3(Family family, unsigned k);

} // namespace wrt
