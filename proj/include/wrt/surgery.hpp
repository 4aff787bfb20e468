#pragma once

#include <complex>
#include <vector>

#include "wrt/cyclo.hpp"
#include "wrt/mtc.hpp"
#include "wrt/plumbing.hpp"

namespace wrt {

// Weighted colored sum over the plumbing graph,
//   F = sum_c prod_v theta_{c_v}^{f_v} dim_{c_v}^{2 - deg v} prod_e Stilde,
// i.e. the colored link invariant of the plumbing link times the
// quantum-dimension surgery weights. Exact in Q(zeta_N).
Cyclotomic colored_sum_F(const MtcData& mtc, const PlumbingGraph& g);

// Reference implementation: enumerate all colorings directly. Exponential;
// kept for testing the tree contraction.
Cyclotomic colored_sum_F_brute(const MtcData& mtc, const PlumbingGraph& g);

// Numeric color tables for the floating path (entries are the complex
// embeddings of the exact tables; for su2/u1 these close over sines).
struct ColorTablesFP {
    unsigned k;
    std::vector<std::complex<double>> dims, dim_inv, twists, twists_inv;
    std::vector<std::vector<std::complex<double>>> s_unnorm;
    double total_dim;
    std::complex<double> kappa;
};

ColorTablesFP su2_tables_fp(unsigned k);
ColorTablesFP u1_tables_fp(unsigned k);
ColorTablesFP tables_fp(Family f, unsigned k);

// Floating colored sum by leaf-to-root tree contraction; OpenMP-parallel
// over colors of the vertex being folded, with a serial reference path.
std::complex<double> colored_sum_fp(const ColorTablesFP& t, const PlumbingGraph& g,
                                    Exec exec = Exec::parallel);

// Z = kappa^{-sigma} D^{-(m+1)} F assembled in the complex embedding.
struct RtResult {
    std::complex<double> z;
    int signature;
    std::size_t b1;
    std::size_t m;
};

RtResult rt_invariant_fp(const ColorTablesFP& t, const PlumbingGraph& g,
                         Exec exec = Exec::parallel);

// Exact-F route: evaluates the exact colored sum at `digits` precision and
// assembles the normalization numerically.
RtResult rt_invariant(const MtcData& mtc, const PlumbingGraph& g, unsigned digits);

// Trace of a word in the Prop-style S, T matrices (mapping-torus traces).
enum class TorusLetter { S, T, Tinv };
std::complex<double> torus_bundle_trace(const MtcData& mtc,
                                        const std::vector<TorusLetter>& word, unsigned digits);

} // namespace wrt
