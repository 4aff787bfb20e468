#pragma once

#include <complex>

#include "wrt/homology.hpp"
#include "wrt/intmat.hpp"
#include "wrt/rootsys.hpp"

namespace wrt {

// Convention freedom in the Gauss sum: the sign of the linking form
// and the quadratic refinement used in the Gauss sum.
enum class LinkingSign { minus_b_inverse, plus_b_inverse };
enum class Refinement { half_diagonal, diagonal };

struct AbelianConfig {
    LinkingSign sign = LinkingSign::minus_b_inverse;
    Refinement refinement = Refinement::half_diagonal;
};

// Gauss sum over torsion(H_1) + (Z/k)^{b1} with the |T|^{-1/2} k^{-b1/2}
// normalization that reciprocates exactly against the u1 surgery route
// (see tests); q(gamma) = 1/2 lambda(gamma, gamma) by default.
std::complex<double> linking_form_invariant(const IntMat& b, unsigned k, unsigned digits,
                                            const AbelianConfig& cfg = {});

// U(1)_k surgery evaluation for an arbitrary symmetric linking matrix: the
// abelian colored invariant sees only the linking data, so plumbing is not
// required here.
std::complex<double> u1_surgery_invariant(const IntMat& b, unsigned k, unsigned digits,
                                          Exec exec = Exec::parallel);

} // namespace wrt
