#pragma once

#include <gmpxx.h>
#include <vector>

#include "wrt/intmat.hpp"

namespace wrt {

// First-homology data of the surgered manifold presented by a symmetric
// integer linking matrix B: H_1 = coker(B) = Z^{b1} + sum Z/d_i.
struct HomologyData {
    std::vector<mpz_class> smith_diagonal;    // full SNF diagonal, zeros last
    std::size_t b1;
    std::vector<mpz_class> torsion;           // d_i > 1
    std::vector<mpz_class> h1_mod_k;          // cyclic orders of H^1(M; Z/k)
    // torsion linking form lambda(g_i, g_j) in [0,1) on the torsion
    // generators, sign convention -B^{-1}
    std::vector<std::vector<mpq_class>> linking_form;
};

HomologyData homology_data(const IntMat& b, unsigned k);

} // namespace wrt
