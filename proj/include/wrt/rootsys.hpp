#pragma once

#include <gmpxx.h>
#include <complex>
#include <cstddef>
#include <vector>

#include "wrt/cmatrix.hpp"

namespace wrt {

// Weight-space vectors are kept in simple-root coordinates with exact
// rational entries; the bilinear form is the Gram matrix of the basic inner
// product, normalized so the highest root has length^2 = 2.
using RatVec = std::vector<mpq_class>;

struct RootSystem {
    unsigned rank;
    std::vector<RatVec> simple_roots;   // identity vectors in root coordinates
    std::vector<RatVec> positive_roots;
    RatVec rho;                         // half-sum of positive roots
    unsigned dual_coxeter;
    RatVec highest_root;
    std::vector<std::vector<mpq_class>> gram; // <alpha_i, alpha_j>

    mpq_class inner(const RatVec& a, const RatVec& b) const;
};

struct WeylElement {
    std::vector<RatVec> columns; // matrix action on root coordinates
    unsigned length;
};

struct WeylGroup {
    std::vector<WeylElement> elements;
    RatVec apply(const WeylElement& w, const RatVec& v) const;
};

// Type A_n data, n <= 3.
RootSystem root_system_a(unsigned n);

// Full enumeration by breadth-first closure over simple reflections;
// lengths by counting positive roots sent negative.
WeylGroup weyl_group(const RootSystem& rs);

struct AlcoveWeight {
    std::vector<unsigned> labels; // Dynkin labels
    RatVec coords;                // root coordinates
};

// Dominant integral weights with <lambda, theta> <= k, lexicographic in the
// Dynkin labels; index 0 is the zero weight.
std::vector<AlcoveWeight> alcove_weights(const RootSystem& rs, unsigned k);

enum class Exec { serial, parallel };

// Level-k S-matrix of the affine Lie algebra attached to rs, in alcove
// order. Computed at `digits` working precision, returned in double
// precision.
CMat kac_peterson_s(const RootSystem& rs, unsigned k, unsigned digits,
                    Exec exec = Exec::parallel);

} // namespace wrt
