#pragma once

#include <gmpxx.h>
#include <cstddef>
#include <vector>

namespace wrt {

// Dense exact integer matrix, row-major. Sizes here are tiny (surgery
// presentations rarely exceed a dozen components), so no sparsity games.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, 0) {}
    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMat mul(const IntMat& o) const;
    IntMat transpose() const;
    bool is_symmetric() const;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> a_;
};

struct SmithResult {
    std::vector<mpz_class> diagonal; // nonnegative, d_i | d_{i+1}, zeros last
    IntMat u, v;                     // unimodular, u*B*v = diag
    IntMat u_inv;                    // exact integer inverse of u
};

// Smith normal form over Z with both transformation matrices.
SmithResult smith_normal_form(const IntMat& b);

// Determinant by fraction-free (Bareiss) elimination.
mpz_class det_bareiss(const IntMat& b);

struct SignatureResult {
    int signature;   // (#positive) - (#negative) diagonal entries
    std::size_t nullity;
};

// Exact signature of a symmetric matrix via rational congruence
// diagonalization (Lagrange). Never touches floating point.
SignatureResult symmetric_signature(const IntMat& b);

// Solve u * x = rhs for integer x where u is unimodular (used for u^{-1}).
IntMat unimodular_inverse(const IntMat& u);

} // namespace wrt
