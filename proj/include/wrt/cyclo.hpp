#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

#include "wrt/bigfloat.hpp"

namespace wrt {

// Element of Q(zeta_N), stored in the group-ring presentation modulo
// zeta^N - 1: integer coefficients over a common positive denominator.
// Coefficients are non-canonical; equality reduces the difference modulo
// the cyclotomic polynomial Phi_N. Values are immutable after construction.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), num_(1, 0), den_(1) {}

    static Cyclotomic root(unsigned n, long power);
    static Cyclotomic from_rational(const mpq_class& q);
    static Cyclotomic integer(long v) { return from_rational(mpq_class(v)); }

    unsigned order() const { return order_; }
    mpq_class coeff(std::size_t i) const { return mpq_class(num_[i]) / mpq_class(den_); }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;

    // Galois conjugation zeta -> zeta^{-1} (complex conjugation under the
    // standard embedding).
    Cyclotomic conj() const;

    // Exact inverse in the field; throws std::domain_error on zero.
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    // Promote to an order that the current order divides.
    Cyclotomic promoted(unsigned new_order) const;

    bool eq(const Cyclotomic& o) const;
    bool is_zero() const;
    // If the value is rational, return it through `out`.
    bool to_rational(mpq_class& out) const;

    // Evaluate at zeta_N = e^{2 pi i / N} with the given working precision
    // (decimal digits).
    BigComplex eval(unsigned digits) const;

    std::string str() const; // human-readable zeta-polynomial

private:
    Cyclotomic(unsigned order, std::vector<mpz_class> num, mpz_class den);
    void normalize();
    // canonical remainder mod Phi_N of the difference with `o`, over lcm order
    static std::vector<mpq_class> reduced_difference(const Cyclotomic& a, const Cyclotomic& b);

    unsigned order_;
    std::vector<mpz_class> num_; // length == order_
    mpz_class den_;              // > 0
};

Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, char op);

// N-th cyclotomic polynomial, integer coefficients ascending; computed by
// iterated exact division of x^N - 1 by Phi_d over proper divisors d,
// memoized.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

} // namespace wrt
