#pragma once

#include <mpfr.h>
#include <gmpxx.h>
#include <complex>
#include <string>
#include <utility>

namespace wrt {

// Arbitrary-precision real backed by MPFR. Precision is per-value, in
// decimal digits; binary operations work at the larger operand precision.
class BigFloat {
public:
    explicit BigFloat(unsigned digits = 30) { mpfr_init2(x_, bits(digits)); mpfr_set_zero(x_, 1); }
    BigFloat(double v, unsigned digits) { mpfr_init2(x_, bits(digits)); mpfr_set_d(x_, v, MPFR_RNDN); }
    BigFloat(const mpq_class& q, unsigned digits) {
        mpfr_init2(x_, bits(digits));
        mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(x_, 64); mpfr_swap(x_, o.x_); }
    BigFloat& operator=(BigFloat o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~BigFloat() { mpfr_clear(x_); }

    static BigFloat pi(unsigned digits) {
        BigFloat r(digits);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    std::string str(int digits) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_div); }
    BigFloat operator-() const { BigFloat r(*this); mpfr_neg(r.x_, r.x_, MPFR_RNDN); return r; }

    BigFloat& operator+=(const BigFloat& b) { mpfr_add(x_, x_, b.x_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& b) { mpfr_sub(x_, x_, b.x_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& b) { mpfr_mul(x_, x_, b.x_, MPFR_RNDN); return *this; }

    friend BigFloat sin(const BigFloat& a) { return un(a, mpfr_sin); }
    friend BigFloat cos(const BigFloat& a) { return un(a, mpfr_cos); }
    friend BigFloat sqrt(const BigFloat& a) { return un(a, mpfr_sqrt); }
    friend BigFloat abs(const BigFloat& a) { BigFloat r(a); mpfr_abs(r.x_, r.x_, MPFR_RNDN); return r; }

    int sign() const { return mpfr_sgn(x_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }

private:
    static mpfr_prec_t bits(unsigned digits) {
        // ~3.33 bits per decimal digit plus guard
        return static_cast<mpfr_prec_t>(digits * 10 / 3 + 16);
    }
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    static BigFloat bin(const BigFloat& a, const BigFloat& b, BinOp op) {
        BigFloat r;
        mpfr_set_prec(r.x_, std::max(a.prec(), b.prec()));
        op(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    static BigFloat un(const BigFloat& a, UnOp op) {
        BigFloat r;
        mpfr_set_prec(r.x_, a.prec());
        op(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    mpfr_t x_;
};

// Complex value over BigFloat.
struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(unsigned digits = 30) : re(digits), im(digits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    // e^{2 pi i t} at the given precision
    static BigComplex unit_phase(const mpq_class& t, unsigned digits);

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
    BigFloat abs() const { return sqrt(re * re + im * im); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return {s * a.re, s * a.im}; }
    BigComplex conj() const { return {re, -im}; }
};

} // namespace wrt
