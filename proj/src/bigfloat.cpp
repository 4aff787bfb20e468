#include "wrt/bigfloat.hpp"

#include <sstream>
#include <vector>

namespace wrt {

std::string BigFloat::str(int digits) const {
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    bool neg = !m.empty() && m[0] == '-';
    std::string d = neg ? m.substr(1) : m;
    std::ostringstream out;
    if (neg) out << '-';
    if (d.empty() || d.find_first_not_of('0') == std::string::npos) {
        out << '0';
        return out.str();
    }
    out << d.substr(0, 1) << '.' << d.substr(1) << 'e' << (e - 1);
    return out.str();
}

BigComplex BigComplex::unit_phase(const mpq_class& t, unsigned digits) {
    // reduce t mod 1 first so huge exponents don't eat precision
    mpq_class r = t;
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    r -= mpq_class(q);
    BigFloat angle = BigFloat(2.0, digits) * BigFloat::pi(digits) * BigFloat(r, digits);
    return {cos(angle), sin(angle)};
}

} // namespace wrt
