#include "wrt/cyclo.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wrt {

namespace {

// exact division of integer polynomials, ascending coefficients; remainder
// must vanish
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<mpz_class> d = den;
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) throw std::invalid_argument("poly_div_exact: division by zero");
    if (num.size() < d.size()) {
        for (const auto& c : num)
            if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
        return {0};
    }
    std::vector<mpz_class> q(num.size() - d.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        mpz_class c = num[i + d.size() - 1] / d.back();
        q[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < d.size(); ++j)
                num[i + j] -= c * d[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

} // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<mpz_class>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<mpz_class>&(unsigned)> get = [&](unsigned m) -> const std::vector<mpz_class>& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<mpz_class> poly(m + 1, 0);
        poly[0] = -1;
        poly[m] = 1; // x^m - 1
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) poly = poly_div_exact(std::move(poly), get(d));
        return cache.emplace(m, std::move(poly)).first->second;
    };
    return get(n);
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<mpz_class> num, mpz_class den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Cyclotomic::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 0) throw std::invalid_argument("Cyclotomic: zero denominator");
    mpz_class g = den_;
    for (const auto& c : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1) {
        den_ /= g;
        for (auto& c : num_) c /= g;
    }
}

Cyclotomic Cyclotomic::root(unsigned n, long power) {
    if (n < 1) throw std::invalid_argument("cyclo_root: order must be positive");
    long p = power % static_cast<long>(n);
    if (p < 0) p += n;
    std::vector<mpz_class> num(n, 0);
    num[static_cast<std::size_t>(p)] = 1;
    return Cyclotomic(n, std::move(num), 1);
}

Cyclotomic Cyclotomic::from_rational(const mpq_class& q) {
    std::vector<mpz_class> num(1, q.get_num());
    return Cyclotomic(1, std::move(num), q.get_den());
}

Cyclotomic Cyclotomic::promoted(unsigned new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) throw std::invalid_argument("promote: order must be a multiple");
    unsigned stride = new_order / order_;
    std::vector<mpz_class> num(new_order, 0);
    for (unsigned i = 0; i < order_; ++i) num[i * stride] = num_[i];
    return Cyclotomic(new_order, std::move(num), den_);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    unsigned n = std::lcm(order_, o.order_);
    Cyclotomic a = promoted(n), b = o.promoted(n);
    std::vector<mpz_class> num(n);
    for (unsigned i = 0; i < n; ++i) num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    return Cyclotomic(n, std::move(num), a.den_ * b.den_);
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<mpz_class> num(num_);
    for (auto& c : num) c = -c;
    return Cyclotomic(order_, std::move(num), den_);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    unsigned n = std::lcm(order_, o.order_);
    Cyclotomic a = promoted(n), b = o.promoted(n);
    std::vector<mpz_class> num(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (a.num_[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (b.num_[j] == 0) continue;
            unsigned k = i + j;
            if (k >= n) k -= n; // cyclic convolution mod zeta^n - 1
            num[k] += a.num_[i] * b.num_[j];
        }
    }
    return Cyclotomic(n, std::move(num), a.den_ * b.den_);
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<mpz_class> num(order_, 0);
    num[0] = num_[0];
    for (unsigned i = 1; i < order_; ++i) num[order_ - i] = num_[i];
    return Cyclotomic(order_, std::move(num), den_);
}

std::vector<mpq_class> Cyclotomic::reduced_difference(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned n = std::lcm(a.order_, b.order_);
    Cyclotomic x = a.promoted(n), y = b.promoted(n);
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;

    std::vector<mpq_class> r(n);
    for (unsigned i = 0; i < n; ++i)
        r[i] = mpq_class(x.num_[i]) / mpq_class(x.den_) - mpq_class(y.num_[i]) / mpq_class(y.den_);

    // remainder modulo Phi_n (monic), ascending coefficients
    for (std::size_t i = r.size(); i-- > deg;) {
        if (r[i] == 0) continue;
        mpq_class c = r[i];
        for (std::size_t j = 0; j < phi.size(); ++j)
            r[i - deg + j] -= c * mpq_class(phi[j]);
    }
    r.resize(deg);
    return r;
}

bool Cyclotomic::eq(const Cyclotomic& o) const {
    for (const auto& c : reduced_difference(*this, o))
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_zero() const { return eq(Cyclotomic()); }

bool Cyclotomic::to_rational(mpq_class& out) const {
    auto r = reduced_difference(*this, Cyclotomic());
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0) return false;
    out = r.empty() ? mpq_class(0) : r[0];
    return true;
}

Cyclotomic Cyclotomic::inverse() const {
    // extended Euclid in Q[x] against Phi_n on the canonical representative
    unsigned n = order_;
    const auto& phi_z = cyclotomic_polynomial(n);
    std::vector<mpq_class> phi(phi_z.size());
    for (std::size_t i = 0; i < phi_z.size(); ++i) phi[i] = mpq_class(phi_z[i]);

    std::vector<mpq_class> a = reduced_difference(*this, Cyclotomic());

    auto deg = [](const std::vector<mpq_class>& p) -> long {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1;
    };
    if (deg(a) < 0) throw std::domain_error("Cyclotomic::inverse: zero element");

    // extended Euclid: maintain s0*a = r0, s1*a = r1 (mod phi). Phi_N is
    // irreducible over Q, so the gcd with a nonzero element is a constant.
    std::vector<mpq_class> r0 = phi, r1 = a;
    std::vector<mpq_class> s0(1, 0), s1(1, 1);
    while (deg(r1) >= 1) {
        // full division step: r0 <- r0 mod r1, s0 <- s0 - q*s1
        long d1 = deg(r1);
        while (deg(r0) >= d1) {
            long d0 = deg(r0);
            mpq_class c = r0[d0] / r1[d1];
            long shift = d0 - d1;
            for (long j = 0; j <= d1; ++j) r0[j + shift] -= c * r1[j];
            if (s0.size() < s1.size() + static_cast<std::size_t>(shift))
                s0.resize(s1.size() + static_cast<std::size_t>(shift), 0);
            for (std::size_t j = 0; j < s1.size(); ++j) s0[j + shift] -= c * s1[j];
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    mpq_class c0 = deg(r1) == 0 ? r1[0] : mpq_class(0);
    if (c0 == 0) throw std::logic_error("inverse: element not invertible mod Phi_N");

    std::vector<mpz_class> num(n, 0);
    mpz_class den = 1;
    std::vector<mpq_class> coeffs(s1.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
        coeffs[i] = s1[i] / c0;
        den = lcm(den, coeffs[i].get_den());
    }
    for (std::size_t i = 0; i < coeffs.size() && i < n; ++i)
        num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    return Cyclotomic(n, std::move(num), den);
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e == 0) return from_rational(1);
    Cyclotomic base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Cyclotomic acc = from_rational(1);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

BigComplex Cyclotomic::eval(unsigned digits) const {
    BigComplex sum(digits);
    for (unsigned i = 0; i < order_; ++i) {
        if (num_[i] == 0) continue;
        mpq_class t(static_cast<long>(i), static_cast<long>(order_));
        t.canonicalize();
        BigComplex ph = BigComplex::unit_phase(t, digits);
        sum = sum + BigFloat(mpq_class(num_[i]), digits) * ph;
    }
    BigFloat d(mpq_class(den_), digits);
    BigFloat inv = BigFloat(1.0, digits) / d;
    return inv * sum;
}

std::string Cyclotomic::str() const {
    std::ostringstream o;
    bool first = true;
    for (unsigned i = 0; i < order_; ++i) {
        if (num_[i] == 0) continue;
        mpq_class c = coeff(i);
        if (!first) o << (c >= 0 ? " + " : " - ");
        else if (c < 0) o << "-";
        first = false;
        mpq_class a = abs(c);
        if (i == 0) o << a.get_str();
        else {
            if (a != 1) o << a.get_str() << "*";
            o << "z" << order_;
            if (i != 1) o << "^" << i;
        }
    }
    if (first) o << "0";
    return o.str();
}

Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default: throw std::invalid_argument("cyclo_arith: op must be one of +-*");
    }
}

} // namespace wrt
