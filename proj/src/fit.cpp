#include "wrt/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace wrt {

std::vector<std::complex<double>> lstsq(const std::vector<std::vector<std::complex<double>>>& cols,
                                        const std::vector<std::complex<double>>& rhs,
                                        const std::vector<double>& weights, double* condition_out) {
    const std::size_t m = rhs.size(), p = cols.size();
    if (p == 0 || m < p) throw std::invalid_argument("lstsq: underdetermined system");

    // weighted, column-scaled copy
    std::vector<double> sw(m);
    for (std::size_t i = 0; i < m; ++i) sw[i] = std::sqrt(weights[i]);
    std::vector<std::vector<std::complex<double>>> q(p, std::vector<std::complex<double>>(m));
    std::vector<double> scale(p, 1.0);
    for (std::size_t j = 0; j < p; ++j) {
        double s = 0;
        for (std::size_t i = 0; i < m; ++i) {
            q[j][i] = cols[j][i] * sw[i];
            s += std::norm(q[j][i]);
        }
        scale[j] = s > 0 ? std::sqrt(s) : 1.0;
        for (std::size_t i = 0; i < m; ++i) q[j][i] /= scale[j];
    }
    std::vector<std::complex<double>> b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = rhs[i] * sw[i];

    // modified Gram-Schmidt QR with one reorthogonalization pass; r is upper
    // triangular in the scaled basis
    std::vector<std::vector<std::complex<double>>> r(p, std::vector<std::complex<double>>(p, 0.0));
    double min_diag = 1e300, max_diag = 0;
    for (std::size_t j = 0; j < p; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t t = 0; t < j; ++t) {
                std::complex<double> proj = 0;
                for (std::size_t i = 0; i < m; ++i) proj += std::conj(q[t][i]) * q[j][i];
                r[t][j] += proj;
                for (std::size_t i = 0; i < m; ++i) q[j][i] -= proj * q[t][i];
            }
        double norm = 0;
        for (std::size_t i = 0; i < m; ++i) norm += std::norm(q[j][i]);
        norm = std::sqrt(norm);
        if (norm < 1e-300) throw std::runtime_error("lstsq: rank-deficient design");
        r[j][j] = norm;
        min_diag = std::min(min_diag, norm);
        max_diag = std::max(max_diag, norm);
        for (std::size_t i = 0; i < m; ++i) q[j][i] /= norm;
    }
    if (condition_out) *condition_out = max_diag / min_diag;

    // x = R^{-1} Q^* b, then undo the column scaling
    std::vector<std::complex<double>> y(p);
    for (std::size_t j = 0; j < p; ++j) {
        std::complex<double> acc = 0;
        for (std::size_t i = 0; i < m; ++i) acc += std::conj(q[j][i]) * b[i];
        y[j] = acc;
    }
    std::vector<std::complex<double>> x(p);
    for (std::size_t j = p; j-- > 0;) {
        std::complex<double> acc = y[j];
        for (std::size_t t = j + 1; t < p; ++t) acc -= r[j][t] * x[t];
        x[j] = acc / r[j][j];
    }
    for (std::size_t j = 0; j < p; ++j) x[j] /= scale[j];
    return x;
}

namespace {

PerturbativeFit fit_range(const std::vector<double>& k,
                          const std::vector<std::complex<double>>& c, std::size_t lo,
                          std::size_t hi, unsigned n_max, double k_power, double shift) {
    const std::size_t m = hi - lo;
    std::vector<std::vector<std::complex<double>>> cols(n_max + 1,
                                                        std::vector<std::complex<double>>(m));
    std::vector<std::complex<double>> rhs(m);
    std::vector<double> w(m, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        double kv = k[lo + i];
        double pre = std::pow(kv, k_power);
        for (unsigned n = 0; n <= n_max; ++n)
            cols[n][i] = pre * std::pow(kv + shift, -static_cast<double>(n));
        rhs[i] = c[lo + i];
    }
    PerturbativeFit f;
    auto x = lstsq(cols, rhs, w, &f.condition);
    f.amplitude = x[0];
    f.coeffs.assign(x.begin() + 1, x.end());
    for (auto& a : f.coeffs) a /= f.amplitude;
    double r2 = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::complex<double> model = 0;
        for (unsigned n = 0; n <= n_max; ++n) model += x[n] * cols[n][i];
        r2 += std::norm(rhs[i] - model);
    }
    f.residual = std::sqrt(r2 / m);
    f.stable = true;
    f.drift = 0;
    return f;
}

} // namespace

PerturbativeFit perturbative_fit(const std::vector<double>& k,
                                 const std::vector<std::complex<double>>& c, unsigned n_max,
                                 double k_power, double shift) {
    if (k.size() != c.size()) throw std::invalid_argument("perturbative_fit: length mismatch");
    if (k.size() < 3 * static_cast<std::size_t>(n_max) || k.size() < n_max + 2)
        throw std::invalid_argument("perturbative_fit: sequence too short for requested order");

    PerturbativeFit full = fit_range(k, c, 0, k.size(), n_max, k_power, shift);
    // stability: coefficients from the two window halves
    std::size_t half = k.size() / 2;
    if (half > n_max + 1) {
        PerturbativeFit a = fit_range(k, c, 0, half, n_max, k_power, shift);
        PerturbativeFit b = fit_range(k, c, half, k.size(), n_max, k_power, shift);
        double drift = 0;
        for (unsigned n = 0; n < n_max; ++n) {
            // floor keeps numerically-zero coefficients from tripping the flag
            double denom = std::max(std::abs(full.coeffs[n]), 1e-6);
            drift = std::max(drift, std::abs(a.coeffs[n] - b.coeffs[n]) / denom);
        }
        full.drift = drift;
        full.stable = drift < 0.02;
    }
    return full;
}

} // namespace wrt
