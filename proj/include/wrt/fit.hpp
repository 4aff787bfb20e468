#pragma once

#include <complex>
#include <vector>

namespace wrt {

// Least-squares fit of c(k) = A (1 + sum_{n=1}^{n_max} a_n k^{-n}).
struct PerturbativeFit {
    std::complex<double> amplitude;            // A
    std::vector<std::complex<double>> coeffs;  // a_1..a_n
    double residual;                            // rms of fit residual
    double condition;                           // column-scaled condition estimate
    bool stable;                                // < 2% drift between window halves
    double drift;                               // max relative drift over a_1..a_n
};

// `k_power` is the optional spectral-dimension prefactor toggle (fits
// A k^{k_power} (1 + ...)); `shift` expands in 1/(k + shift) so callers can
// compare the bare level against the shifted k + h_vee convention.
PerturbativeFit perturbative_fit(const std::vector<double>& k,
                                 const std::vector<std::complex<double>>& c, unsigned n_max,
                                 double k_power = 0.0, double shift = 0.0);

// Weighted least squares on an arbitrary complex design matrix (column-major
// basis vectors); shared by the fit above and the resurgence pipeline.
std::vector<std::complex<double>> lstsq(const std::vector<std::vector<std::complex<double>>>& cols,
                                        const std::vector<std::complex<double>>& rhs,
                                        const std::vector<double>& weights, double* condition_out);

} // namespace wrt
