#pragma once

#include <complex>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace wrt {

enum class SeriesVariable { hbar, inverse_k };

struct FormalSeries {
    std::vector<std::complex<double>> coeffs; // a_0..a_n
    SeriesVariable variable = SeriesVariable::hbar;
};

// Term-wise a_n / n!.
FormalSeries borel_transform(const FormalSeries& s);

// [L/M] Pade approximant; denominator normalized to b_0 = 1. Degenerate
// systems auto-reduce M (reported through `reduced`).
struct PadeApproximant {
    std::vector<std::complex<double>> num, den;
    unsigned l, m;
    bool reduced = false;
    double condition = 0;
};

PadeApproximant pade(const FormalSeries& s, unsigned l, unsigned m);

// Exact-arithmetic Pade for rational-coefficient series.
struct RatPade {
    std::vector<mpq_class> num, den;
};
RatPade pade_exact(const std::vector<mpq_class>& coeffs, unsigned l, unsigned m);

struct BorelPole {
    std::complex<double> location;
    std::complex<double> residue;
};

struct BorelReport {
    std::vector<BorelPole> poles;      // stable only, sorted by modulus
    std::vector<BorelPole> raw_poles;  // before the stability filter
    unsigned pade_l = 0, pade_m = 0;
    unsigned series_length = 0;
};

// Poles of the near-diagonal Pade of the Borel transform, filtered by
// stability under (L,M) -> (L-1,M-1) (< 1% drift).
BorelReport borel_poles(const FormalSeries& s, unsigned n_terms);

// Rescale an inverse-k series so Borel singularities sit at Chern-Simons
// differences directly: a_n -> a_n / (-2 pi i)^n.
FormalSeries to_cs_units(const FormalSeries& s);

struct StokesMatch {
    std::complex<double> pole;
    double nearest_difference; // CS(B)-CS(A), smallest-modulus lift
    double gap;                // relative mismatch
    bool matched;              // within 2%
};

std::vector<StokesMatch> stokes_location_check(const BorelReport& report,
                                               const std::vector<mpq_class>& cs_values);

std::string borel_report_to_json(const BorelReport& r, const std::vector<StokesMatch>& matches);

// Durand-Kerner roots of a complex polynomial (ascending coefficients).
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& poly);

} // namespace wrt
