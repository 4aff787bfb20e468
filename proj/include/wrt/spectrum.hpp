#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "wrt/sweep.hpp"

namespace wrt {

enum class Window { rectangular, hann };

struct Peak {
    double location;            // in [0,1)
    std::string location_rational; // snapped form when available, else decimal
    double amplitude;
};

struct PhaseSpectrum {
    std::vector<Peak> peaks;    // sorted by descending amplitude
    int k_min, k_max;
    double threshold;
    std::vector<double> bins;   // |DFT| profile, for reports
};

// DFT of the sweep; bins above threshold*max are clustered (adjacent bins,
// circularly) and each cluster yields one peak at its maximal bin. When
// `snap_denominator` is set, locations snap to the nearest rational with
// denominator <= that bound if it lies within one bin width.
PhaseSpectrum phase_spectrum(const KSweep& sweep, double threshold,
                             std::optional<unsigned> snap_denominator = std::nullopt,
                             Window window = Window::rectangular);

// Unitary-convention Parseval defect: |sum |F_j|^2 - mean |v|^2|.
double parseval_defect(const KSweep& sweep);

// Frequency-zero coefficient over sliding windows (Hann-weighted by
// default); returns (window-center k, c0) pairs.
struct TrivialCoeff {
    std::vector<double> k_centers;
    std::vector<std::complex<double>> c0;
};
TrivialCoeff trivial_coeff(const KSweep& sweep, std::size_t window_width, std::size_t stride,
                           Window window = Window::hann);

// {j pi/(k+2) : j = 1..k+1}, the geometric-quantization orbit angles.
std::vector<double> bohr_sommerfeld_orbits(unsigned k);

std::string spectrum_to_json(const PhaseSpectrum& s);

} // namespace wrt
