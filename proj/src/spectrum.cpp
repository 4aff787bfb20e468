#include "wrt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wrt {

namespace {

std::vector<double> window_weights(std::size_t n, Window w) {
    std::vector<double> out(n, 1.0);
    if (w == Window::hann && n > 1)
        for (std::size_t i = 0; i < n; ++i)
            out[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (n - 1));
    return out;
}

// best rational approximation with bounded denominator (Stern-Brocot walk)
std::pair<long, long> bounded_rational(double x, unsigned max_den) {
    long pl = 0, ql = 1, pr = 1, qr = 1; // x in [0,1)
    long best_p = 0, best_q = 1;
    double best_err = std::abs(x);
    for (int it = 0; it < 64; ++it) {
        long pm = pl + pr, qm = ql + qr;
        if (qm > static_cast<long>(max_den)) break;
        double mid = static_cast<double>(pm) / qm;
        if (std::abs(x - mid) < best_err) {
            best_err = std::abs(x - mid);
            best_p = pm;
            best_q = qm;
        }
        if (x < mid) { pr = pm; qr = qm; }
        else { pl = pm; ql = qm; }
    }
    if (std::abs(x - 1.0) < best_err) { best_p = 0; best_q = 1; } // wrap
    return {best_p, best_q};
}

} // namespace

PhaseSpectrum phase_spectrum(const KSweep& sweep, double threshold,
                             std::optional<unsigned> snap_denominator, Window window) {
    const std::size_t n = sweep.values.size();
    if (n < 32) throw std::invalid_argument("phase_spectrum: window too short (need >= 32 samples)");

    auto w = window_weights(n, window);
    std::vector<double> amps(n);
    std::vector<std::complex<double>> coef(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc = 0;
        for (std::size_t t = 0; t < n; ++t) {
            double ang = -2.0 * std::numbers::pi * static_cast<double>(j) * t / n;
            acc += w[t] * sweep.values[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        coef[j] = acc / static_cast<double>(n);
        amps[j] = std::abs(coef[j]);
    }

    double mx = *std::max_element(amps.begin(), amps.end());
    std::vector<char> above(n, 0);
    for (std::size_t j = 0; j < n; ++j) above[j] = amps[j] > threshold * mx;

    // circular clusters of above-threshold bins: one peak per cluster
    PhaseSpectrum out;
    out.k_min = sweep.k_values.front();
    out.k_max = sweep.k_values.back();
    out.threshold = threshold;
    out.bins = amps;

    std::vector<char> visited(n, 0);
    // sample spacing in k (u1 sweeps step by 2)
    double kstep = sweep.k_values.size() > 1 ? sweep.k_values[1] - sweep.k_values[0] : 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (!above[j] || visited[j]) continue;
        // walk the cluster in both directions
        std::size_t best = j;
        std::size_t cur = j;
        visited[j] = 1;
        for (std::size_t step = 1; step < n; ++step) {
            std::size_t nx = (j + step) % n;
            if (!above[nx] || visited[nx]) break;
            visited[nx] = 1;
            if (amps[nx] > amps[best]) best = nx;
            cur = nx;
        }
        for (std::size_t step = 1; step < n; ++step) {
            std::size_t pv = (j + n - step) % n;
            if (!above[pv] || visited[pv]) break;
            visited[pv] = 1;
            if (amps[pv] > amps[best]) best = pv;
        }
        (void)cur;
        Peak p;
        // frequency per unit k, folded to [0,1)
        double loc = static_cast<double>(best) / n / kstep;
        loc -= std::floor(loc);
        p.location = loc;
        p.amplitude = amps[best];
        std::ostringstream dec;
        dec << loc;
        p.location_rational = dec.str();
        if (snap_denominator) {
            auto [pp, qq] = bounded_rational(loc, *snap_denominator);
            double bin_width = 1.0 / (n * kstep);
            if (std::abs(loc - static_cast<double>(pp) / qq) <= bin_width) {
                p.location = static_cast<double>(pp) / qq;
                p.location_rational = std::to_string(pp) + "/" + std::to_string(qq);
            }
        }
        out.peaks.push_back(p);
    }
    std::sort(out.peaks.begin(), out.peaks.end(),
              [](const Peak& a, const Peak& b) { return a.amplitude > b.amplitude; });
    return out;
}

double parseval_defect(const KSweep& sweep) {
    const std::size_t n = sweep.values.size();
    double power = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc = 0;
        for (std::size_t t = 0; t < n; ++t) {
            double ang = -2.0 * std::numbers::pi * static_cast<double>(j) * t / n;
            acc += sweep.values[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        power += std::norm(acc / static_cast<double>(n));
    }
    double mean = 0;
    for (const auto& v : sweep.values) mean += std::norm(v);
    mean /= n;
    return std::abs(power - mean) / std::max(1.0, mean);
}

TrivialCoeff trivial_coeff(const KSweep& sweep, std::size_t window_width, std::size_t stride,
                           Window window) {
    const std::size_t n = sweep.values.size();
    if (window_width > n) throw std::invalid_argument("trivial_coeff: window exceeds sweep");
    if (stride == 0) throw std::invalid_argument("trivial_coeff: stride must be positive");
    TrivialCoeff out;
    auto w = window_weights(window_width, window);
    double wsum = 0;
    for (auto x : w) wsum += x;
    for (std::size_t s = 0; s + window_width <= n; s += stride) {
        std::complex<double> acc = 0;
        for (std::size_t t = 0; t < window_width; ++t) acc += w[t] * sweep.values[s + t];
        out.c0.push_back(acc / wsum);
        out.k_centers.push_back(sweep.k_values[s + window_width / 2]);
    }
    return out;
}

std::vector<double> bohr_sommerfeld_orbits(unsigned k) {
    if (k < 1) throw std::invalid_argument("bohr_sommerfeld_orbits: k >= 1");
    std::vector<double> out;
    for (unsigned j = 1; j <= k + 1; ++j)
        out.push_back(j * std::numbers::pi / (k + 2));
    return out;
}

std::string spectrum_to_json(const PhaseSpectrum& s) {
    nlohmann::json j;
    j["peaks"] = nlohmann::json::array();
    for (const auto& p : s.peaks)
        j["peaks"].push_back({{"loc", p.location_rational}, {"amp", p.amplitude}});
    j["window"] = {s.k_min, s.k_max};
    return j.dump(2);
}

} // namespace wrt
