#include "wrt/sweep.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace wrt {

std::complex<double> z_s3(Family family, unsigned k) {
    return 1.0 / tables_fp(family, k).total_dim;
}

KSweep k_sweep(Family family, const PlumbingGraph& g, int k_min, int k_max,
               SweepNorm norm, Exec exec) {
    if (k_min < 1 || k_max < k_min) throw std::invalid_argument("k_sweep: bad level range");
    g.validate();
    KSweep s;
    s.family = family;
    s.graph = g;
    s.normalization = norm;
    int step = family == Family::u1 ? 2 : 1;
    int start = k_min;
    if (family == Family::u1 && start % 2 != 0) ++start;
    for (int k = start; k <= k_max; k += step) s.k_values.push_back(k);
    s.values.resize(s.k_values.size());

    const long long n = static_cast<long long>(s.k_values.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (long long i = 0; i < n; ++i) {
        unsigned k = static_cast<unsigned>(s.k_values[static_cast<std::size_t>(i)]);
        ColorTablesFP t = tables_fp(family, k);
        // inner contraction stays serial; parallelism lives at the k level
        RtResult r = rt_invariant_fp(t, g, Exec::serial);
        std::complex<double> z = r.z;
        if (norm == SweepNorm::divided_by_s3) z *= t.total_dim;
        s.values[static_cast<std::size_t>(i)] = z;
    }
    return s;
}

std::string sweep_to_csv(const KSweep& s, unsigned digits) {
    std::ostringstream o;
    o << "k,re,im\n";
    o << std::setprecision(static_cast<int>(digits)) << std::scientific;
    for (std::size_t i = 0; i < s.k_values.size(); ++i)
        o << s.k_values[i] << "," << s.values[i].real() << "," << s.values[i].imag() << "\n";
    return o.str();
}

KSweep sweep_from_csv(const std::string& text) {
    KSweep s;
    s.family = Family::su2;
    s.normalization = SweepNorm::raw;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("k,", 0) != 0)
        throw std::invalid_argument("sweep_from_csv: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        std::getline(ls, tok, ',');
        int k = std::stoi(tok);
        std::getline(ls, tok, ',');
        double re = std::stod(tok);
        std::getline(ls, tok, ',');
        double im = std::stod(tok);
        if (!s.k_values.empty() && k <= s.k_values.back())
            throw std::invalid_argument("sweep_from_csv: k values must increase");
        s.k_values.push_back(k);
        s.values.emplace_back(re, im);
    }
    return s;
}

} // namespace wrt
