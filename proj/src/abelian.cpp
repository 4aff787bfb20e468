#include "wrt/abelian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wrt {

namespace {

mpq_class mod1(mpq_class q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    q -= mpq_class(fl);
    return q;
}

std::complex<double> unit_phase_d(const mpq_class& t) {
    double ang = 2.0 * std::numbers::pi * mod1(t).get_d();
    return {std::cos(ang), std::sin(ang)};
}

} // namespace

std::complex<double> linking_form_invariant(const IntMat& b, unsigned k, unsigned digits,
                                            const AbelianConfig& cfg) {
    (void)digits; // phases are exact rationals; double assembly suffices here
    if (k == 0 || k % 2 != 0)
        throw std::invalid_argument("linking_form_invariant: k must be even");
    HomologyData h = homology_data(b, k);
    const std::size_t nt = h.torsion.size();

    // the free part contributes k per Z-summand (q vanishes there)
    double free_part = std::pow(static_cast<double>(k), static_cast<double>(h.b1));

    mpz_class tor_order = 1;
    for (const auto& d : h.torsion) tor_order *= d;

    std::complex<double> sum = 0;
    std::vector<mpz_class> gamma(nt, 0);
    while (true) {
        // q(gamma) = c * lambda(gamma, gamma), c = 1/2 or 1
        mpq_class lam = 0;
        for (std::size_t i = 0; i < nt; ++i) {
            if (gamma[i] == 0) continue;
            for (std::size_t j = 0; j < nt; ++j) {
                if (gamma[j] == 0) continue;
                lam += mpq_class(gamma[i] * gamma[j]) * h.linking_form[i][j];
            }
        }
        if (cfg.sign == LinkingSign::plus_b_inverse) lam = -lam;
        mpq_class q = lam;
        if (cfg.refinement == Refinement::half_diagonal) q /= 2;
        sum += unit_phase_d(mpq_class(static_cast<long>(k)) * q);

        std::size_t pos = 0;
        while (pos < nt && ++gamma[pos] == h.torsion[pos]) {
            gamma[pos] = 0;
            ++pos;
        }
        if (pos == nt) break;
        if (nt == 0) break;
    }
    if (nt == 0) sum = 1.0;

    double norm = std::pow(static_cast<double>(k), -static_cast<double>(h.b1) / 2.0) /
                  std::sqrt(tor_order.get_d());
    return norm * free_part * sum;
}

std::complex<double> u1_surgery_invariant(const IntMat& b, unsigned k, unsigned digits,
                                          Exec exec) {
    (void)digits;
    if (k == 0 || k % 2 != 0)
        throw std::invalid_argument("u1_surgery_invariant: k must be even");
    if (!b.is_symmetric()) throw std::invalid_argument("u1_surgery_invariant: B not symmetric");
    const std::size_t m = b.rows();
    auto sig = symmetric_signature(b);

    // phase table: e^{i pi n / k} for n mod 2k
    const unsigned period = 2 * k;
    std::vector<std::complex<double>> phase(period);
    for (unsigned n = 0; n < period; ++n) {
        double ang = std::numbers::pi * n / k;
        phase[n] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<std::vector<long>> bb(m, std::vector<long>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            mpz_class r = b.at(i, j) % period;
            if (r < 0) r += period;
            bb[i][j] = r.get_si();
        }

    // sum over (Z/k)^m of e^{i pi (a^T B a)/k}; fixed-block decomposition so
    // the combine order is independent of the thread count
    double total_count = 1;
    for (std::size_t i = 0; i < m; ++i) total_count *= k;
    if (total_count > 5e8) throw std::invalid_argument("u1_surgery_invariant: state space too large");
    const long long total = static_cast<long long>(total_count);

    const int nblocks = 64;
    std::vector<std::complex<double>> block_sum(nblocks, 0.0);

#pragma omp parallel for schedule(static) if (exec == Exec::parallel && total > 4096)
    for (int blk = 0; blk < nblocks; ++blk) {
        long long lo = total * blk / nblocks, hi = total * (blk + 1) / nblocks;
        std::vector<long> a(m);
        std::complex<double> acc = 0;
        for (long long idx = lo; idx < hi; ++idx) {
            long long rem = idx;
            for (std::size_t i = 0; i < m; ++i) {
                a[i] = static_cast<long>(rem % k);
                rem /= k;
            }
            long n = 0;
            for (std::size_t i = 0; i < m; ++i) {
                n = (n + bb[i][i] * ((a[i] * a[i]) % period)) % period;
                for (std::size_t j = i + 1; j < m; ++j)
                    n = (n + 2 * bb[i][j] % period * ((a[i] * a[j]) % period)) % period;
            }
            acc += phase[((n % period) + period) % period];
        }
        block_sum[blk] = acc;
    }
    std::complex<double> sum = 0;
    for (const auto& s : block_sum) sum += s;
    if (m == 0) sum = 1.0;

    std::complex<double> kappa = {std::cos(std::numbers::pi / 4), std::sin(std::numbers::pi / 4)};
    std::complex<double> kp = 1.0;
    for (int i = 0; i < std::abs(sig.signature); ++i)
        kp *= (sig.signature > 0 ? std::conj(kappa) : kappa); // kappa^{-sigma}
    double norm = std::pow(static_cast<double>(k), -(static_cast<double>(m) + 1) / 2.0);
    return kp * norm * sum;
}

} // namespace wrt
