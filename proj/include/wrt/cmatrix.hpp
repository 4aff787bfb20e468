#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace wrt {

// Minimal dense complex matrix; enough for modularity checks and
// mapping-torus traces on alcove-sized state spaces.
class CMat {
public:
    CMat() : n_(0), m_(0) {}
    CMat(std::size_t n, std::size_t m) : n_(n), m_(m), a_(n * m, {0.0, 0.0}) {}
    static CMat identity(std::size_t n) {
        CMat r(n, n);
        for (std::size_t i = 0; i < n; ++i) r.at(i, i) = 1.0;
        return r;
    }

    std::size_t rows() const { return n_; }
    std::size_t cols() const { return m_; }
    std::complex<double>& at(std::size_t i, std::size_t j) { return a_[i * m_ + j]; }
    const std::complex<double>& at(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }

    CMat mul(const CMat& o) const {
        CMat r(n_, o.m_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < m_; ++k) {
                auto v = at(i, k);
                if (v == std::complex<double>{}) continue;
                for (std::size_t j = 0; j < o.m_; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    CMat adjoint() const {
        CMat r(m_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m_; ++j) r.at(j, i) = std::conj(at(i, j));
        return r;
    }

    std::complex<double> trace() const {
        std::complex<double> t = 0;
        for (std::size_t i = 0; i < n_ && i < m_; ++i) t += at(i, i);
        return t;
    }

    double max_abs_diff(const CMat& o) const {
        double d = 0;
        for (std::size_t i = 0; i < a_.size(); ++i) d = std::max(d, std::abs(a_[i] - o.a_[i]));
        return d;
    }

    double unitarity_defect() const { return mul(adjoint()).max_abs_diff(identity(n_)); }
    double symmetry_defect() const {
        double d = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m_; ++j) d = std::max(d, std::abs(at(i, j) - at(j, i)));
        return d;
    }

private:
    std::size_t n_, m_;
    std::vector<std::complex<double>> a_;
};

} // namespace wrt
