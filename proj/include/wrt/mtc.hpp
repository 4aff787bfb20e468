#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "wrt/cmatrix.hpp"
#include "wrt/cyclo.hpp"
#include "wrt/rootsys.hpp"

namespace wrt {

enum class Family { su2, u1 };

// One modular tensor category instance with exact entries. Index 0 is the
// unit object throughout.
struct MtcData {
    Family family;
    unsigned level;
    unsigned root_order;                       // cyclotomic order of the exact entries
    std::vector<std::string> labels;
    std::vector<Cyclotomic> qdims;
    std::vector<Cyclotomic> twists;            // ribbon eigenvalues theta_i
    std::vector<std::vector<Cyclotomic>> s_unnorm; // D * S (Hopf-link values)
    std::vector<Cyclotomic> t_diag;            // representation T, anomaly factor included
    Cyclotomic total_dim_sq;                   // D^2
    Cyclotomic kappa_unnorm;                   // D * kappa = sum dim^2 theta
    mpq_class central_charge;
    std::vector<std::size_t> dual;             // dual involution on labels

    std::size_t size() const { return qdims.size(); }

    // numeric S (normalized), T matrices at the given precision
    CMat s_matrix(unsigned digits) const;
    CMat t_matrix(unsigned digits) const;
    std::complex<double> kappa(unsigned digits) const;
    double total_dim(unsigned digits) const;
};

MtcData mtc_su2(unsigned k);
MtcData mtc_u1(unsigned k); // k even; throws std::invalid_argument otherwise

// Fusion multiplicities via Verlinde diagonalization of the numeric S;
// throws if a rounding residual exceeds 1e-6.
class FusionTensor {
public:
    FusionTensor() : n_(0) {}
    FusionTensor(std::size_t n) : n_(n), a_(n * n * n, 0) {}
    long long& at(std::size_t i, std::size_t j, std::size_t l) { return a_[(i * n_ + j) * n_ + l]; }
    long long at(std::size_t i, std::size_t j, std::size_t l) const { return a_[(i * n_ + j) * n_ + l]; }
    std::size_t size() const { return n_; }
    bool operator==(const FusionTensor& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    std::size_t n_;
    std::vector<long long> a_;
};

FusionTensor fusion(const MtcData& mtc, unsigned digits, Exec exec = Exec::parallel);

// dim V(Sigma_g) = sum_i (S_{0i})^{2-2g}, rounded with residual check.
long long verlinde_dim(const MtcData& mtc, unsigned genus, unsigned digits);

// Dimension of the space of conformal blocks for genus g with marked points;
// cross-checked internally against the pants-decomposition contraction of
// the fusion tensor. Throws on residual failure or route disagreement.
long long conformal_block_dim(const MtcData& mtc, unsigned genus,
                              const std::vector<std::size_t>& marked, unsigned digits);

// Pants-tree contraction route alone (the combinatorial side of the
// cross-check; exposed for tests).
long long conformal_block_dim_pants(const MtcData& mtc, const FusionTensor& n,
                                    unsigned genus, const std::vector<std::size_t>& marked);

struct ModularReport {
    double unitarity_defect;
    double symmetry_defect;
    double s4_defect;               // ||S^4 - 1||
    double st3_residual;            // ||(ST)^3 - lambda S^2||
    std::complex<double> lambda;    // the proportionality scalar
    double kappa_modulus_defect;    // | |kappa| - 1 |
    double kappa_arg_defect;        // | arg kappa - 2 pi c / 8 | mod 2 pi
    bool ok(double tol = 1e-9) const;
};

ModularReport check_modular(const MtcData& mtc, unsigned digits);

} // namespace wrt
