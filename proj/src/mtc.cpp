#include "wrt/mtc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wrt {

namespace {

// q-integer [m]_q = sum_{l=0}^{m-1} zeta_{2(k+2)}^{2l-m+1} as an element of
// Q(zeta_{4(k+2)}); the exponent of zeta_N (N = 4(k+2)) is 2*(2l-m+1).
Cyclotomic q_integer(unsigned n_root, long m) {
    Cyclotomic acc = Cyclotomic::from_rational(0);
    for (long l = 0; l < m; ++l)
        acc = acc + Cyclotomic::root(n_root, 2 * (2 * l - m + 1));
    return acc;
}

} // namespace

MtcData mtc_su2(unsigned k) {
    if (k < 1) throw std::invalid_argument("mtc_su2: level must be >= 1");
    MtcData m;
    m.family = Family::su2;
    m.level = k;
    const unsigned n = 4 * (k + 2);
    m.root_order = n;

    for (unsigned j = 0; j <= k; ++j) m.labels.push_back(std::to_string(j));
    for (unsigned j = 0; j <= k; ++j) m.qdims.push_back(q_integer(n, j + 1));
    for (unsigned j = 0; j <= k; ++j)
        m.twists.push_back(Cyclotomic::root(n, static_cast<long>(j) * (j + 2)));

    m.s_unnorm.assign(k + 1, std::vector<Cyclotomic>(k + 1));
    for (unsigned i = 0; i <= k; ++i)
        for (unsigned j = i; j <= k; ++j) {
            Cyclotomic v = q_integer(n, static_cast<long>(i + 1) * (j + 1));
            m.s_unnorm[i][j] = v;
            m.s_unnorm[j][i] = v;
        }

    // T as printed: theta_j times the global e^{-2 pi i / 8}
    Cyclotomic anomaly = Cyclotomic::root(8, -1);
    for (unsigned j = 0; j <= k; ++j) m.t_diag.push_back(m.twists[j] * anomaly);

    m.total_dim_sq = Cyclotomic::from_rational(0);
    m.kappa_unnorm = Cyclotomic::from_rational(0);
    for (unsigned j = 0; j <= k; ++j) {
        Cyclotomic d2 = m.qdims[j] * m.qdims[j];
        m.total_dim_sq = m.total_dim_sq + d2;
        m.kappa_unnorm = m.kappa_unnorm + d2 * m.twists[j];
    }
    m.central_charge = mpq_class(3 * static_cast<long>(k), static_cast<long>(k) + 2);
    m.central_charge.canonicalize();
    m.dual.resize(k + 1);
    for (unsigned j = 0; j <= k; ++j) m.dual[j] = j; // self-dual family
    return m;
}

MtcData mtc_u1(unsigned k) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument(
            "mtc_u1: level must be even (odd levels have no consistent ribbon "
            "structure here -- theta_a = e^{i pi a^2/k} is ill-defined on Z/k, "
            "the spin-structure obstruction)");
    MtcData m;
    m.family = Family::u1;
    m.level = k;
    const unsigned n = 2 * k;
    m.root_order = n;

    for (unsigned a = 0; a < k; ++a) m.labels.push_back(std::to_string(a));
    for (unsigned a = 0; a < k; ++a) m.qdims.push_back(Cyclotomic::from_rational(1));
    for (unsigned a = 0; a < k; ++a)
        m.twists.push_back(Cyclotomic::root(n, static_cast<long>(a) * a));

    m.s_unnorm.assign(k, std::vector<Cyclotomic>(k));
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = 0; b < k; ++b)
            m.s_unnorm[a][b] = Cyclotomic::root(n, 2 * static_cast<long>(a) * b);

    Cyclotomic anomaly = Cyclotomic::root(8, -1);
    for (unsigned a = 0; a < k; ++a) m.t_diag.push_back(m.twists[a] * anomaly);

    m.total_dim_sq = Cyclotomic::from_rational(mpq_class(static_cast<long>(k)));
    m.kappa_unnorm = Cyclotomic::from_rational(0);
    for (unsigned a = 0; a < k; ++a) m.kappa_unnorm = m.kappa_unnorm + m.twists[a];
    m.central_charge = 1;
    m.dual.resize(k);
    for (unsigned a = 0; a < k; ++a) m.dual[a] = (k - a) % k;
    return m;
}

CMat MtcData::s_matrix(unsigned digits) const {
    const std::size_t n = size();
    double d = total_dim(digits);
    CMat s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.at(i, j) = s_unnorm[i][j].eval(digits).to_complex() / d;
    return s;
}

CMat MtcData::t_matrix(unsigned digits) const {
    const std::size_t n = size();
    CMat t(n, n);
    for (std::size_t i = 0; i < n; ++i) t.at(i, i) = t_diag[i].eval(digits).to_complex();
    return t;
}

double MtcData::total_dim(unsigned digits) const {
    return std::sqrt(total_dim_sq.eval(digits).re.to_double());
}

std::complex<double> MtcData::kappa(unsigned digits) const {
    return kappa_unnorm.eval(digits).to_complex() / total_dim(digits);
}

FusionTensor fusion(const MtcData& mtc, unsigned digits, Exec exec) {
    const std::size_t n = mtc.size();
    CMat s = mtc.s_matrix(digits);
    // invertibility guard: for these unitary families unitarity is the check
    if (s.unitarity_defect() > 1e-6)
        throw std::runtime_error("fusion: S-matrix not invertible/unitary at working precision");

    FusionTensor t(n);
    double worst = 0;
    const long long total = static_cast<long long>(n * n);
#pragma omp parallel for schedule(static) reduction(max : worst) if (exec == Exec::parallel)
    for (long long idx = 0; idx < total; ++idx) {
        std::size_t i = static_cast<std::size_t>(idx) / n;
        std::size_t j = static_cast<std::size_t>(idx) % n;
        for (std::size_t l = 0; l < n; ++l) {
            std::complex<double> acc = 0;
            for (std::size_t mm = 0; mm < n; ++mm)
                acc += s.at(i, mm) * s.at(j, mm) * std::conj(s.at(l, mm)) / s.at(0, mm);
            double rounded = std::round(acc.real());
            double resid = std::abs(acc - std::complex<double>(rounded, 0.0));
            worst = std::max(worst, resid);
            t.at(i, j, l) = static_cast<long long>(rounded);
        }
    }
    if (worst > 1e-6)
        throw std::runtime_error("fusion: rounding residual " + std::to_string(worst) +
                                 " exceeds 1e-6 (non-modular or unstable input)");
    return t;
}

long long verlinde_dim(const MtcData& mtc, unsigned genus, unsigned digits) {
    const std::size_t n = mtc.size();
    double d = mtc.total_dim(digits);
    long double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double s0i = mtc.s_unnorm[0][i].eval(digits).re.to_double() / d;
        acc += std::pow(static_cast<long double>(s0i), 2.0L - 2.0L * genus);
    }
    long double rounded = std::round(acc);
    if (std::abs(static_cast<double>(acc - rounded)) > 1e-6)
        throw std::runtime_error("verlinde_dim: residual exceeds 1e-6");
    return static_cast<long long>(rounded);
}

long long conformal_block_dim_pants(const MtcData& mtc, const FusionTensor& nt,
                                    unsigned genus, const std::vector<std::size_t>& marked) {
    const std::size_t n = mtc.size();
    // legs = marked points plus g pairs (c, c*); contract along a caterpillar
    // tree of pants. Zero legs at genus zero: dim = 1 by convention (sphere).
    std::vector<long long> state(n, 0);

    auto fuse_label = [&](const std::vector<long long>& v, std::size_t lab) {
        std::vector<long long> r(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            if (v[x] == 0) continue;
            for (std::size_t y = 0; y < n; ++y)
                if (nt.at(x, lab, y)) r[y] += v[x] * nt.at(x, lab, y);
        }
        return r;
    };

    if (genus == 0) {
        if (marked.empty()) return 1;
        state[marked[0]] = 1;
        for (std::size_t t = 1; t < marked.size(); ++t) state = fuse_label(state, marked[t]);
        return state[0]; // multiplicity of the unit in the total fusion
    }

    long long total = 0;
    // sum over handle labels: each handle contributes legs (c, c^*)
    std::vector<std::size_t> handles(genus, 0);
    while (true) {
        std::vector<std::size_t> legs = marked;
        for (unsigned g = 0; g < genus; ++g) {
            legs.push_back(handles[g]);
            legs.push_back(mtc.dual[handles[g]]);
        }
        total += conformal_block_dim_pants(mtc, nt, 0, legs);
        unsigned pos = 0;
        while (pos < genus && ++handles[pos] == n) {
            handles[pos] = 0;
            ++pos;
        }
        if (pos == genus) break;
    }
    return total;
}

long long conformal_block_dim(const MtcData& mtc, unsigned genus,
                              const std::vector<std::size_t>& marked, unsigned digits) {
    const std::size_t n = mtc.size();
    for (auto l : marked)
        if (l >= n) throw std::invalid_argument("conformal_block_dim: bad label index");

    CMat s = mtc.s_matrix(digits);
    std::complex<double> acc = 0;
    for (std::size_t m = 0; m < n; ++m) {
        std::complex<double> term =
            std::pow(s.at(0, m), 2.0 - 2.0 * static_cast<double>(genus) -
                                      static_cast<double>(marked.size()));
        for (auto l : marked) term *= s.at(l, m);
        acc += term;
    }
    double rounded = std::round(acc.real());
    if (std::abs(acc - std::complex<double>(rounded, 0)) > 1e-6)
        throw std::runtime_error("conformal_block_dim: residual exceeds 1e-6");

    long long via_pants = conformal_block_dim_pants(mtc, fusion(mtc, digits), genus, marked);
    if (via_pants != static_cast<long long>(rounded))
        throw std::runtime_error("conformal_block_dim: S-formula and pants contraction disagree");
    return via_pants;
}

bool ModularReport::ok(double tol) const {
    return unitarity_defect < tol && symmetry_defect < tol && s4_defect < 10 * tol &&
           st3_residual < 10 * tol && kappa_modulus_defect < 10 * tol && kappa_arg_defect < tol;
}

ModularReport check_modular(const MtcData& mtc, unsigned digits) {
    ModularReport r{};
    CMat s = mtc.s_matrix(digits);
    CMat t = mtc.t_matrix(digits);
    r.unitarity_defect = s.unitarity_defect();
    r.symmetry_defect = s.symmetry_defect();

    CMat s2 = s.mul(s);
    r.s4_defect = s2.mul(s2).max_abs_diff(CMat::identity(s.rows()));

    CMat st = s.mul(t);
    CMat st3 = st.mul(st).mul(st);
    // scalar lambda from the largest entry of S^2, then residual
    std::complex<double> lam = 0;
    double best = -1;
    for (std::size_t i = 0; i < s2.rows(); ++i)
        for (std::size_t j = 0; j < s2.cols(); ++j)
            if (std::abs(s2.at(i, j)) > best) {
                best = std::abs(s2.at(i, j));
                lam = st3.at(i, j) / s2.at(i, j);
            }
    r.lambda = lam;
    CMat scaled = s2;
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j) scaled.at(i, j) *= lam;
    r.st3_residual = st3.max_abs_diff(scaled);

    std::complex<double> kappa = mtc.kappa(digits);
    r.kappa_modulus_defect = std::abs(std::abs(kappa) - 1.0);
    double target = 2.0 * std::numbers::pi * mtc.central_charge.get_d() / 8.0;
    double diff = std::remainder(std::arg(kappa) - target, 2.0 * std::numbers::pi);
    r.kappa_arg_defect = std::abs(diff);
    return r;
}

} // namespace wrt
