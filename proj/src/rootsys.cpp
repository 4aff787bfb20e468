#include "wrt/rootsys.hpp"

#include <omp.h>
#include <functional>
#include <stdexcept>

#include "wrt/bigfloat.hpp"

namespace wrt {

mpq_class RootSystem::inner(const RatVec& a, const RatVec& b) const {
    mpq_class s = 0;
    for (unsigned i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < rank; ++j) s += a[i] * gram[i][j] * b[j];
    }
    return s;
}

RootSystem root_system_a(unsigned n) {
    if (n < 1 || n > 3) throw std::invalid_argument("root_system_a: rank must be 1..3");
    RootSystem rs;
    rs.rank = n;
    rs.dual_coxeter = n + 1;
    rs.gram.assign(n, std::vector<mpq_class>(n, 0));
    for (unsigned i = 0; i < n; ++i) {
        rs.gram[i][i] = 2;
        if (i + 1 < n) {
            rs.gram[i][i + 1] = -1;
            rs.gram[i + 1][i] = -1;
        }
    }
    for (unsigned i = 0; i < n; ++i) {
        RatVec e(n, 0);
        e[i] = 1;
        rs.simple_roots.push_back(e);
    }
    // positive roots of A_n: alpha_i + ... + alpha_j
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) {
            RatVec v(n, 0);
            for (unsigned t = i; t <= j; ++t) v[t] = 1;
            rs.positive_roots.push_back(v);
        }
    rs.highest_root.assign(n, 1);
    rs.rho.assign(n, 0);
    for (const auto& r : rs.positive_roots)
        for (unsigned i = 0; i < n; ++i) rs.rho[i] += r[i] / 2;
    return rs;
}

namespace {

RatVec reflect(const RootSystem& rs, const RatVec& alpha, const RatVec& v) {
    mpq_class c = 2 * rs.inner(alpha, v) / rs.inner(alpha, alpha);
    RatVec r = v;
    for (unsigned i = 0; i < rs.rank; ++i) r[i] -= c * alpha[i];
    return r;
}

bool rv_eq(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool mat_eq(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!rv_eq(a[i], b[i])) return false;
    return true;
}

bool is_negative_root(const RatVec& v) {
    bool nonzero = false;
    for (const auto& c : v) {
        if (c > 0) return false;
        if (c < 0) nonzero = true;
    }
    return nonzero;
}

} // namespace

RatVec WeylGroup::apply(const WeylElement& w, const RatVec& v) const {
    RatVec r(v.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) r[i] += w.columns[j][i] * v[j];
    }
    return r;
}

WeylGroup weyl_group(const RootSystem& rs) {
    const unsigned n = rs.rank;
    WeylGroup wg;

    auto apply_cols = [&](const std::vector<RatVec>& cols, const RatVec& v) {
        RatVec r(n, 0);
        for (unsigned j = 0; j < n; ++j)
            for (unsigned i = 0; i < n; ++i) r[i] += cols[j][i] * v[j];
        return r;
    };

    std::vector<std::vector<RatVec>> elems;
    std::vector<RatVec> id;
    for (unsigned i = 0; i < n; ++i) id.push_back(rs.simple_roots[i]);
    elems.push_back(id);

    std::size_t frontier_begin = 0;
    while (frontier_begin < elems.size()) {
        std::size_t frontier_end = elems.size();
        for (std::size_t e = frontier_begin; e < frontier_end; ++e)
            for (unsigned s = 0; s < n; ++s) {
                std::vector<RatVec> cand(n);
                for (unsigned j = 0; j < n; ++j)
                    cand[j] = reflect(rs, rs.simple_roots[s], elems[e][j]);
                bool known = false;
                for (const auto& m : elems)
                    if (mat_eq(m, cand)) { known = true; break; }
                if (!known) elems.push_back(std::move(cand));
            }
        frontier_begin = frontier_end;
    }

    for (auto& cols : elems) {
        WeylElement w;
        w.columns = cols;
        w.length = 0;
        for (const auto& r : rs.positive_roots)
            if (is_negative_root(apply_cols(cols, r))) ++w.length;
        wg.elements.push_back(std::move(w));
    }
    return wg;
}

std::vector<AlcoveWeight> alcove_weights(const RootSystem& rs, unsigned k) {
    const unsigned n = rs.rank;
    // fundamental weights in root coordinates: omega = G^{-1} e (exact solve)
    std::vector<RatVec> omega(n);
    for (unsigned w = 0; w < n; ++w) {
        // solve G x = e_w by Gaussian elimination over Q
        std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1, 0));
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) a[i][j] = rs.gram[i][j];
            a[i][n] = (i == w) ? 1 : 0;
        }
        for (unsigned c = 0; c < n; ++c) {
            unsigned p = c;
            while (a[p][c] == 0) ++p;
            std::swap(a[c], a[p]);
            for (unsigned i = 0; i < n; ++i) {
                if (i == c || a[i][c] == 0) continue;
                mpq_class f = a[i][c] / a[c][c];
                for (unsigned j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
            }
        }
        RatVec x(n);
        for (unsigned i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
        omega[w] = x;
    }

    std::vector<AlcoveWeight> out;
    std::vector<unsigned> labels(n, 0);
    // lexicographic enumeration over Dynkin labels
    std::function<void(unsigned)> rec = [&](unsigned pos) {
        if (pos == n) {
            RatVec coords(n, 0);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) coords[j] += mpq_class(labels[i]) * omega[i][j];
            AlcoveWeight aw{labels, coords};
            if (rs.inner(aw.coords, rs.highest_root) <= k) out.push_back(std::move(aw));
            return;
        }
        for (unsigned v = 0; v <= k; ++v) {
            labels[pos] = v;
            rec(pos + 1);
        }
        labels[pos] = 0;
    };
    rec(0);
    return out;
}

CMat kac_peterson_s(const RootSystem& rs, unsigned k, unsigned digits, Exec exec) {
    if (rs.rank > 3) throw std::invalid_argument("kac_peterson_s: rank must be <= 3");
    const unsigned kappa = k + rs.dual_coxeter;
    WeylGroup wg = weyl_group(rs);
    std::vector<AlcoveWeight> alc = alcove_weights(rs, k);
    const std::size_t sz = alc.size();
    if (sz > 200) throw std::invalid_argument("kac_peterson_s: alcove too large");

    // |P/(k+h)Q|^{-1/2} for A_n equals ((n+1) kappa^n)^{-1/2}; the i-power
    // in front is i^{|Delta_+|}.
    double lattice = static_cast<double>(rs.rank + 1);
    for (unsigned t = 0; t < rs.rank; ++t) lattice *= kappa;

    std::vector<int> sign_of(wg.elements.size());
    for (std::size_t w = 0; w < wg.elements.size(); ++w)
        sign_of[w] = wg.elements[w].length % 2 == 0 ? 1 : -1;

    CMat s(sz, sz);
    const long long total = static_cast<long long>(sz * sz);

#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (long long idx = 0; idx < total; ++idx) {
        std::size_t i = static_cast<std::size_t>(idx) / sz;
        std::size_t j = static_cast<std::size_t>(idx) % sz;
        RatVec lam = alc[i].coords, mu = alc[j].coords;
        for (unsigned t = 0; t < rs.rank; ++t) {
            lam[t] += rs.rho[t];
            mu[t] += rs.rho[t];
        }
        BigComplex alt(digits);
        for (std::size_t w = 0; w < wg.elements.size(); ++w) {
            RatVec wlam = wg.apply(wg.elements[w], lam);
            mpq_class q = -rs.inner(wlam, mu) / kappa;
            BigComplex ph = BigComplex::unit_phase(q, digits);
            if (sign_of[w] > 0) alt = alt + ph;
            else alt = alt - ph;
        }
        std::complex<double> val = alt.to_complex() / std::sqrt(lattice);
        // multiply by i^{|Delta_+|}
        unsigned ip = rs.positive_roots.size() % 4;
        static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        s.at(i, j) = ipow[ip] * val;
    }
    return s;
}

} // namespace wrt
