#include "wrt/borel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace wrt {

FormalSeries borel_transform(const FormalSeries& s) {
    FormalSeries out;
    out.variable = s.variable;
    out.coeffs.resize(s.coeffs.size());
    double fact = 1;
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
        if (n > 0) fact *= n;
        out.coeffs[n] = s.coeffs[n] / fact;
    }
    return out;
}

namespace {

// solve the Toeplitz system for denominator coefficients b_1..b_m:
// sum_{j=0}^{m} b_j c_{l+i-j} = 0 for i = 1..m (b_0 = 1)
bool solve_denominator(const std::vector<std::complex<double>>& c, unsigned l, unsigned m,
                       std::vector<std::complex<double>>& den, double* cond) {
    std::vector<std::vector<std::complex<double>>> a(m, std::vector<std::complex<double>>(m + 1));
    auto cAt = [&](long idx) -> std::complex<double> {
        if (idx < 0 || idx >= static_cast<long>(c.size())) return 0;
        return c[static_cast<std::size_t>(idx)];
    };
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) a[i][j] = cAt(static_cast<long>(l) + 1 + i - 1 - j);
        a[i][m] = -cAt(static_cast<long>(l) + 1 + i);
    }
    double maxp = 0, minp = 1e300;
    for (unsigned col = 0; col < m; ++col) {
        unsigned piv = col;
        for (unsigned r = col + 1; r < m; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        double pv = std::abs(a[col][col]);
        if (pv < 1e-300) return false;
        maxp = std::max(maxp, pv);
        minp = std::min(minp, pv);
        for (unsigned r = 0; r < m; ++r) {
            if (r == col) continue;
            std::complex<double> f = a[r][col] / a[col][col];
            for (unsigned cc = col; cc <= m; ++cc) a[r][cc] -= f * a[col][cc];
        }
    }
    if (cond) *cond = maxp / minp;
    den.assign(m + 1, 0);
    den[0] = 1;
    for (unsigned j = 0; j < m; ++j) den[j + 1] = a[j][m] / a[j][j];
    return true;
}

} // namespace

PadeApproximant pade(const FormalSeries& s, unsigned l, unsigned m) {
    if (l + m + 1 > s.coeffs.size())
        throw std::invalid_argument("pade: need L+M+1 <= series length");
    PadeApproximant p;
    p.l = l;
    p.m = m;
    unsigned mm = m;
    std::vector<std::complex<double>> den;
    while (mm > 0 && !solve_denominator(s.coeffs, l, mm, den, &p.condition)) {
        --mm; // singular Pade table entry: fall back to a smaller denominator
        p.reduced = true;
    }
    if (mm == 0) den = {1.0};
    p.m = mm;
    p.den = den;
    p.num.assign(l + 1, 0);
    for (unsigned i = 0; i <= l; ++i) {
        std::complex<double> acc = 0;
        for (unsigned j = 0; j <= std::min(i, mm); ++j)
            acc += den[j] * s.coeffs[i - j];
        p.num[i] = acc;
    }
    return p;
}

RatPade pade_exact(const std::vector<mpq_class>& coeffs, unsigned l, unsigned m) {
    if (l + m + 1 > coeffs.size())
        throw std::invalid_argument("pade_exact: need L+M+1 <= series length");
    auto cAt = [&](long idx) -> mpq_class {
        if (idx < 0 || idx >= static_cast<long>(coeffs.size())) return 0;
        return coeffs[static_cast<std::size_t>(idx)];
    };
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1));
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) a[i][j] = cAt(static_cast<long>(l) + i - j);
        a[i][m] = -cAt(static_cast<long>(l) + 1 + i);
    }
    for (unsigned col = 0; col < m; ++col) {
        unsigned piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) throw std::runtime_error("pade_exact: singular system");
        std::swap(a[col], a[piv]);
        for (unsigned r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[col][col];
            for (unsigned cc = col; cc <= m; ++cc) a[r][cc] -= f * a[col][cc];
        }
    }
    RatPade p;
    p.den.assign(m + 1, 0);
    p.den[0] = 1;
    for (unsigned j = 0; j < m; ++j) p.den[j + 1] = a[j][m] / a[j][j];
    p.num.assign(l + 1, 0);
    for (unsigned i = 0; i <= l; ++i) {
        mpq_class acc = 0;
        for (unsigned j = 0; j <= std::min(i, m); ++j) acc += p.den[j] * cAt(static_cast<long>(i) - j);
        p.num[i] = acc;
    }
    return p;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& poly) {
    // strip trailing zeros
    std::vector<std::complex<double>> p = poly;
    while (p.size() > 1 && std::abs(p.back()) < 1e-300) p.pop_back();
    const std::size_t deg = p.size() - 1;
    if (deg == 0) return {};
    // Durand-Kerner from staggered starting points
    std::vector<std::complex<double>> r(deg);
    std::complex<double> seed(0.4, 0.9);
    r[0] = seed;
    for (std::size_t i = 1; i < deg; ++i) r[i] = r[i - 1] * seed;
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
        return acc;
    };
    for (int it = 0; it < 500; ++it) {
        double moved = 0;
        for (std::size_t i = 0; i < deg; ++i) {
            std::complex<double> d = p.back();
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) d *= (r[i] - r[j]);
            if (std::abs(d) < 1e-300) continue;
            std::complex<double> delta = eval(r[i]) / d;
            r[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return r;
}

namespace {

std::vector<BorelPole> pade_poles_of(const FormalSeries& borel, unsigned l, unsigned m) {
    PadeApproximant p = pade(borel, l, m);
    std::vector<BorelPole> out;
    for (auto z : polynomial_roots(p.den)) {
        // residue num(z)/den'(z)
        std::complex<double> dp = 0;
        for (std::size_t i = 1; i < p.den.size(); ++i)
            dp += static_cast<double>(i) * p.den[i] * std::pow(z, static_cast<double>(i - 1));
        std::complex<double> nv = 0;
        for (std::size_t i = 0; i < p.num.size(); ++i) nv += p.num[i] * std::pow(z, static_cast<double>(i));
        BorelPole bp;
        bp.location = z;
        bp.residue = std::abs(dp) > 1e-300 ? nv / dp : std::complex<double>(0, 0);
        out.push_back(bp);
    }
    return out;
}

} // namespace

BorelReport borel_poles(const FormalSeries& s, unsigned n_terms) {
    if (n_terms < 8) throw std::invalid_argument("borel_poles: need at least 8 terms");
    if (n_terms > s.coeffs.size()) n_terms = static_cast<unsigned>(s.coeffs.size());
    FormalSeries trunc;
    trunc.variable = s.variable;
    trunc.coeffs.assign(s.coeffs.begin(), s.coeffs.begin() + n_terms);
    FormalSeries b = borel_transform(trunc);

    unsigned half = (n_terms - 1) / 2;
    unsigned l = half, m = half;
    BorelReport rep;
    rep.pade_l = l;
    rep.pade_m = m;
    rep.series_length = n_terms;

    auto cur = pade_poles_of(b, l, m);
    auto prev = (m >= 1) ? pade_poles_of(b, l - 1, m - 1) : std::vector<BorelPole>{};
    rep.raw_poles = cur;
    for (const auto& pole : cur) {
        bool stable = false;
        for (const auto& q : prev)
            if (std::abs(q.location - pole.location) < 0.01 * std::abs(pole.location)) {
                stable = true;
                break;
            }
        if (stable) rep.poles.push_back(pole);
    }
    std::sort(rep.poles.begin(), rep.poles.end(),
              [](const BorelPole& a, const BorelPole& b2) {
                  return std::abs(a.location) < std::abs(b2.location);
              });
    return rep;
}

FormalSeries to_cs_units(const FormalSeries& s) {
    // a 1/k series with instanton factors e^{2 pi i omega k} has its Borel
    // singularity at -2 pi i omega; scaling coefficients by (-2 pi i)^n
    // moves it to omega itself
    FormalSeries out;
    out.variable = SeriesVariable::hbar;
    out.coeffs.resize(s.coeffs.size());
    const std::complex<double> lam(0, -2.0 * std::numbers::pi);
    std::complex<double> pw = 1.0;
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
        out.coeffs[n] = s.coeffs[n] * pw;
        pw *= lam;
    }
    return out;
}

std::vector<StokesMatch> stokes_location_check(const BorelReport& report,
                                               const std::vector<mpq_class>& cs_values) {
    std::vector<StokesMatch> out;
    for (const auto& p : report.poles) {
        StokesMatch m;
        m.pole = p.location;
        m.matched = false;
        m.nearest_difference = 0;
        m.gap = -1;
        double target = std::abs(p.location);
        for (std::size_t i = 0; i < cs_values.size(); ++i)
            for (std::size_t j = 0; j < cs_values.size(); ++j) {
                if (i == j) continue;
                double d0 = mpq_class(cs_values[j] - cs_values[i]).get_d();
                d0 -= std::floor(d0); // representative in [0,1)
                // lifts of the class d0 mod 1: smallest-modulus one plus the
                // one nearest the pole modulus
                double lifts[2] = {d0 - std::round(d0), d0 + std::round(target - d0)};
                for (double d : lifts) {
                    if (d == 0.0) continue; // the origin is not a singularity candidate
                    double gap = std::abs(target - std::abs(d)) / std::abs(d);
                    if (m.gap < 0 || gap < m.gap) {
                        m.gap = gap;
                        m.nearest_difference = d;
                    }
                }
            }
        if (m.gap >= 0 && m.gap <= 0.02) m.matched = true;
        out.push_back(m);
    }
    return out;
}

std::string borel_report_to_json(const BorelReport& r, const std::vector<StokesMatch>& matches) {
    nlohmann::json j;
    j["poles"] = nlohmann::json::array();
    for (const auto& p : r.poles)
        j["poles"].push_back({{"loc", {p.location.real(), p.location.imag()}},
                              {"residue", {p.residue.real(), p.residue.imag()}}});
    j["pade"] = {r.pade_l, r.pade_m};
    j["series_length"] = r.series_length;
    j["matches"] = nlohmann::json::array();
    for (const auto& m : matches)
        j["matches"].push_back({{"pole", {m.pole.real(), m.pole.imag()}},
                                {"nearest_difference", m.nearest_difference},
                                {"gap", m.gap},
                                {"matched", m.matched}});
    return j.dump(2);
}

} // namespace wrt
