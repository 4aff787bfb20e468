#include "wrt/surgery.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace wrt {

namespace {

struct Forest {
    // adjacency by index, parent-rooted orientation per tree
    std::vector<std::vector<std::size_t>> children;
    std::vector<std::size_t> order; // post-order over all trees
    std::vector<std::size_t> roots;
    std::vector<std::size_t> deg;
};

Forest orient(const PlumbingGraph& g) {
    const std::size_t n = g.vertices.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : g.edges) {
        std::size_t a = g.index_of(e.first), b = g.index_of(e.second);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    Forest f;
    f.children.assign(n, {});
    f.deg.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) f.deg[i] = adj[i].size();

    std::vector<char> seen(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        if (seen[r]) continue;
        f.roots.push_back(r);
        // iterative DFS, children away from root, post-order
        std::vector<std::pair<std::size_t, std::size_t>> stack{{r, SIZE_MAX}};
        std::vector<std::size_t> post;
        seen[r] = 1;
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            post.push_back(v);
            for (auto u : adj[v]) {
                if (u == parent || seen[u]) continue;
                seen[u] = 1;
                f.children[v].push_back(u);
                stack.emplace_back(u, v);
            }
        }
        // reverse pre-order of a tree is a valid post-order for folding
        for (std::size_t i = post.size(); i-- > 0;) f.order.push_back(post[i]);
    }
    return f;
}

} // namespace

Cyclotomic colored_sum_F(const MtcData& mtc, const PlumbingGraph& g) {
    g.validate();
    const std::size_t n = g.vertices.size();
    const std::size_t nc = mtc.size();
    if (n == 0) return Cyclotomic::from_rational(1);

    Forest f = orient(g);

    std::vector<Cyclotomic> dim_inv(nc);
    bool need_inv = false;
    for (std::size_t i = 0; i < n; ++i)
        if (f.deg[i] >= 3) need_inv = true;
    if (need_inv)
        for (std::size_t c = 0; c < nc; ++c) dim_inv[c] = mtc.qdims[c].inverse();

    auto vertex_factor = [&](std::size_t v, std::size_t c) {
        long fr = static_cast<long>(g.vertices[v].framing);
        Cyclotomic t = mtc.twists[c].pow(fr);
        long e = 2 - static_cast<long>(f.deg[v]);
        if (e >= 0) {
            for (long i = 0; i < e; ++i) t = t * mtc.qdims[c];
        } else {
            for (long i = 0; i < -e; ++i) t = t * dim_inv[c];
        }
        return t;
    };

    std::vector<std::vector<Cyclotomic>> vec(n);
    for (auto v : f.order) {
        std::vector<Cyclotomic> cur(nc);
        for (std::size_t c = 0; c < nc; ++c) {
            Cyclotomic t = vertex_factor(v, c);
            for (auto u : f.children[v]) {
                Cyclotomic s = Cyclotomic::from_rational(0);
                for (std::size_t cu = 0; cu < nc; ++cu)
                    s = s + mtc.s_unnorm[c][cu] * vec[u][cu];
                t = t * s;
            }
            cur[c] = t;
        }
        for (auto u : f.children[v]) vec[u].clear(); // free folded children
        vec[v] = std::move(cur);
    }

    Cyclotomic total = Cyclotomic::from_rational(1);
    for (auto r : f.roots) {
        Cyclotomic s = Cyclotomic::from_rational(0);
        for (std::size_t c = 0; c < nc; ++c) s = s + vec[r][c];
        total = total * s;
    }
    return total;
}

Cyclotomic colored_sum_F_brute(const MtcData& mtc, const PlumbingGraph& g) {
    g.validate();
    const std::size_t n = g.vertices.size();
    const std::size_t nc = mtc.size();
    if (n == 0) return Cyclotomic::from_rational(1);

    std::vector<std::size_t> deg(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> eidx;
    for (const auto& e : g.edges) {
        std::size_t a = g.index_of(e.first), b = g.index_of(e.second);
        deg[a]++;
        deg[b]++;
        eidx.emplace_back(a, b);
    }
    std::vector<Cyclotomic> dim_inv(nc);
    for (std::size_t c = 0; c < nc; ++c) dim_inv[c] = mtc.qdims[c].inverse();

    Cyclotomic total = Cyclotomic::from_rational(0);
    std::vector<std::size_t> col(n, 0);
    while (true) {
        Cyclotomic term = Cyclotomic::from_rational(1);
        for (std::size_t v = 0; v < n; ++v) {
            term = term * mtc.twists[col[v]].pow(static_cast<long>(g.vertices[v].framing));
            long e = 2 - static_cast<long>(deg[v]);
            for (long i = 0; i < std::abs(e); ++i)
                term = term * (e > 0 ? mtc.qdims[col[v]] : dim_inv[col[v]]);
        }
        for (auto [a, b] : eidx) term = term * mtc.s_unnorm[col[a]][col[b]];
        total = total + term;

        std::size_t pos = 0;
        while (pos < n && ++col[pos] == nc) {
            col[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return total;
}

ColorTablesFP su2_tables_fp(unsigned k) {
    const double K = k + 2;
    const double s1 = std::sin(std::numbers::pi / K);
    ColorTablesFP t;
    t.k = k;
    t.dims.resize(k + 1);
    t.dim_inv.resize(k + 1);
    t.twists.resize(k + 1);
    t.twists_inv.resize(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        double d = std::sin((j + 1) * std::numbers::pi / K) / s1;
        t.dims[j] = d;
        t.dim_inv[j] = 1.0 / d;
        double ang = std::numbers::pi * j * (j + 2.0) / (2.0 * K);
        t.twists[j] = {std::cos(ang), std::sin(ang)};
        t.twists_inv[j] = std::conj(t.twists[j]);
    }
    t.s_unnorm.assign(k + 1, std::vector<std::complex<double>>(k + 1));
    for (unsigned i = 0; i <= k; ++i)
        for (unsigned j = 0; j <= k; ++j)
            t.s_unnorm[i][j] = std::sin((i + 1.0) * (j + 1.0) * std::numbers::pi / K) / s1;
    t.total_dim = std::sqrt(K / 2.0) / s1;
    std::complex<double> kt = 0;
    for (unsigned j = 0; j <= k; ++j) kt += t.dims[j] * t.dims[j] * t.twists[j];
    t.kappa = kt / t.total_dim;
    return t;
}

ColorTablesFP u1_tables_fp(unsigned k) {
    if (k % 2 != 0) throw std::invalid_argument("u1_tables_fp: k must be even");
    ColorTablesFP t;
    t.k = k;
    t.dims.assign(k, 1.0);
    t.dim_inv.assign(k, 1.0);
    t.twists.resize(k);
    t.twists_inv.resize(k);
    for (unsigned a = 0; a < k; ++a) {
        double ang = std::numbers::pi * static_cast<double>(a) * a / k;
        t.twists[a] = {std::cos(ang), std::sin(ang)};
        t.twists_inv[a] = std::conj(t.twists[a]);
    }
    t.s_unnorm.assign(k, std::vector<std::complex<double>>(k));
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = 0; b < k; ++b) {
            double ang = 2.0 * std::numbers::pi * static_cast<double>(a) * b / k;
            t.s_unnorm[a][b] = {std::cos(ang), std::sin(ang)};
        }
    t.total_dim = std::sqrt(static_cast<double>(k));
    std::complex<double> kt = 0;
    for (unsigned a = 0; a < k; ++a) kt += t.twists[a];
    t.kappa = kt / t.total_dim;
    return t;
}

ColorTablesFP tables_fp(Family f, unsigned k) {
    return f == Family::su2 ? su2_tables_fp(k) : u1_tables_fp(k);
}

std::complex<double> colored_sum_fp(const ColorTablesFP& t, const PlumbingGraph& g, Exec exec) {
    g.validate();
    const std::size_t n = g.vertices.size();
    const std::size_t nc = t.dims.size();
    if (n == 0) return 1.0;

    Forest f = orient(g);

    auto vertex_factor = [&](std::size_t v, std::size_t c) {
        std::int64_t fr = g.vertices[v].framing;
        std::complex<double> base = fr >= 0 ? t.twists[c] : t.twists_inv[c];
        std::complex<double> tw = 1.0;
        for (std::int64_t i = 0; i < std::abs(fr); ++i) tw *= base;
        long e = 2 - static_cast<long>(f.deg[v]);
        std::complex<double> d = 1.0;
        for (long i = 0; i < std::abs(e); ++i) d *= (e > 0 ? t.dims[c] : t.dim_inv[c]);
        return tw * d;
    };

    std::vector<std::vector<std::complex<double>>> vec(n);
    for (auto v : f.order) {
        std::vector<std::complex<double>> cur(nc);
        const bool par = exec == Exec::parallel && nc >= 32;
#pragma omp parallel for schedule(static) if (par)
        for (long long ci = 0; ci < static_cast<long long>(nc); ++ci) {
            std::size_t c = static_cast<std::size_t>(ci);
            std::complex<double> acc = vertex_factor(v, c);
            for (auto u : f.children[v]) {
                std::complex<double> s = 0;
                const auto& row = t.s_unnorm[c];
                const auto& child = vec[u];
                for (std::size_t cu = 0; cu < nc; ++cu) s += row[cu] * child[cu];
                acc *= s;
            }
            cur[c] = acc;
        }
        for (auto u : f.children[v]) vec[u].clear();
        vec[v] = std::move(cur);
    }

    std::complex<double> total = 1.0;
    for (auto r : f.roots) {
        std::complex<double> s = 0;
        for (std::size_t c = 0; c < nc; ++c) s += vec[r][c];
        total *= s;
    }
    return total;
}

namespace {

std::complex<double> kappa_power(std::complex<double> kappa, int e) {
    std::complex<double> r = 1.0;
    std::complex<double> base = e >= 0 ? kappa : std::conj(kappa); // |kappa| = 1
    for (int i = 0; i < std::abs(e); ++i) r *= base;
    return r;
}

} // namespace

RtResult rt_invariant_fp(const ColorTablesFP& t, const PlumbingGraph& g, Exec exec) {
    LinkingData ld = linking_matrix(g);
    std::complex<double> f = colored_sum_fp(t, g, exec);
    double dpow = std::pow(t.total_dim, -static_cast<double>(ld.m + 1));
    RtResult r;
    r.z = kappa_power(t.kappa, -ld.signature) * dpow * f;
    r.signature = ld.signature;
    r.b1 = ld.b1;
    r.m = ld.m;
    return r;
}

RtResult rt_invariant(const MtcData& mtc, const PlumbingGraph& g, unsigned digits) {
    LinkingData ld = linking_matrix(g);
    Cyclotomic f = colored_sum_F(mtc, g);
    std::complex<double> fe = f.eval(digits).to_complex();
    double d = mtc.total_dim(digits);
    std::complex<double> kappa = mtc.kappa(digits);
    RtResult r;
    r.z = kappa_power(kappa, -ld.signature) * std::pow(d, -static_cast<double>(ld.m + 1)) * fe;
    r.signature = ld.signature;
    r.b1 = ld.b1;
    r.m = ld.m;
    return r;
}

std::complex<double> torus_bundle_trace(const MtcData& mtc,
                                        const std::vector<TorusLetter>& word, unsigned digits) {
    CMat s = mtc.s_matrix(digits);
    CMat t = mtc.t_matrix(digits);
    CMat tinv = t.adjoint(); // T is diagonal unimodular
    CMat acc = CMat::identity(s.rows());
    for (auto l : word) {
        switch (l) {
            case TorusLetter::S: acc = acc.mul(s); break;
            case TorusLetter::T: acc = acc.mul(t); break;
            case TorusLetter::Tinv: acc = acc.mul(tinv); break;
        }
    }
    return acc.trace();
}

} // namespace wrt
