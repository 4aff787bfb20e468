#include "wrt/homology.hpp"

#include <stdexcept>

namespace wrt {

namespace {

mpq_class mod1(mpq_class q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    q -= mpq_class(fl);
    return q;
}

} // namespace

HomologyData homology_data(const IntMat& b, unsigned k) {
    if (!b.is_symmetric()) throw std::invalid_argument("homology_data: B must be symmetric");
    if (k == 0) throw std::invalid_argument("homology_data: k must be positive");
    const std::size_t m = b.rows();
    HomologyData h;
    SmithResult s = smith_normal_form(b);
    // sort: nonzero first (SNF already yields divisibility order, zeros last)
    h.smith_diagonal = s.diagonal;
    h.b1 = 0;
    std::vector<std::size_t> tor_idx;
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
        if (s.diagonal[i] == 0) ++h.b1;
        else if (s.diagonal[i] > 1) {
            h.torsion.push_back(s.diagonal[i]);
            tor_idx.push_back(i);
        }
    }
    h.b1 += m - s.diagonal.size(); // non-square never happens here, kept for shape safety

    for (const auto& d : h.torsion) {
        mpz_class g;
        mpz_class kk(static_cast<long>(k));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), kk.get_mpz_t());
        if (g > 1) h.h1_mod_k.push_back(g);
    }
    for (std::size_t i = 0; i < h.b1; ++i) h.h1_mod_k.push_back(mpz_class(static_cast<long>(k)));

    // Torsion generators g_i = U^{-1} e_i; B (V e_i) = d_i g_i exactly, so
    // lambda(g_i, g_j) = -(1/d_j) (U^{-1} e_i . V e_j) mod 1.
    const std::size_t nt = tor_idx.size();
    h.linking_form.assign(nt, std::vector<mpq_class>(nt));
    for (std::size_t a = 0; a < nt; ++a)
        for (std::size_t c = 0; c < nt; ++c) {
            std::size_t i = tor_idx[a], j = tor_idx[c];
            mpz_class dot = 0;
            for (std::size_t r = 0; r < m; ++r)
                dot += s.u_inv.at(r, i) * s.v.at(r, j);
            mpq_class lam = mpq_class(-dot, s.diagonal[j]);
            lam.canonicalize();
            h.linking_form[a][c] = mod1(lam);
        }
    // symmetry sanity (mod 1)
    for (std::size_t a = 0; a < nt; ++a)
        for (std::size_t c = a + 1; c < nt; ++c)
            if (h.linking_form[a][c] != h.linking_form[c][a])
                throw std::logic_error("homology_data: linking form not symmetric mod 1");
    return h;
}

} // namespace wrt
