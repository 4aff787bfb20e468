#include "wrt/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace wrt {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat::mul: shape mismatch");
    IntMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool IntMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[a] += c * row[b]
void add_row(IntMat& m, std::size_t a, std::size_t b, const mpz_class& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}
void add_col(IntMat& m, std::size_t a, std::size_t b, const mpz_class& c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}
void negate_row(IntMat& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

} // namespace

SmithResult smith_normal_form(const IntMat& b) {
    const std::size_t n = b.rows(), m = b.cols();
    IntMat a = b;
    IntMat u = IntMat::identity(n), v = IntMat::identity(m);

    std::size_t t = 0;
    while (t < n && t < m) {
        // find a nonzero pivot of minimal absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j) {
                if (a.at(i, j) == 0) continue;
                mpz_class v2 = abs(a.at(i, j));
                if (!found || v2 < best) { found = true; best = v2; pi = i; pj = j; }
            }
        if (!found) break;
        swap_rows(a, t, pi); swap_rows(u, t, pi);
        swap_cols(a, t, pj); swap_cols(v, t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a.at(i, t) == 0) continue;
                mpz_class q = a.at(i, t) / a.at(t, t); // C++ truncation is fine with remainder fixups below
                add_row(a, i, t, -q); add_row(u, i, t, -q);
                if (a.at(i, t) != 0) { swap_rows(a, t, i); swap_rows(u, t, i); dirty = true; }
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (a.at(t, j) == 0) continue;
                mpz_class q = a.at(t, j) / a.at(t, t);
                add_col(a, j, t, -q); add_col(v, j, t, -q);
                if (a.at(t, j) != 0) { swap_cols(a, t, j); swap_cols(v, t, j); dirty = true; }
            }
        }

        // enforce divisibility d_t | trailing entries
        bool redo = false;
        for (std::size_t i = t + 1; i < n && !redo; ++i)
            for (std::size_t j = t + 1; j < m && !redo; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    add_row(a, t, i, 1); add_row(u, t, i, 1);
                    redo = true;
                }
        if (redo) continue;

        if (a.at(t, t) < 0) { negate_row(a, t); negate_row(u, t); }
        ++t;
    }

    SmithResult r;
    r.diagonal.resize(std::min(n, m));
    for (std::size_t i = 0; i < r.diagonal.size(); ++i) r.diagonal[i] = a.at(i, i);
    r.u = u;
    r.v = v;
    r.u_inv = unimodular_inverse(u);
    return r;
}

mpz_class det_bareiss(const IntMat& b) {
    if (b.rows() != b.cols()) throw std::invalid_argument("det: not square");
    const std::size_t n = b.rows();
    if (n == 0) return 1;
    IntMat a = b;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a.at(s, k) == 0) ++s;
            if (s == n) return 0;
            swap_rows(a, k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev; // exact division in Bareiss
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

SignatureResult symmetric_signature(const IntMat& b) {
    if (!b.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
    const std::size_t n = b.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = mpq_class(b.at(i, j));

    auto add_sym = [&](std::size_t dst, std::size_t src, const mpq_class& c) {
        for (std::size_t j = 0; j < n; ++j) a[dst][j] += c * a[src][j];
        for (std::size_t i = 0; i < n; ++i) a[i][dst] += c * a[i][src];
    };
    auto swap_sym = [&](std::size_t x, std::size_t y) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a[x][j], a[y][j]);
        for (std::size_t i = 0; i < n; ++i) std::swap(a[i][x], a[i][y]);
    };

    int pos = 0, neg = 0;
    std::size_t zero = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && a[k][j] == 0) ++j;
            if (j == n) { ++zero; continue; }
            if (a[j][j] != 0) swap_sym(k, j);
            else add_sym(k, j, 1); // makes a[k][k] = 2*a[k][j] != 0
        }
        const mpq_class pivot = a[k][k];
        if (pivot > 0) ++pos; else ++neg;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            mpq_class c = -a[i][k] / pivot;
            add_sym(i, k, c);
        }
    }
    return {pos - neg, zero};
}

IntMat unimodular_inverse(const IntMat& u) {
    // Gauss-Jordan over the rationals, then check integrality.
    const std::size_t n = u.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(u.at(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw std::invalid_argument("unimodular_inverse: singular");
        std::swap(a[k], a[p]);
        mpq_class piv = a[k][k];
        for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            mpq_class c = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= c * a[k][j];
        }
    }
    IntMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class q = a[i][n + j];
            if (q.get_den() != 1) throw std::logic_error("unimodular_inverse: non-integer entry");
            inv.at(i, j) = q.get_num();
        }
    return inv;
}

} // namespace wrt
