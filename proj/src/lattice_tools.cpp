#include <brauer/lattice_tools.hpp>

#include <algorithm>
#include <stdexcept>

namespace brauer {

namespace {

// abs comparison helper
bool abs_less(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int round_div(const Int& a, const Int& b) {
    // nearest integer quotient, ties toward zero
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int b_abs = abs(b);
    if (r * 2 > b_abs) q += (b > 0 ? 1 : -1);
    return q;
}

}  // namespace

HermiteForm row_hnf(const IMat& a, bool with_transform) {
    const size_t m = a.rows(), n = a.cols();
    HermiteForm f;
    f.h = a;
    if (with_transform) f.u = IMat::identity(m);
    size_t p = 0;  // next pivot row
    for (size_t col = 0; col < n && p < m; ++col) {
        // gcd-reduce column entries at rows >= p
        while (true) {
            size_t best = m;
            for (size_t i = p; i < m; ++i)
                if (f.h(i, col) != 0 && (best == m || abs_less(f.h(i, col), f.h(best, col))))
                    best = i;
            if (best == m) break;  // column clear
            if (best != p) {
                f.h.swap_rows(best, p);
                if (with_transform) f.u.swap_rows(best, p);
            }
            bool clean = true;
            for (size_t i = p + 1; i < m; ++i) {
                if (f.h(i, col) == 0) continue;
                Int q = round_div(f.h(i, col), f.h(p, col));
                if (q != 0) {
                    for (size_t j = 0; j < n; ++j) f.h(i, j) -= q * f.h(p, j);
                    if (with_transform)
                        for (size_t j = 0; j < m; ++j) f.u(i, j) -= q * f.u(p, j);
                }
                if (f.h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (f.h(p, col) == 0) continue;
        if (f.h(p, col) < 0) {
            for (size_t j = 0; j < n; ++j) f.h(p, j) = -f.h(p, j);
            if (with_transform)
                for (size_t j = 0; j < m; ++j) f.u(p, j) = -f.u(p, j);
        }
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < p; ++i) {
            Int q = floor_div(f.h(i, col), f.h(p, col));
            if (q != 0) {
                for (size_t j = 0; j < n; ++j) f.h(i, j) -= q * f.h(p, j);
                if (with_transform)
                    for (size_t j = 0; j < m; ++j) f.u(i, j) -= q * f.u(p, j);
            }
        }
        ++p;
    }
    f.rank = p;
    return f;
}

SmithForm smith_normal_form(const IMat& a) {
    const size_t m = a.rows(), n = a.cols();
    SmithForm f;
    f.d = a;
    f.u = IMat::identity(m);
    f.v = IMat::identity(n);
    size_t t = 0;
    while (true) {
        // find minimal nonzero entry in the trailing block
        size_t bi = m, bj = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (f.d(i, j) != 0 && (bi == m || abs_less(f.d(i, j), f.d(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == m) break;
        if (bi != t) { f.d.swap_rows(bi, t); f.u.swap_rows(bi, t); }
        if (bj != t) { f.d.swap_cols(bj, t); f.v.swap_cols(bj, t); }

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column t
            for (size_t i = t + 1; i < m; ++i) {
                if (f.d(i, t) == 0) continue;
                Int q = round_div(f.d(i, t), f.d(t, t));
                for (size_t j = 0; j < n; ++j) f.d(i, j) -= q * f.d(t, j);
                for (size_t j = 0; j < m; ++j) f.u(i, j) -= q * f.u(t, j);
                if (f.d(i, t) != 0) {
                    // remainder smaller than pivot; promote it
                    f.d.swap_rows(i, t);
                    f.u.swap_rows(i, t);
                    dirty = true;
                }
            }
            // clear row t
            for (size_t j = t + 1; j < n; ++j) {
                if (f.d(t, j) == 0) continue;
                Int q = round_div(f.d(t, j), f.d(t, t));
                for (size_t i = 0; i < m; ++i) f.d(i, j) -= q * f.d(i, t);
                for (size_t i = 0; i < n; ++i) f.v(i, j) -= q * f.v(i, t);
                if (f.d(t, j) != 0) {
                    f.d.swap_cols(j, t);
                    f.v.swap_cols(j, t);
                    dirty = true;
                }
            }
        }
        // divisibility: pivot must divide every remaining entry
        bool restart = false;
        for (size_t i = t + 1; i < m && !restart; ++i)
            for (size_t j = t + 1; j < n && !restart; ++j)
                if (f.d(i, j) % f.d(t, t) != 0) {
                    for (size_t c = 0; c < n; ++c) f.d(t, c) += f.d(i, c);
                    for (size_t c = 0; c < m; ++c) f.u(t, c) += f.u(i, c);
                    restart = true;
                }
        if (restart) continue;
        if (f.d(t, t) < 0) {
            for (size_t j = 0; j < n; ++j) f.d(t, j) = -f.d(t, j);
            for (size_t j = 0; j < m; ++j) f.u(t, j) = -f.u(t, j);
        }
        ++t;
        if (t >= m || t >= n) break;
    }
    f.rank = t;
    return f;
}

IMat integer_kernel(const IMat& a) {
    // rows y of U with y * a^T = 0  <=>  a y^T = 0
    HermiteForm f = row_hnf(a.transpose());
    size_t n = a.cols();
    IMat ker(n - f.rank, n);
    for (size_t i = f.rank; i < n; ++i)
        for (size_t j = 0; j < n; ++j) ker(i - f.rank, j) = f.u(i, j);
    return ker;
}

std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
    SmithForm f = smith_normal_form(a);
    IVec ub = f.u * b;
    size_t n = a.cols();
    IVec y(n, Int(0));
    for (size_t i = 0; i < a.rows(); ++i) {
        if (i < f.rank) {
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ub[i].get_mpz_t(), f.d(i, i).get_mpz_t());
            if (r != 0) return std::nullopt;
            if (i < n) y[i] = q;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return f.v * y;
}

std::optional<QVec> solve_rational(const QMat& a, const QVec& b) {
    size_t m = a.rows(), n = a.cols();
    QMat w = QMat::hstack(a, QMat(m, 1));
    for (size_t i = 0; i < m; ++i) w(i, n) = b[i];
    size_t p = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < n && p < m; ++col) {
        size_t r = p;
        while (r < m && w(r, col) == 0) ++r;
        if (r == m) continue;
        w.swap_rows(r, p);
        Rat inv = 1 / w(p, col);
        for (size_t j = col; j <= n; ++j) w(p, j) *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == p || w(i, col) == 0) continue;
            Rat c = w(i, col);
            for (size_t j = col; j <= n; ++j) w(i, j) -= c * w(p, j);
        }
        pivot_col.push_back(col);
        ++p;
    }
    for (size_t i = p; i < m; ++i)
        if (w(i, n) != 0) return std::nullopt;
    QVec x(n, Rat(0));
    for (size_t i = 0; i < p; ++i) x[pivot_col[i]] = w(i, n);
    return x;
}

QMat rational_kernel(const QMat& a) {
    size_t m = a.rows(), n = a.cols();
    QMat w = a;
    size_t p = 0;
    std::vector<long> pivot_of_col(n, -1);
    for (size_t col = 0; col < n && p < m; ++col) {
        size_t r = p;
        while (r < m && w(r, col) == 0) ++r;
        if (r == m) continue;
        w.swap_rows(r, p);
        Rat inv = 1 / w(p, col);
        for (size_t j = col; j < n; ++j) w(p, j) *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == p || w(i, col) == 0) continue;
            Rat c = w(i, col);
            for (size_t j = col; j < n; ++j) w(i, j) -= c * w(p, j);
        }
        pivot_of_col[col] = (long)p;
        ++p;
    }
    std::vector<size_t> free_cols;
    for (size_t col = 0; col < n; ++col)
        if (pivot_of_col[col] < 0) free_cols.push_back(col);
    QMat ker(free_cols.size(), n);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        ker(k, fc) = 1;
        for (size_t col = 0; col < n; ++col)
            if (pivot_of_col[col] >= 0) ker(k, col) = -w((size_t)pivot_of_col[col], fc);
    }
    return ker;
}

QMat rational_inverse(const QMat& a) {
    if (a.rows() != a.cols()) throw std::runtime_error("rational_inverse: not square");
    size_t n = a.rows();
    QMat w = QMat::hstack(a, QMat::identity(n));
    for (size_t col = 0; col < n; ++col) {
        size_t r = col;
        while (r < n && w(r, col) == 0) ++r;
        if (r == n) throw std::runtime_error("rational_inverse: singular");
        w.swap_rows(r, col);
        Rat inv = 1 / w(col, col);
        for (size_t j = 0; j < 2 * n; ++j) w(col, j) *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col) == 0) continue;
            Rat c = w(i, col);
            for (size_t j = 0; j < 2 * n; ++j) w(i, j) -= c * w(col, j);
        }
    }
    QMat r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r(i, j) = w(i, n + j);
    return r;
}

Rat determinant(const QMat& a) {
    if (a.rows() != a.cols()) throw std::runtime_error("determinant: not square");
    size_t n = a.rows();
    QMat w = a;
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t r = col;
        while (r < n && w(r, col) == 0) ++r;
        if (r == n) return Rat(0);
        if (r != col) {
            w.swap_rows(r, col);
            det = -det;
        }
        det *= w(col, col);
        Rat inv = 1 / w(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (w(i, col) == 0) continue;
            Rat c = w(i, col) * inv;
            for (size_t j = col; j < n; ++j) w(i, j) -= c * w(col, j);
        }
    }
    return det;
}

Int determinant(const IMat& a) {
    Rat d = determinant(to_rational(a));
    if (d.get_den() != 1) throw std::runtime_error("integer determinant: internal");
    return d.get_num();
}

size_t rational_rank(const QMat& a) {
    return a.rows() - rational_kernel(a.transpose()).rows();
}

IMat lattice_basis(const IMat& rows) {
    HermiteForm f = row_hnf(rows, false);
    IMat b(f.rank, rows.cols());
    for (size_t i = 0; i < f.rank; ++i)
        for (size_t j = 0; j < rows.cols(); ++j) b(i, j) = f.h(i, j);
    return b;
}

bool lattice_contains(const IMat& l, const IVec& v) {
    return solve_integer(l.transpose(), v).has_value();
}

bool lattice_equal(const IMat& a, const IMat& b) {
    return lattice_basis(a) == lattice_basis(b);
}

IMat lattice_intersection(const IMat& a, const IMat& b) {
    if (a.rows() == 0 || b.rows() == 0) return IMat(0, a.cols());
    IMat stacked = IMat::vstack(a, b);
    // left kernel of stacked: rows (u | -v) with u a = v b
    IMat ker = integer_kernel(stacked.transpose());
    IMat result(ker.rows(), a.cols());
    for (size_t r = 0; r < ker.rows(); ++r)
        for (size_t j = 0; j < a.cols(); ++j) {
            Int s = 0;
            for (size_t i = 0; i < a.rows(); ++i) s += ker(r, i) * a(i, j);
            result(r, j) = s;
        }
    return lattice_basis(result);
}

IMat lattice_saturation(const IMat& rows) {
    IMat k = integer_kernel(rows);
    return integer_kernel(k);
}

std::vector<Int> quotient_invariants(const IMat& big, const IMat& small) {
    IMat bb = lattice_basis(big);
    IMat coeffs(small.rows(), bb.rows());
    for (size_t i = 0; i < small.rows(); ++i) {
        auto c = coords_in_basis(bb, small.row(i));
        if (!c) throw std::runtime_error("quotient_invariants: small not inside big");
        coeffs.set_row(i, *c);
    }
    SmithForm f = smith_normal_form(coeffs);
    std::vector<Int> inv;
    for (size_t i = 0; i < f.rank; ++i)
        if (f.d(i, i) != 1) inv.push_back(f.d(i, i));
    for (size_t i = f.rank; i < bb.rows(); ++i) inv.push_back(Int(0));
    return inv;
}

std::optional<IVec> coords_in_basis(const IMat& basis, const IVec& v) {
    return solve_integer(basis.transpose(), v);
}

}  // namespace brauer
