#include "stratumforge/intmat.hpp"
#include "stratumforge/errors.hpp"

#include <algorithm>

namespace stratumforge {

IMat imat_zero(int rows, int cols) { return IMat(rows, std::vector<Int>(cols, 0)); }

IMat imat_identity(int n) {
    IMat m = imat_zero(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    int n = (int)a.size(), k = (int)b.size(), m = k ? (int)b[0].size() : 0;
    IMat c = imat_zero(n, m);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

IMat imat_transpose(const IMat& a) {
    int n = (int)a.size(), m = n ? (int)a[0].size() : 0;
    IMat t = imat_zero(m, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

IMat hnf_rows(IMat m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // gcd out column c below row r
        while (true) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (m[i][c] != 0 && (piv < 0 || abs(m[i][c]) < abs(m[piv][c]))) piv = i;
            if (piv < 0) break;
            std::swap(m[r], m[piv]);
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];
                for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(m[i][c], m[r][c]);
            if (q != 0)
                for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

int rank_q(QMat m) {
    int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<Int>> kernel_z(const IMat& m) {
    // Column-style HNF: find unimodular V with M V = [H | 0]; kernel basis is
    // the columns of V over the zero block. Work on the transpose with row ops.
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    if (!rows || !cols) {
        std::vector<std::vector<Int>> basis;
        for (int j = 0; j < cols; ++j) {
            std::vector<Int> e(cols, 0);
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    IMat t = imat_transpose(m);          // cols x rows
    IMat v = imat_identity(cols);        // tracks row ops on t
    int r = 0;
    for (int c = 0; c < rows && r < cols; ++c) {
        while (true) {
            int piv = -1;
            for (int i = r; i < cols; ++i)
                if (t[i][c] != 0 && (piv < 0 || abs(t[i][c]) < abs(t[piv][c]))) piv = i;
            if (piv < 0) break;
            std::swap(t[r], t[piv]);
            std::swap(v[r], v[piv]);
            bool clean = true;
            for (int i = r + 1; i < cols; ++i) {
                if (t[i][c] == 0) continue;
                Int q = t[i][c] / t[r][c];
                for (int j = 0; j < rows; ++j) t[i][j] -= q * t[r][j];
                for (int j = 0; j < cols; ++j) v[i][j] -= q * v[r][j];
                if (t[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (t[r][c] != 0) ++r;
    }
    std::vector<std::vector<Int>> basis;
    for (int i = r; i < cols; ++i) basis.push_back(v[i]);
    return basis;
}

Snf snf(const IMat& m0) {
    Snf s;
    s.d = m0;
    int rows = (int)m0.size(), cols = rows ? (int)m0[0].size() : 0;
    s.p = imat_identity(rows);
    s.q = imat_identity(cols);
    auto& d = s.d;
    int t = 0;
    while (t < rows && t < cols) {
        // find a pivot
        int pi = -1, pj = -1;
        for (int i = t; i < rows && pi < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (d[i][j] != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        std::swap(d[t], d[pi]);
        std::swap(s.p[t], s.p[pi]);
        for (int i = 0; i < rows; ++i) std::swap(d[i][t], d[i][pj]);
        for (int i = 0; i < cols; ++i) std::swap(s.q[i][t], s.q[i][pj]);
        bool again = true;
        while (again) {
            again = false;
            // clear column t
            for (int i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0) continue;
                Int q = d[i][t] / d[t][t];
                for (int j = 0; j < cols; ++j) d[i][j] -= q * d[t][j];
                for (int j = 0; j < rows; ++j) s.p[i][j] -= q * s.p[t][j];
                if (d[i][t] != 0) {
                    std::swap(d[t], d[i]);
                    std::swap(s.p[t], s.p[i]);
                    again = true;
                }
            }
            // clear row t
            for (int j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0) continue;
                Int q = d[t][j] / d[t][t];
                for (int i = 0; i < rows; ++i) d[i][j] -= q * d[i][t];
                for (int i = 0; i < cols; ++i) s.q[i][j] -= q * s.q[i][t];
                if (d[t][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(d[i][t], d[i][j]);
                    for (int i = 0; i < cols; ++i) std::swap(s.q[i][t], s.q[i][j]);
                    again = true;
                }
            }
        }
        if (d[t][t] < 0) {
            for (int j = 0; j < cols; ++j) d[t][j] = -d[t][j];
            for (int j = 0; j < rows; ++j) s.p[t][j] = -s.p[t][j];
        }
        ++t;
    }
    // divisibility chain is not needed by callers; entries are nonzero up to
    // the rank and zero after, which is all the quotient computation uses.
    return s;
}

bool solve_z(const IMat& m, const std::vector<Int>& b, std::vector<Int>& x) {
    int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
    Snf s = snf(m);
    // m = p^-1 d q^-1, solve d y = p b, then x = q y
    std::vector<Int> pb(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) pb[i] += s.p[i][j] * b[j];
    std::vector<Int> y(cols, 0);
    int t = std::min(rows, cols);
    for (int i = 0; i < rows; ++i) {
        Int di = (i < t) ? s.d[i][i] : Int(0);
        if (di == 0) {
            if (pb[i] != 0) return false;
        } else {
            if (pb[i] % di != 0) return false;
            y[i] = pb[i] / di;
        }
    }
    x.assign(cols, 0);
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j) x[i] += s.q[i][j] * y[j];
    return true;
}

std::vector<Rat> reduce_mod_lattice(const std::vector<Rat>& v, const QMat& basis) {
    // solve v = basis^T * c, subtract floor(c) * rows
    int n = (int)v.size();
    if ((int)basis.size() != n) fail(Errc::Internal, "lattice basis size");
    // Gaussian solve over Q: coordinates c with sum_i c_i * basis[i] = v
    QMat a(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = basis[j][i];
        a[i][n] = v[i];
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) fail(Errc::RankDeficient, "lattice basis singular");
        std::swap(a[c], a[piv]);
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (int j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rat> out = v;
    for (int i = 0; i < n; ++i) {
        Rat ci = a[i][n] / a[i][i];
        Int fl = floor_rat(ci);
        if (fl != 0)
            for (int j = 0; j < n; ++j) out[j] -= Rat(fl) * basis[i][j];
    }
    return out;
}

} // namespace stratumforge
