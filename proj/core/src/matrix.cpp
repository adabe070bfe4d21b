#include "clm/matrix.hpp"

#include "clm/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace clm {

std::string decimal12(const Rat& r) {
    if (r == 0) return "0";
    mpf_class f(r, 128);
    mp_exp_t exp;
    std::string digits = f.get_str(exp, 10, 12);
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') {
        neg = true;
        digits = digits.substr(1);
    }
    while (digits.size() < 12) digits += '0';
    std::ostringstream out;
    if (neg) out << '-';
    // exp = position of decimal point relative to digit string
    if (exp >= 1 && exp <= 12) {
        out << digits.substr(0, exp);
        std::string frac = digits.substr(exp);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out << '.' << frac;
    } else {
        out << digits[0];
        std::string frac = digits.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out << '.' << frac;
        out << 'e' << (exp - 1);
    }
    return out.str();
}

IMat identity_imat(std::size_t n) {
    IMat m(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    IMat out(n, IVec(c, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

IVec imat_apply(const IMat& a, const IVec& x) {
    IVec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
    return out;
}

namespace {

// One Smith elimination engine; transforms are tracked when non-null.
void snf_impl(IMat& m, IMat* u, IMat* v) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    if (u) *u = identity_imat(rows);
    if (v) *v = identity_imat(cols);
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find nonzero pivot with smallest absolute value
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (!found || abs(m[i][j]) < abs(m[pi][pj]))) {
                    pi = i; pj = j; found = true;
                }
        if (!found) break;
        std::swap(m[t], m[pi]);
        if (u) std::swap((*u)[t], (*u)[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
        if (v) for (std::size_t i = 0; i < cols; ++i) std::swap((*v)[i][t], (*v)[i][pj]);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            Int q = m[i][t] / m[t][t];
            if (q != 0) {
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (u) for (std::size_t j = 0; j < rows; ++j) (*u)[i][j] -= q * (*u)[t][j];
            }
            if (m[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            Int q = m[t][j] / m[t][t];
            if (q != 0) {
                for (std::size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (v) for (std::size_t i = 0; i < cols; ++i) (*v)[i][j] -= q * (*v)[i][t];
            }
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue; // remainder left somewhere; pick a new pivot
        // enforce divisibility of the remaining block by the pivot
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    // fold row i into row t and restart this pivot
                    for (std::size_t l = 0; l < cols; ++l) m[t][l] += m[i][l];
                    if (u) for (std::size_t l = 0; l < rows; ++l) (*u)[t][l] += (*u)[i][l];
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;
        if (m[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) m[t][j] = -m[t][j];
            if (u) for (std::size_t j = 0; j < rows; ++j) (*u)[t][j] = -(*u)[t][j];
        }
        ++t;
    }
}

} // namespace

std::vector<Int> snf_diagonal(IMat m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    snf_impl(m, nullptr, nullptr);
    std::vector<Int> d(std::min(rows, cols), 0);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = m[i][i];
    return d;
}

SnfResult snf_with_transforms(IMat m) {
    SnfResult r;
    snf_impl(m, &r.u, &r.v);
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    r.diag.assign(std::min(rows, cols), 0);
    for (std::size_t i = 0; i < r.diag.size(); ++i) r.diag[i] = m[i][i];
    return r;
}

IMat int_kernel(const IMat& m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    SnfResult s = snf_with_transforms(m);
    std::size_t rank = 0;
    for (const Int& d : s.diag)
        if (d != 0) ++rank;
    IMat out;
    // columns of v past the rank span the saturated kernel
    for (std::size_t j = rank; j < cols; ++j) {
        IVec col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = s.v[i][j];
        out.push_back(std::move(col));
    }
    return out;
}

IMat hnf_row_basis(IMat m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd-out column c below row r
        while (true) {
            std::size_t piv = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (m[i][c] != 0 && (piv == rows || abs(m[i][c]) < abs(m[piv][c]))) piv = i;
            if (piv == rows) break;
            std::swap(m[r], m[piv]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (m[r][c] != 0) {
            if (m[r][c] < 0)
                for (std::size_t j = c; j < cols; ++j) m[r][j] = -m[r][j];
            for (std::size_t i = 0; i < r; ++i) {
                Int q = m[i][c];
                mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), m[r][c].get_mpz_t());
                if (q != 0)
                    for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
            }
            ++r;
        }
    }
    m.resize(r);
    return m;
}

std::size_t imat_rank(const IMat& m) {
    QMat q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        q[i].assign(m[i].begin(), m[i].end());
    return q_rank(std::move(q));
}

Int bareiss_det(IMat m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t / prev; // exact by Bareiss
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// Returns pivot columns; m is reduced in place to RREF.
std::vector<std::size_t> rref(QMat& m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t q_rank(QMat m) { return rref(m).size(); }

QMat q_nullspace(const QMat& m) {
    QMat a = m;
    std::vector<std::size_t> piv = rref(a);
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    QMat out;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][c];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<QVec> q_solve(QMat a, QVec b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> piv = rref(a);
    QVec x(cols, Rat(0));
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == cols) return std::nullopt; // pivot in the rhs column
        x[piv[i]] = a[i][cols];
    }
    // verify (cheap insurance against inconsistent systems with no rhs pivot)
    for (std::size_t i = piv.size(); i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    return x;
}

std::vector<QVec> q_solve_all(const QMat& a, const std::vector<QVec>& rhs) {
    std::vector<QVec> out;
    out.reserve(rhs.size());
    for (const QVec& b : rhs) {
        auto x = q_solve(a, b);
        if (!x) throw SingularSystem("linear system has no solution");
        out.push_back(*x);
    }
    return out;
}

Rat q_det(QMat m) {
    std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv == n) return 0;
        if (piv != c) { std::swap(m[c], m[piv]); det = -det; }
        det *= m[c][c];
        Rat inv = m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<IVec> int_solve(const IMat& a, const IVec& b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw ParseError("int_solve dimension mismatch");
    if (rows == 0) return IVec(cols, 0);
    SnfResult s = snf_with_transforms(a);
    // u a v = diag; solve diag y = u b, then x = v y
    IVec ub(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) ub[i] += s.u[i][j] * b[j];
    IVec y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        Int d = i < s.diag.size() ? s.diag[i] : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    IVec x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) x[i] += s.v[i][j] * y[j];
    return x;
}

} // namespace clm
