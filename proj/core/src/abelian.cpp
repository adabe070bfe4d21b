#include "clm/abelian.hpp"

#include "clm/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace clm {

Int OpModule::size() const {
    Int s = 1;
    for (const Int& d : orders) s *= d;
    return s;
}

void OpModule::validate() const {
    int n = ngens();
    for (const Int& d : orders)
        if (d < 2) throw InvariantViolated("cyclic order below 2");
    for (const IMat& p : ops) {
        if (static_cast<int>(p.size()) != n)
            throw InvariantViolated("operator size mismatch");
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(p[i].size()) != n)
                throw InvariantViolated("operator size mismatch");
            for (int j = 0; j < n; ++j)
                if ((p[i][j] * orders[j]) % orders[i] != 0)
                    throw InvariantViolated("operator not well-defined mod orders");
        }
    }
}

std::vector<Int> invariant_factors(const std::vector<Int>& orders) {
    // exponent lists per prime, then zip largest-with-largest
    std::map<Int, std::vector<long>> exps;
    for (Int d : orders) {
        for (Int p = 2; p * p <= d; ++p) {
            if (!mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) continue;
            long e = 0;
            while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) { d /= p; ++e; }
            exps[p].push_back(e);
        }
        if (d > 1) exps[d].push_back(1);
    }
    std::size_t len = 0;
    for (auto& [p, v] : exps) {
        std::sort(v.rbegin(), v.rend());
        len = std::max(len, v.size());
    }
    std::vector<Int> chain(len, Int(1));
    for (auto& [p, v] : exps)
        for (std::size_t i = 0; i < v.size(); ++i)
            chain[i] *= pow_int(p, static_cast<unsigned long>(v[i]));
    std::reverse(chain.begin(), chain.end()); // ascending, d1 | d2 | ...
    return chain;
}

ModuleTable::ModuleTable(const OpModule& m, long cap) : m_(&m) {
    Int s = m.size();
    if (s > cap) throw TooLarge("module of order " + s.get_str() + " exceeds table cap");
    n_ = s.get_si();
    radix_.reserve(m.orders.size());
    for (const Int& d : m.orders) radix_.push_back(d.get_si());
    op_table_.assign(m.ops.size(), std::vector<long>(n_));
    for (std::size_t k = 0; k < m.ops.size(); ++k)
        for (long a = 0; a < n_; ++a) {
            std::vector<long> e = element(a), out(radix_.size(), 0);
            for (std::size_t i = 0; i < radix_.size(); ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < radix_.size(); ++j)
                    acc += m.ops[k][i][j] * e[j];
                Int r = acc % radix_[i];
                if (r < 0) r += radix_[i];
                out[i] = r.get_si();
            }
            op_table_[k][a] = index(out);
        }
}

std::vector<long> ModuleTable::element(long idx) const {
    std::vector<long> e(radix_.size());
    for (std::size_t i = 0; i < radix_.size(); ++i) {
        e[i] = idx % radix_[i];
        idx /= radix_[i];
    }
    return e;
}

long ModuleTable::index(const std::vector<long>& e) const {
    long idx = 0;
    for (std::size_t i = radix_.size(); i-- > 0;) idx = idx * radix_[i] + e[i];
    return idx;
}

long ModuleTable::add(long a, long b) const {
    std::vector<long> x = element(a), y = element(b);
    for (std::size_t i = 0; i < radix_.size(); ++i) x[i] = (x[i] + y[i]) % radix_[i];
    return index(x);
}

long ModuleTable::neg(long a) const {
    std::vector<long> x = element(a);
    for (std::size_t i = 0; i < radix_.size(); ++i) x[i] = (radix_[i] - x[i]) % radix_[i];
    return index(x);
}

long ModuleTable::apply_op(std::size_t k, long a) const { return op_table_[k][a]; }

long ModuleTable::order_of(long a) const {
    long o = 1, x = a;
    while (x != 0) { x = add(x, a); ++o; }
    return o;
}

std::vector<long> span_elements(const ModuleTable& t, std::vector<long> gens) {
    std::set<long> cl{0};
    std::vector<long> frontier{0};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long x : frontier)
            for (long g : gens) {
                long y = t.add(x, g);
                if (cl.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return std::vector<long>(cl.begin(), cl.end());
}

namespace {

// subgroup S (sorted) extended by one element x not in S
std::vector<long> extend_subgroup(const ModuleTable& t, const std::vector<long>& s, long x) {
    std::set<long> out(s.begin(), s.end());
    long cur = x;
    while (!std::binary_search(s.begin(), s.end(), cur)) {
        for (long e : s) out.insert(t.add(e, cur));
        cur = t.add(cur, x);
    }
    return std::vector<long>(out.begin(), out.end());
}

bool subgroup_stable(const ModuleTable& t, const std::vector<long>& s) {
    for (std::size_t k = 0; k < t.module().ops.size(); ++k)
        for (long e : s)
            if (!std::binary_search(s.begin(), s.end(), t.apply_op(k, e))) return false;
    return true;
}

} // namespace

std::vector<std::vector<long>> module_subgroups(const ModuleTable& t, bool stable_only) {
    std::set<std::vector<long>> found;
    found.insert({0});
    std::vector<std::vector<long>> frontier{{0}};
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& s : frontier)
            for (long x = 1; x < t.size(); ++x) {
                if (std::binary_search(s.begin(), s.end(), x)) continue;
                std::vector<long> big = extend_subgroup(t, s, x);
                if (found.insert(big).second) next.push_back(std::move(big));
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<long>> out;
    for (const auto& s : found)
        if (!stable_only || subgroup_stable(t, s)) out.push_back(s);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

OpModule submodule_structure(const OpModule& b,
                             const std::vector<std::vector<long>>& gens) {
    int n = b.ngens();
    if (n == 0) return b; // zero module: only the zero subgroup
    // column lattice spanned by generators and the relation diagonal
    IMat rows; // transposed columns
    for (const auto& g : gens) {
        IVec r(n);
        for (int i = 0; i < n; ++i) r[i] = g[i];
        rows.push_back(std::move(r));
    }
    for (int i = 0; i < n; ++i) {
        IVec r(n, 0);
        r[i] = b.orders[i];
        rows.push_back(std::move(r));
    }
    IMat basis_rows = hnf_row_basis(std::move(rows)); // n x n, full rank
    if (static_cast<int>(basis_rows.size()) != n)
        throw InvariantViolated("degenerate subgroup lattice");
    // C: columns are the lattice basis
    QMat c(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i][j] = Rat(basis_rows[j][i]);
    auto solve_integral = [&](const QVec& rhs) {
        auto x = q_solve(c, rhs);
        if (!x) throw InvariantViolated("singular lattice basis");
        IVec out(n);
        for (int i = 0; i < n; ++i) {
            if (!is_integral((*x)[i]))
                throw NotASubgroup("set is not operator-stable");
            out[i] = (*x)[i].get_num();
        }
        return out;
    };
    // R = C^{-1} diag(orders)
    IMat r(n, IVec(n));
    for (int j = 0; j < n; ++j) {
        QVec rhs(n, Rat(0));
        rhs[j] = Rat(b.orders[j]);
        IVec col = solve_integral(rhs);
        for (int i = 0; i < n; ++i) r[i][j] = col[i];
    }
    SnfResult s = snf_with_transforms(r);
    // induced operators: Q'' = U (C^{-1} Q C) U^{-1}
    IMat uinv;
    {
        QMat uq(n, QVec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) uq[i][j] = Rat(s.u[i][j]);
        uinv.assign(n, IVec(n));
        for (int j = 0; j < n; ++j) {
            QVec rhs(n, Rat(0));
            rhs[j] = 1;
            auto x = q_solve(uq, rhs);
            for (int i = 0; i < n; ++i) uinv[i][j] = (*x)[i].get_num();
        }
    }
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (s.diag[i] > 1) keep.push_back(i);
    OpModule out;
    for (int i : keep) out.orders.push_back(s.diag[i]);
    for (const IMat& q : b.ops) {
        // C^{-1} Q C, column by column
        IMat qp(n, IVec(n));
        for (int j = 0; j < n; ++j) {
            QVec rhs(n, Rat(0));
            for (int i = 0; i < n; ++i) {
                Rat acc(0);
                for (int l = 0; l < n; ++l) acc += Rat(q[i][l]) * c[l][j];
                rhs[i] = acc;
            }
            IVec col = solve_integral(rhs);
            for (int i = 0; i < n; ++i) qp[i][j] = col[i];
        }
        IMat qz = imat_mul(imat_mul(s.u, qp), uinv);
        IMat sub(keep.size(), IVec(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j) {
                Int v = qz[keep[i]][keep[j]] % out.orders[i];
                if (v < 0) v += out.orders[i];
                sub[i][j] = v;
            }
        out.ops.push_back(std::move(sub));
    }
    out.validate();
    return out;
}

Int count_hom_op(const OpModule& a, const OpModule& b) {
    if (a.is_zero() || b.is_zero()) return 1;
    int na = a.ngens(), nb = b.ngens();
    // Hom_ab = direct sum over (i,j) of Z/g_ij with generator (dB_i/g_ij) E_ij
    std::vector<Int> g(nb * na), tmul(nb * na);
    Int hsize = 1;
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < na; ++j) {
            Int gg = gcd(b.orders[i], a.orders[j]);
            g[i * na + j] = gg;
            tmul[i * na + j] = b.orders[i] / gg;
            hsize *= gg;
        }
    if (a.ops.empty()) return hsize;
    if (a.ops.size() != b.ops.size())
        throw InvariantViolated("operator signature mismatch");
    // constraint map into sum over (k, r, c) of Z/dB_r
    std::size_t nt = a.ops.size() * static_cast<std::size_t>(nb) * na;
    std::size_t ng = static_cast<std::size_t>(nb) * na;
    IMat m(nt, IVec(ng + nt, 0));
    std::vector<Int> mods(nt);
    std::size_t row = 0;
    for (std::size_t k = 0; k < a.ops.size(); ++k)
        for (int r = 0; r < nb; ++r)
            for (int c = 0; c < na; ++c, ++row) {
                mods[row] = b.orders[r];
                for (int i = 0; i < nb; ++i)
                    for (int j = 0; j < na; ++j) {
                        Int coeff = 0;
                        if (i == r) coeff += a.ops[k][j][c];
                        if (j == c) coeff -= b.ops[k][r][i];
                        if (coeff != 0)
                            m[row][i * na + j] = tmul[i * na + j] * coeff;
                    }
                m[row][ng + row] = mods[row];
            }
    std::vector<Int> diag = snf_diagonal(std::move(m));
    Int coker = 1;
    for (const Int& d : diag) coker *= d; // full column rank: no zero diags
    Int target = 1;
    for (const Int& d : mods) target *= d;
    Int image = target / coker;
    return hsize / image;
}

std::vector<Int> lattice_moebius_to_top(const std::vector<std::vector<long>>& lattice) {
    std::size_t n = lattice.size();
    // bitsets for containment tests
    long maxel = 0;
    for (const auto& s : lattice)
        for (long e : s) maxel = std::max(maxel, e);
    std::size_t words = static_cast<std::size_t>(maxel / 64 + 1);
    std::vector<std::vector<uint64_t>> bits(n, std::vector<uint64_t>(words, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (long e : lattice[i])
            bits[i][static_cast<std::size_t>(e / 64)] |= uint64_t(1) << (e % 64);
    auto subset = [&](std::size_t a, std::size_t b) {
        for (std::size_t w = 0; w < words; ++w)
            if (bits[a][w] & ~bits[b][w]) return false;
        return true;
    };
    std::vector<Int> mu(n, 0);
    mu[n - 1] = 1; // top (lattice is sorted ascending by size)
    for (std::size_t i = n - 1; i-- > 0;) {
        Int acc = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (lattice[j].size() > lattice[i].size() && subset(i, j)) acc += mu[j];
        mu[i] = -acc;
    }
    return mu;
}

Int count_sur_op(const OpModule& a, const OpModule& b) {
    if (b.is_zero()) return 1;
    ModuleTable t(b, 1 << 14);
    std::vector<std::vector<long>> lattice = module_subgroups(t, true);
    std::vector<Int> mu = lattice_moebius_to_top(lattice);
    Int acc = 0;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (mu[i] == 0) continue;
        std::vector<std::vector<long>> gens;
        for (long e : lattice[i]) gens.push_back(t.element(e));
        OpModule sub = submodule_structure(b, gens);
        acc += mu[i] * count_hom_op(a, sub);
    }
    return acc;
}

Int count_aut_op(const OpModule& b) { return count_sur_op(b, b); }

bool modules_isomorphic_op(const OpModule& a, const OpModule& b) {
    if (a.size() != b.size()) return false;
    if (a.ops.size() != b.ops.size()) return false;
    if (a.is_zero()) return true;
    return count_sur_op(a, b) > 0;
}

} // namespace clm
