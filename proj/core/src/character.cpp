#include "clm/character.hpp"

#include "clm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace clm {

namespace {

long mod_pow(long b, long e, long p) {
    long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long mod_inv(long a, long p) { return mod_pow((a % p + p) % p, p - 2, p); }

long primitive_root(long p) {
    std::vector<long> prime_factors;
    long m = p - 1;
    for (long q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            prime_factors.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long z = 2; z < p; ++z) {
        bool ok = true;
        for (long q : prime_factors)
            if (mod_pow(z, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return z;
    }
    throw InvariantViolated("no primitive root found");
}

using FpMat = std::vector<std::vector<long>>;

// kernel basis (as rows) of an r x c matrix over F_p
FpMat fp_kernel(FpMat m, long p) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] % p != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        long inv = mod_inv(m[r][c], p);
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            long f = m[i][c] % p;
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(cols, false);
    for (std::size_t c : pivots) is_piv[c] = true;
    FpMat out;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        std::vector<long> v(cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = (p - m[i][c] % p) % p;
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

Rat CharacterTable::inner(const std::vector<CycElt>& a,
                          const std::vector<CycElt>& b) const {
    CycElt acc = ring->zero();
    for (int j = 0; j < num_classes(); ++j) {
        CycElt term = ring->mul(a[j], b[inverse_class[j]]);
        acc = ring->add(acc, ring->scale(term, Rat(static_cast<long>(classes[j].members.size()))));
    }
    Rat r = ring->to_rat(acc); // inner products of characters are rational
    return r / Rat(group->size());
}

std::vector<CycElt> CharacterTable::rational_class_function(
    const std::vector<Rat>& v) const {
    std::vector<CycElt> out;
    for (const Rat& r : v) out.push_back(ring->from_rat(r));
    return out;
}

CharacterTable character_table(const Group& g) {
    if (g.size() > kGroupCap) throw CapExceeded("group too large for character table");
    CharacterTable t;
    t.group = &g;
    t.exponent = g.exponent();
    t.ring = std::make_shared<CycRing>(t.exponent);
    t.classes = conjugacy_classes(g);
    int k = t.num_classes();
    t.class_of.assign(g.size(), -1);
    for (int j = 0; j < k; ++j)
        for (int m : t.classes[j].members) t.class_of[m] = j;
    t.inverse_class.assign(k, -1);
    for (int j = 0; j < k; ++j)
        t.inverse_class[j] = t.class_of[g.inverse(t.classes[j].rep)];

    // Dixon prime: p = 1 (mod exponent), p > 2*sqrt(|G|)
    long e = t.exponent, n = g.size();
    long p = e + 1;
    auto is_prime = [](long x) {
        if (x < 2) return false;
        for (long d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    };
    while (!(is_prime(p) && static_cast<double>(p) > 2.0 * std::sqrt(double(n))))
        p += e;

    // class algebra structure constants: a[i][j][l] with C_i C_j = sum a C_l
    std::vector<std::vector<std::vector<long>>> a(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            a[t.class_of[x]][t.class_of[y]][t.class_of[g.op(x, y)]] += 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                a[i][j][l] /= static_cast<long>(t.classes[l].members.size());

    // common eigenvectors over F_p; subspaces stored as lists of k-vectors
    // (columns of the ambient space)
    std::vector<FpMat> subspaces;
    {
        FpMat full;
        for (int i = 0; i < k; ++i) {
            std::vector<long> ei(k, 0);
            ei[i] = 1;
            full.push_back(std::move(ei));
        }
        subspaces.push_back(std::move(full));
    }
    for (int i = 0; i < k; ++i) {
        // matrix of M_i: (M_i)_{jl} = a[i][j][l], acting on column vectors w:
        // (M_i w)_j = sum_l a[i][j][l] w_l
        bool all_done = true;
        for (const FpMat& s : subspaces)
            if (s.size() > 1) all_done = false;
        if (all_done) break;
        std::vector<FpMat> next;
        for (FpMat& s : subspaces) {
            if (s.size() <= 1) { next.push_back(std::move(s)); continue; }
            std::size_t d = s.size();
            // images: M_i applied to each basis vector
            FpMat img(d, std::vector<long>(k, 0));
            for (std::size_t b = 0; b < d; ++b)
                for (int j = 0; j < k; ++j) {
                    long acc = 0;
                    for (int l = 0; l < k; ++l)
                        acc = (acc + a[i][j][l] % p * s[b][l]) % p;
                    img[b][j] = acc;
                }
            std::size_t claimed = 0;
            for (long lam = 0; lam < p && claimed < d; ++lam) {
                // kernel of (M_i - lam) restricted: rows c with
                // sum_b c_b (img[b] - lam s[b]) = 0
                FpMat sys(k, std::vector<long>(d, 0));
                for (int j = 0; j < k; ++j)
                    for (std::size_t b = 0; b < d; ++b)
                        sys[j][b] = ((img[b][j] - lam * s[b][j]) % p + p) % p;
                FpMat ker = fp_kernel(std::move(sys), p);
                if (ker.empty()) continue;
                FpMat sub;
                for (const auto& c : ker) {
                    std::vector<long> v(k, 0);
                    for (std::size_t b = 0; b < d; ++b)
                        for (int j = 0; j < k; ++j)
                            v[j] = (v[j] + c[b] * s[b][j]) % p;
                    sub.push_back(std::move(v));
                }
                claimed += sub.size();
                next.push_back(std::move(sub));
            }
            if (claimed != d)
                throw InvariantViolated("class matrix not diagonalizable mod p");
        }
        subspaces = std::move(next);
    }
    if (subspaces.size() != static_cast<std::size_t>(k))
        throw InvariantViolated("eigenspace splitting incomplete");

    long z = primitive_root(p);
    long xi_e = mod_pow(z, (p - 1) / e, p);

    // power-of-representative class map
    std::vector<std::vector<int>> pow_class(k);
    for (int j = 0; j < k; ++j) {
        int o = g.order_of(t.classes[j].rep);
        pow_class[j].resize(o);
        for (int s = 0; s < o; ++s)
            pow_class[j][s] = t.class_of[g.power(t.classes[j].rep, s)];
    }

    std::vector<std::pair<Int, std::vector<CycElt>>> built;
    for (const FpMat& s : subspaces) {
        std::vector<long> w = s[0];
        long w0 = w[0]; // identity class is index 0
        if (w0 % p == 0) throw InvariantViolated("degenerate eigenvector");
        long inv0 = mod_inv(w0, p);
        for (long& x : w) x = x * inv0 % p;
        // chi(1)^2 = |G| / sum_j w_j w_{j*} / |C_j|
        long S = 0;
        for (int j = 0; j < k; ++j) {
            long cj = static_cast<long>(t.classes[j].members.size());
            S = (S + w[j] * w[t.inverse_class[j]] % p * mod_inv(cj, p)) % p;
        }
        long target = n % p * mod_inv(S, p) % p;
        long deg = -1;
        for (long d = 1; d * d <= n; ++d)
            if (d * d % p == target) { deg = d; break; }
        if (deg < 0) throw InvariantViolated("no degree matches eigenvector");
        // chi mod p on each class
        std::vector<long> chi(k);
        for (int j = 0; j < k; ++j) {
            long cj = static_cast<long>(t.classes[j].members.size());
            chi[j] = w[j] * deg % p * mod_inv(cj, p) % p;
        }
        // lift to cyclotomic values via eigenvalue multiplicities
        std::vector<CycElt> row(k, t.ring->zero());
        for (int j = 0; j < k; ++j) {
            int o = g.order_of(t.classes[j].rep);
            long xi_o = mod_pow(xi_e, e / o, p);
            CycElt val = t.ring->zero();
            for (int tt = 0; tt < o; ++tt) {
                long m = 0;
                for (int ss = 0; ss < o; ++ss)
                    m = (m + chi[pow_class[j][ss]] *
                                 mod_pow(mod_inv(xi_o, p),
                                         static_cast<long>(ss) * tt % o, p)) % p;
                m = m * mod_inv(o, p) % p;
                if (m > deg)
                    throw InvariantViolated("eigenvalue multiplicity out of range");
                if (m != 0)
                    val = t.ring->add(
                        val, t.ring->scale(t.ring->root_power(
                                               static_cast<long>(e / o) * tt),
                                           Rat(m)));
            }
            row[j] = std::move(val);
        }
        built.emplace_back(Int(deg), std::move(row));
    }
    // canonical order: degree, then lexicographic on coordinates
    std::sort(built.begin(), built.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        for (std::size_t j = 0; j < x.second.size(); ++j)
            for (std::size_t c = 0; c < x.second[j].size(); ++c) {
                if (x.second[j][c] != y.second[j][c])
                    return x.second[j][c] < y.second[j][c];
            }
        return false;
    });
    Int degsum = 0;
    for (auto& [d, row] : built) {
        t.degrees.push_back(d);
        t.rows.push_back(std::move(row));
        degsum += d * d;
    }
    if (degsum != g.size())
        throw InvariantViolated("degree sum check failed");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (t.inner_rows(i, j) != Rat(i == j ? 1 : 0))
                throw InvariantViolated("character rows not orthonormal");
    return t;
}

} // namespace clm
