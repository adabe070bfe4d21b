#pragma once

#include "clm/rational.hpp"

#include <vector>

namespace clm {

// Exact arithmetic in Q(zeta_n) on the power basis 1, zeta, ..., zeta^{d-1}
// with d = phi(n); elements reduced modulo the n-th cyclotomic polynomial so
// representations are canonical and equality is coordinate equality.
using CycElt = std::vector<Rat>;

class CycRing {
public:
    explicit CycRing(int level);

    int level() const { return n_; }
    int degree() const { return deg_; }

    CycElt zero() const { return CycElt(deg_, Rat(0)); }
    CycElt one() const { return from_rat(1); }
    CycElt from_rat(const Rat& r) const;
    CycElt root_power(long k) const; // zeta^k, reduced

    CycElt add(const CycElt& a, const CycElt& b) const;
    CycElt sub(const CycElt& a, const CycElt& b) const;
    CycElt mul(const CycElt& a, const CycElt& b) const;
    CycElt scale(const CycElt& a, const Rat& r) const;
    // Galois action zeta -> zeta^t, gcd(t, n) = 1.
    CycElt galois(const CycElt& a, long t) const;
    CycElt conj(const CycElt& a) const { return galois(a, n_ - 1); }

    bool is_zero(const CycElt& a) const;
    bool is_rational(const CycElt& a) const;
    Rat to_rat(const CycElt& a) const; // requires is_rational

    // units of Z/n, the Galois group indices
    std::vector<long> galois_exponents() const;

private:
    int n_;
    int deg_;
    std::vector<CycElt> pow_reduced_; // zeta^j reduced, j in [0, n)
};

// Integer coefficient vector of the n-th cyclotomic polynomial (low->high).
std::vector<Int> cyclotomic_polynomial(int n);

} // namespace clm
