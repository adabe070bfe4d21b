#include "clm/cyclotomic.hpp"

#include "clm/errors.hpp"

#include <map>
#include <numeric>

namespace clm {

namespace {

// exact division of polynomials over Z (low->high), remainder must vanish
std::vector<Int> poly_divide(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> q(num.size() - den.size() + 1, Int(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[i + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw InvariantViolated("inexact polynomial division");
    return q;
}

} // namespace

std::vector<Int> cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<Int>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Int> poly(n + 1, Int(0));
    poly[0] = -1;
    poly[n] = 1; // x^n - 1
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Int> phi_d = cyclotomic_polynomial(d);
        poly = poly_divide(std::move(poly), phi_d);
    }
    cache[n] = poly;
    return poly;
}

CycRing::CycRing(int level) : n_(level) {
    if (n_ < 1) throw InvariantViolated("cyclotomic level must be positive");
    std::vector<Int> phi = cyclotomic_polynomial(n_);
    deg_ = static_cast<int>(phi.size()) - 1;
    // power table: reduce zeta^j modulo phi for j in [0, n)
    pow_reduced_.assign(n_, CycElt(deg_, Rat(0)));
    // start from x^j and reduce by the monic phi
    for (int j = 0; j < n_; ++j) {
        std::vector<Rat> cur(j + 1, Rat(0));
        cur[j] = 1;
        for (std::size_t i = cur.size(); i-- > static_cast<std::size_t>(deg_);) {
            Rat c = cur[i];
            if (c == 0) continue;
            cur[i] = 0;
            for (int k = 0; k < deg_; ++k)
                cur[i - deg_ + k] -= c * Rat(phi[k]);
        }
        for (int k = 0; k < deg_ && k < static_cast<int>(cur.size()); ++k)
            pow_reduced_[j][k] = cur[k];
    }
}

CycElt CycRing::from_rat(const Rat& r) const {
    CycElt e(deg_, Rat(0));
    e[0] = r;
    return e;
}

CycElt CycRing::root_power(long k) const {
    k %= n_;
    if (k < 0) k += n_;
    return pow_reduced_[k];
}

CycElt CycRing::add(const CycElt& a, const CycElt& b) const {
    CycElt out(deg_);
    for (int i = 0; i < deg_; ++i) out[i] = a[i] + b[i];
    return out;
}

CycElt CycRing::sub(const CycElt& a, const CycElt& b) const {
    CycElt out(deg_);
    for (int i = 0; i < deg_; ++i) out[i] = a[i] - b[i];
    return out;
}

CycElt CycRing::mul(const CycElt& a, const CycElt& b) const {
    // exponents of the raw product stay below 2*deg <= 2n; fold mod n first
    std::vector<Rat> conv(n_, Rat(0));
    for (int i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < deg_; ++j) {
            if (b[j] == 0) continue;
            conv[(i + j) % n_] += a[i] * b[j];
        }
    }
    CycElt out(deg_, Rat(0));
    for (int j = 0; j < n_; ++j) {
        if (conv[j] == 0) continue;
        for (int k = 0; k < deg_; ++k) out[k] += conv[j] * pow_reduced_[j][k];
    }
    return out;
}

CycElt CycRing::scale(const CycElt& a, const Rat& r) const {
    CycElt out(deg_);
    for (int i = 0; i < deg_; ++i) out[i] = a[i] * r;
    return out;
}

CycElt CycRing::galois(const CycElt& a, long t) const {
    t %= n_;
    if (t < 0) t += n_;
    if (std::gcd(static_cast<long>(n_), t) != 1)
        throw InvariantViolated("galois exponent not coprime to level");
    CycElt out(deg_, Rat(0));
    for (int i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        long j = (static_cast<long>(i) * t) % n_;
        for (int k = 0; k < deg_; ++k) out[k] += a[i] * pow_reduced_[j][k];
    }
    return out;
}

bool CycRing::is_zero(const CycElt& a) const {
    for (const Rat& c : a)
        if (c != 0) return false;
    return true;
}

bool CycRing::is_rational(const CycElt& a) const {
    for (int i = 1; i < deg_; ++i)
        if (a[i] != 0) return false;
    return true;
}

Rat CycRing::to_rat(const CycElt& a) const {
    if (!is_rational(a)) throw InvariantViolated("value is not rational");
    return a[0];
}

std::vector<long> CycRing::galois_exponents() const {
    if (n_ == 1) return {1};
    std::vector<long> out;
    for (long t = 1; t < n_; ++t)
        if (std::gcd(static_cast<long>(n_), t) == 1) out.push_back(t);
    return out;
}

} // namespace clm
