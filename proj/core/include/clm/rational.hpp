#pragma once

#include <gmpxx.h>

#include <string>

namespace clm {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// p-adic valuation of a nonzero integer.
inline long valuation(Int n, const Int& p) {
    if (n == 0) return -1; // caller-checked sentinel
    long v = 0;
    n = abs(n);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

inline long valuation(const Rat& r, const Int& p) {
    return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

// 12-significant-digit decimal rendering; all internal math stays exact,
// this is strictly a report-boundary conversion.
std::string decimal12(const Rat& r);

inline Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

} // namespace clm
