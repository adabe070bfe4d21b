#include "clm/components.hpp"

#include "clm/errors.hpp"

#include <algorithm>
#include <set>

namespace clm {

QVec galg_mul(const Group& g, const QVec& a, const QVec& b) {
    QVec out(g.size(), Rat(0));
    for (int i = 0; i < g.size(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < g.size(); ++j) {
            if (b[j] == 0) continue;
            out[g.op(i, j)] += a[i] * b[j];
        }
    }
    return out;
}

QVec galg_scale(const QVec& a, const Rat& r) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * r;
    return out;
}

QVec galg_add(const QVec& a, const QVec& b) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

bool galg_is_zero(const QVec& a) {
    for (const Rat& c : a)
        if (c != 0) return false;
    return true;
}

std::vector<AlgebraComponent> rational_components(const CharacterTable& t) {
    int k = t.num_classes();
    const CycRing& ring = *t.ring;
    std::vector<long> gal = ring.galois_exponents();
    // partition rows into Galois orbits on value vectors
    std::vector<int> orbit_of(t.rows.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (orbit_of[r] >= 0) continue;
        std::vector<int> orb;
        std::set<std::vector<CycElt>> seen;
        for (long sigma : gal) {
            std::vector<CycElt> img(k);
            for (int j = 0; j < k; ++j) img[j] = ring.galois(t.rows[r][j], sigma);
            if (!seen.insert(img).second) continue;
            // find the row equal to img
            bool found = false;
            for (std::size_t s = 0; s < t.rows.size(); ++s)
                if (t.rows[s] == img) {
                    if (orbit_of[s] < 0) {
                        orbit_of[s] = static_cast<int>(orbits.size());
                        orb.push_back(static_cast<int>(s));
                    }
                    found = true;
                    break;
                }
            if (!found)
                throw InvariantViolated("Galois conjugate character missing from table");
        }
        orbits.push_back(std::move(orb));
    }

    const Group& g = *t.group;
    std::vector<AlgebraComponent> comps;
    for (const auto& orb : orbits) {
        AlgebraComponent c;
        c.h = t.degrees[orb[0]];
        c.center_degree = static_cast<int>(orb.size());
        c.dim = Int(c.center_degree) * c.h * c.h;
        c.chi.assign(k, Rat(0));
        for (int j = 0; j < k; ++j) {
            CycElt sum = ring.zero();
            for (int r : orb) sum = ring.add(sum, t.rows[r][j]);
            c.chi[j] = ring.to_rat(sum); // orbit sums are rational
        }
        // constituent: lexicographically least value vector in the orbit
        int best = orb[0];
        for (int r : orb) {
            if (t.rows[r] < t.rows[best]) best = r;
        }
        c.phi = t.rows[best];
        // central idempotent: coefficient at g is h * chi(g^{-1}) / |Gamma|
        c.idempotent.assign(g.size(), Rat(0));
        for (int e = 0; e < g.size(); ++e)
            c.idempotent[e] =
                Rat(c.h) * c.chi[t.class_of[g.inverse(e)]] / Rat(g.size());
        comps.push_back(std::move(c));
    }
    // canonical order: trivial first, then by (dim, h, chi lexicographic)
    auto is_trivial = [&](const AlgebraComponent& c) {
        for (const Rat& v : c.chi)
            if (v != 1) return false;
        return true;
    };
    std::sort(comps.begin(), comps.end(),
              [&](const AlgebraComponent& a, const AlgebraComponent& b) {
                  bool ta = is_trivial(a), tb = is_trivial(b);
                  if (ta != tb) return ta;
                  if (a.dim != b.dim) return a.dim < b.dim;
                  if (a.h != b.h) return a.h < b.h;
                  return a.chi < b.chi;
              });
    bool registered = split_registry_covers(g.name());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        comps[i].index = static_cast<int>(i) + 1;
        comps[i].split_registered = registered && comps[i].center_degree == 1;
    }
    // exact decomposition checks
    Int dimsum = 0;
    QVec total(g.size(), Rat(0));
    for (const auto& c : comps) {
        dimsum += c.dim;
        total = galg_add(total, c.idempotent);
        QVec sq = galg_mul(g, c.idempotent, c.idempotent);
        for (int e = 0; e < g.size(); ++e)
            if (sq[e] != c.idempotent[e])
                throw InvariantViolated("central idempotent not idempotent");
    }
    if (dimsum != g.size()) throw InvariantViolated("component dims do not sum to |G|");
    for (int e = 0; e < g.size(); ++e)
        if (total[e] != Rat(e == g.identity() ? 1 : 0))
            throw InvariantViolated("idempotents do not sum to 1");
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            if (!galg_is_zero(galg_mul(g, comps[i].idempotent, comps[j].idempotent)))
                throw InvariantViolated("idempotents not orthogonal");
    return comps;
}

bool split_registry_covers(const std::string& group_name) {
    static const std::set<std::string> names = {
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11",
        "C12", "S3", "D4", "A4", "S4", "A5", "S5"};
    return names.count(group_name) > 0;
}

const char* verdict_name(PrimeVerdict v) {
    switch (v) {
        case PrimeVerdict::Good: return "good";
        case PrimeVerdict::Bad: return "bad";
        default: return "unsupported";
    }
}

namespace {

// Scaled reduced-trace Gram determinant of the lattice spanned by {e_i*gamma}.
// Works with the integer lattice |G|*e_i*Z[G]; the determinant of the true
// Gram matrix is det_scaled / |G|^(2r). One Z-basis is a valid Z_(p)-basis at
// every p where e_i is p-integral, so a single determinant serves all primes.
struct GramData {
    Int det_scaled; // may be 0 only on corruption
    std::size_t r = 0;
};

GramData component_gram(const CharacterTable& t, const AlgebraComponent& c) {
    const Group& g = *t.group;
    int n = g.size();
    // integer rows: |G| * e_i * gamma
    IMat rows(n, IVec(n, 0));
    for (int gamma = 0; gamma < n; ++gamma)
        for (int e = 0; e < n; ++e) {
            Rat coeff = c.idempotent[e] * Rat(n); // integer
            if (coeff != 0) rows[gamma][g.op(e, gamma)] += coeff.get_num();
        }
    IMat basis = hnf_row_basis(std::move(rows));
    GramData out;
    out.r = basis.size();
    if (out.r != static_cast<std::size_t>(c.dim.get_si()))
        throw InvariantViolated("component lattice rank mismatch");
    // reduced trace: tr_red(x) = (|G|/h) * coeff_id(x) for x in the component
    Int scale = Int(n) / c.h;
    IMat gram(out.r, IVec(out.r, 0));
    for (std::size_t i = 0; i < out.r; ++i)
        for (std::size_t j = i; j < out.r; ++j) {
            // coefficient of the identity in basis_i * basis_j
            Int coeff = 0;
            for (int x = 0; x < n; ++x) {
                if (basis[i][x] == 0) continue;
                int y = g.inverse(x);
                if (basis[j][y] != 0) coeff += basis[i][x] * basis[j][y];
            }
            gram[i][j] = gram[j][i] = scale * coeff;
        }
    out.det_scaled = bareiss_det(std::move(gram));
    if (out.det_scaled == 0)
        throw InvariantViolated("degenerate trace form on component");
    return out;
}

} // namespace

PrimeVerdict good_prime_for(const CharacterTable& t,
                            const std::vector<AlgebraComponent>& comps,
                            const std::vector<int>& positions, const Int& p,
                            std::vector<GoodPrimeDetail>* details) {
    const Group& g = *t.group;
    Int order(g.size());
    if (details) details->clear();
    PrimeVerdict verdict = PrimeVerdict::Good;
    for (int pos : positions) {
        const AlgebraComponent& c = comps[static_cast<std::size_t>(pos)];
        GoodPrimeDetail d;
        if (!mpz_divisible_p(order.get_mpz_t(), p.get_mpz_t())) {
            d.denominator = d.gram = d.closed = true;
            if (details) details->push_back(d);
            continue;
        }
        if (!(c.split_registered && c.center_degree == 1)) {
            if (details) details->push_back(d);
            verdict = PrimeVerdict::Unsupported;
            continue;
        }
        // denominator test
        d.denominator = true;
        for (const Rat& coeff : c.idempotent)
            if (valuation(coeff.get_den(), p) > 0) { d.denominator = false; break; }
        // closed criterion
        Int quot = order / c.h;
        d.closed = !mpz_divisible_p(quot.get_mpz_t(), p.get_mpz_t());
        // Gram test (denominator failure already implies non-maximality:
        // the lattice spanned by {e*gamma} is then strictly inside eZ_(p)[G])
        if (d.denominator) {
            GramData gd = component_gram(t, c);
            long v = valuation(gd.det_scaled, p) -
                     2 * static_cast<long>(gd.r) * valuation(order, p);
            d.gram = v == 0;
        } else {
            d.gram = false;
        }
        if (d.denominator != d.closed || d.gram != d.closed)
            throw InvariantViolated("good-prime tests disagree at p=" + p.get_str());
        if (details) details->push_back(d);
        if (!d.closed && verdict == PrimeVerdict::Good) verdict = PrimeVerdict::Bad;
    }
    return verdict;
}

std::map<Int, PrimeVerdict> good_primes(const CharacterTable& t,
                                        const std::vector<AlgebraComponent>& comps,
                                        const std::vector<int>& positions,
                                        const std::vector<Int>& primes) {
    std::map<Int, PrimeVerdict> out;
    for (const Int& p : primes) out[p] = good_prime_for(t, comps, positions, p);
    return out;
}

RankSpec rank_u(const CharacterTable& t, const std::vector<AlgebraComponent>& comps,
                const std::vector<Subgroup>& places) {
    const Group& g = *t.group;
    int k = t.num_classes();
    RankSpec r;
    r.table = &t;
    r.has_places = true;
    r.places = places;
    r.chiK.assign(k, Rat(-1));
    for (const Subgroup& gv : places) {
        // Ind_{Gamma_v}^Gamma 1 evaluated on class reps
        for (int j = 0; j < k; ++j) {
            int rep = t.classes[j].rep;
            long cnt = 0;
            for (int x = 0; x < g.size(); ++x)
                if (gv.contains(g.conjugate(g.inverse(x), rep))) ++cnt;
            r.chiK[j] += Rat(cnt) / Rat(gv.size());
        }
    }
    std::vector<CycElt> chiK_cf = t.rational_class_function(r.chiK);
    r.u.assign(comps.size(), Rat(0));
    for (std::size_t i = 1; i < comps.size(); ++i) {
        Rat ip = t.inner(chiK_cf, comps[i].phi);
        r.u[i] = ip / Rat(comps[i].h);
    }
    // sanity: <chiK, 1> >= 0
    std::vector<Rat> ones(k, Rat(1));
    if (t.inner(chiK_cf, t.rational_class_function(ones)) < 0)
        throw InvariantViolated("chi_K pairs negatively with the trivial character");
    return r;
}

RankSpec rank_from_u(const CharacterTable& t,
                     const std::vector<AlgebraComponent>& comps,
                     const std::vector<Rat>& u_nontrivial) {
    if (u_nontrivial.size() + 1 != comps.size())
        throw ParseError("rank vector length must be #components - 1");
    RankSpec r;
    r.table = &t;
    r.u.assign(comps.size(), Rat(0));
    for (std::size_t i = 1; i < comps.size(); ++i) r.u[i] = u_nontrivial[i - 1];
    return r;
}

} // namespace clm
