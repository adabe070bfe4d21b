#include "clm/hecke.hpp"

#include "clm/errors.hpp"

#include <algorithm>
#include <map>

namespace clm {

namespace {

QVec delta_element(int n, int e) {
    QVec v(static_cast<std::size_t>(n), Rat(0));
    v[static_cast<std::size_t>(e)] = 1;
    return v;
}

// true iff x is p-integral for every listed prime
bool s_integral(const Rat& x, const std::vector<Int>& primes) {
    for (const Int& p : primes)
        if (valuation(x.get_den(), p) > 0) return false;
    return true;
}

// x must vanish mod d with an S-unit denominator; d's primes are in S.
bool rat_zero_mod(const Rat& x, const Int& d) {
    if (x == 0) return true;
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_den().get_mpz_t(), d.get_mpz_t());
    if (g != 1) return false;
    return mpz_divisible_p(x.get_num().get_mpz_t(), d.get_mpz_t()) != 0;
}

} // namespace

AugmentationComponent augmentation_component(const CharacterTable& t,
                                             const std::vector<AlgebraComponent>& comps,
                                             const Subgroup& h) {
    const Group& g = *t.group;
    int k = t.num_classes();
    AugmentationComponent out;
    out.a_char.assign(static_cast<std::size_t>(k), Rat(-1));
    for (int j = 0; j < k; ++j) {
        int rep = t.classes[static_cast<std::size_t>(j)].rep;
        long cnt = 0;
        for (int x = 0; x < g.size(); ++x)
            if (h.contains(g.conjugate(g.inverse(x), rep))) ++cnt;
        out.a_char[static_cast<std::size_t>(j)] += Rat(cnt) / Rat(h.size());
    }
    // route 1: components whose constituent pairs nontrivially with a
    std::vector<CycElt> a_cf = t.rational_class_function(out.a_char);
    std::vector<int> by_char;
    out.idempotent.assign(static_cast<std::size_t>(g.size()), Rat(0));
    for (std::size_t i = 1; i < comps.size(); ++i) {
        Rat m = t.inner(a_cf, comps[i].phi);
        if (m == 0) continue;
        if (m < 0) throw InvariantViolated("negative constituent multiplicity");
        by_char.push_back(static_cast<int>(i));
        out.mults.push_back(m.get_num());
        out.idempotent = galg_add(out.idempotent, comps[i].idempotent);
    }
    // route 2: nontrivial components with e_i * e_1' != 0
    QVec e1p(static_cast<std::size_t>(g.size()), Rat(0));
    for (int x : h.elems) e1p[static_cast<std::size_t>(x)] = Rat(1) / Rat(h.size());
    std::vector<int> by_product;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (!galg_is_zero(galg_mul(g, comps[i].idempotent, e1p)))
            by_product.push_back(static_cast<int>(i));
    if (by_char != by_product)
        throw InvariantViolated("augmentation constituent routes disagree");
    out.positions = by_char;
    return out;
}

HeckeOrder hecke_order(const CharacterTable& t,
                       const std::vector<AlgebraComponent>& comps,
                       const Subgroup& h, const std::vector<Int>& primes) {
    const Group& g = *t.group;
    int n = g.size();
    HeckeOrder o;
    o.table = &t;
    o.comps = &comps;
    o.sub = h;
    o.aug = augmentation_component(t, comps, h);
    o.primes = primes;
    for (const Int& p : primes) {
        PrimeVerdict v = good_prime_for(t, comps, o.aug.positions, p);
        if (v == PrimeVerdict::Bad)
            throw BadPrime("prime " + p.get_str() + " is bad for the order");
        if (v == PrimeVerdict::Unsupported)
            throw UnsupportedComponent("no goodness certificate at " + p.get_str());
    }
    o.e1p.assign(static_cast<std::size_t>(n), Rat(0));
    for (int x : h.elems) o.e1p[static_cast<std::size_t>(x)] = Rat(1) / Rat(h.size());

    // lattice spanned by e*gamma*e_1', scaled to integers
    std::vector<QVec> w(static_cast<std::size_t>(n));
    Int den = 1;
    for (int x = 0; x < n; ++x) {
        w[static_cast<std::size_t>(x)] = galg_mul(
            g, galg_mul(g, o.aug.idempotent, delta_element(n, x)), o.e1p);
        for (const Rat& c : w[static_cast<std::size_t>(x)])
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    IMat wz(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int c = 0; c < n; ++c) {
            Rat v = w[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] *
                    Rat(den);
            wz[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] = v.get_num();
        }
    IMat lat = hnf_row_basis(wz);
    std::size_t bigrank = lat.size();

    // intersect with the left-fixed subspace
    std::vector<int> hgens = h.gens.empty() ? h.elems : h.gens;
    IMat cons(hgens.size() * static_cast<std::size_t>(n), IVec(bigrank, 0));
    for (std::size_t s = 0; s < hgens.size(); ++s)
        for (std::size_t i = 0; i < bigrank; ++i)
            for (int c = 0; c < n; ++c) {
                int moved = g.op(hgens[s], c); // gamma' * (basis coord c)
                cons[s * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(moved)][i] += lat[i][static_cast<std::size_t>(c)];
                cons[s * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)][i] -=
                    lat[i][static_cast<std::size_t>(c)];
            }
    IMat ker = int_kernel(cons);
    std::size_t rank = ker.size();
    Int expected = 0;
    for (std::size_t i = 0; i < o.aug.positions.size(); ++i)
        expected += o.aug.mults[i] * o.aug.mults[i];
    if (Int(static_cast<long>(rank)) != expected)
        throw InvariantViolated("Hecke order rank mismatch");

    IMat wzt(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            wzt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                wz[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < rank; ++j) {
        IVec vz(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < bigrank; ++i)
            for (int c = 0; c < n; ++c)
                vz[static_cast<std::size_t>(c)] +=
                    ker[j][i] * lat[i][static_cast<std::size_t>(c)];
        QVec b(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
            b[static_cast<std::size_t>(c)] = Rat(vz[static_cast<std::size_t>(c)]) / Rat(den);
        auto z = int_solve(wzt, vz);
        if (!z)
            throw InvariantViolated("basis element not in the generator lattice");
        o.basis.push_back(std::move(b));
        o.expr.push_back(std::move(*z));
    }

    // structure constants: express products in the basis over Q
    QMat bmat(static_cast<std::size_t>(n), QVec(rank));
    for (std::size_t j = 0; j < rank; ++j)
        for (int c = 0; c < n; ++c)
            bmat[static_cast<std::size_t>(c)][j] = o.basis[j][static_cast<std::size_t>(c)];
    std::vector<QVec> rhs;
    for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b2 = 0; b2 < rank; ++b2)
            rhs.push_back(galg_mul(g, o.basis[a], o.basis[b2]));
    QVec ident = galg_mul(g, o.aug.idempotent, o.e1p);
    rhs.push_back(ident);
    std::vector<QVec> sols = q_solve_all(bmat, rhs);
    o.structure.assign(rank, std::vector<QVec>(rank));
    for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b2 = 0; b2 < rank; ++b2) {
            QVec& c = sols[a * rank + b2];
            for (const Rat& x : c)
                if (!s_integral(x, primes))
                    throw InvariantViolated("structure constants not S-integral");
            o.structure[a][b2] = std::move(c);
        }
    o.identity_coeffs = std::move(sols.back());
    for (const Rat& x : o.identity_coeffs)
        if (!s_integral(x, primes))
            throw InvariantViolated("identity is not S-integral in the basis");
    // identity acts as identity
    for (std::size_t b2 = 0; b2 < rank; ++b2) {
        if (galg_mul(g, ident, o.basis[b2]) != o.basis[b2] ||
            galg_mul(g, o.basis[b2], ident) != o.basis[b2])
            throw InvariantViolated("identity element fails to act as identity");
    }

    // maximality: unit Gram determinant of each Hecke-algebra component
    for (std::size_t ci = 0; ci < o.aug.positions.size(); ++ci) {
        const AlgebraComponent& comp =
            comps[static_cast<std::size_t>(o.aug.positions[ci])];
        long m = o.aug.mults[ci].get_si();
        std::vector<QVec> proj;
        Int dci = 1;
        for (std::size_t j = 0; j < rank; ++j) {
            QVec pj = galg_mul(g, comp.idempotent, o.basis[j]);
            for (const Rat& x : pj)
                mpz_lcm(dci.get_mpz_t(), dci.get_mpz_t(), x.get_den().get_mpz_t());
            proj.push_back(std::move(pj));
        }
        IMat pz(rank, IVec(static_cast<std::size_t>(n)));
        for (std::size_t j = 0; j < rank; ++j)
            for (int c = 0; c < n; ++c)
                pz[j][static_cast<std::size_t>(c)] =
                    Rat(proj[j][static_cast<std::size_t>(c)] * Rat(dci)).get_num();
        IMat cb = hnf_row_basis(pz);
        if (cb.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
            throw InvariantViolated("Hecke component dimension mismatch");
        std::size_t cr = cb.size();
        std::vector<QVec> cbq(cr, QVec(static_cast<std::size_t>(n)));
        for (std::size_t a = 0; a < cr; ++a)
            for (int c = 0; c < n; ++c)
                cbq[a][static_cast<std::size_t>(c)] =
                    Rat(cb[a][static_cast<std::size_t>(c)]) / Rat(dci);
        QMat cmat(static_cast<std::size_t>(n), QVec(cr));
        for (std::size_t a = 0; a < cr; ++a)
            for (int c = 0; c < n; ++c)
                cmat[static_cast<std::size_t>(c)][a] = cbq[a][static_cast<std::size_t>(c)];
        // left-regular matrices and the reduced-trace Gram matrix
        std::vector<QVec> prods;
        for (std::size_t a = 0; a < cr; ++a)
            for (std::size_t b2 = 0; b2 < cr; ++b2)
                prods.push_back(galg_mul(g, cbq[a], cbq[b2]));
        QMat gram(cr, QVec(cr, Rat(0)));
        for (std::size_t a = 0; a < cr; ++a)
            for (std::size_t b2 = 0; b2 < cr; ++b2) {
                // trace of left multiplication by cbq[a]*cbq[b2], over m
                Rat tr(0);
                const QVec& prod = prods[a * cr + b2];
                // express left-mult of prod on the component basis
                std::vector<QVec> lm;
                for (std::size_t c2 = 0; c2 < cr; ++c2)
                    lm.push_back(galg_mul(g, prod, cbq[c2]));
                std::vector<QVec> lms = q_solve_all(cmat, lm);
                for (std::size_t c2 = 0; c2 < cr; ++c2) tr += lms[c2][c2];
                gram[a][b2] = tr / Rat(m);
            }
        Rat det = q_det(gram);
        if (det == 0) throw InvariantViolated("degenerate Hecke trace form");
        for (const Int& p : primes)
            if (valuation(det, p) != 0)
                throw InvariantViolated("Hecke order not maximal at " + p.get_str());
    }
    return o;
}

OModule invariants_functor(const GammaModule& m, const HeckeOrder& o) {
    if (m.group != o.table->group)
        throw ParseError("module and order live over different groups");
    OModule out;
    out.order = &o;
    if (m.mod.is_zero()) {
        out.mod.ops.assign(o.rank(), IMat{});
        return out;
    }
    // module must be supported on the order's constituents at good primes
    ModuleType ty = type_of_module(m, *o.table, *o.comps);
    for (const TypeEntry& e : ty.entries) {
        if (std::find(o.aug.positions.begin(), o.aug.positions.end(),
                      e.comp_pos) == o.aug.positions.end())
            throw UnsupportedComponent(
                "module meets a component outside the augmentation block");
        if (std::find(o.primes.begin(), o.primes.end(), e.p) == o.primes.end())
            throw BadPrime("module prime " + e.p.get_str() +
                           " is not in the order's prime set");
    }
    std::vector<IMat> rep = full_action(m);
    std::size_t nm = m.mod.orders.size();
    auto combo = [&](const IVec& z) {
        IMat a(nm, IVec(nm, 0));
        for (std::size_t x = 0; x < z.size(); ++x) {
            if (z[x] == 0) continue;
            for (std::size_t i = 0; i < nm; ++i)
                for (std::size_t j = 0; j < nm; ++j)
                    a[i][j] += z[x] * rep[x][i][j];
        }
        for (std::size_t i = 0; i < nm; ++i)
            for (Int& v : a[i]) {
                v %= m.mod.orders[i];
                if (v < 0) v += m.mod.orders[i];
            }
        return a;
    };
    OpModule ambient;
    ambient.orders = m.mod.orders;
    for (std::size_t j = 0; j < o.rank(); ++j) ambient.ops.push_back(combo(o.expr[j]));
    std::vector<std::vector<long>> gens = fixed_generators(m, o.sub);
    out.mod = submodule_structure(ambient, gens);

    // representative independence: relations of the generator lattice act as 0
    int n = o.table->group->size();
    IMat wzt(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n), 0));
    {
        // rebuild integer generators D * e gamma e_1' (same scaling choice is
        // irrelevant: only the kernel matters)
        const Group& g = *o.table->group;
        std::vector<QVec> w(static_cast<std::size_t>(n));
        Int den = 1;
        for (int x = 0; x < n; ++x) {
            w[static_cast<std::size_t>(x)] = galg_mul(
                g, galg_mul(g, o.aug.idempotent, delta_element(n, x)), o.e1p);
            for (const Rat& c : w[static_cast<std::size_t>(x)])
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        }
        for (int x = 0; x < n; ++x)
            for (int c = 0; c < n; ++c)
                wzt[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] =
                    Rat(w[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)] *
                        Rat(den)).get_num();
    }
    for (const IVec& z : int_kernel(wzt)) {
        IMat zero = combo(z);
        for (const auto& gv : gens) {
            IVec x(nm);
            for (std::size_t i = 0; i < nm; ++i) x[i] = gv[i];
            IVec y = imat_apply(zero, x);
            for (std::size_t i = 0; i < nm; ++i)
                if (y[i] % m.mod.orders[i] != 0)
                    throw InvariantViolated(
                        "order action depends on the representative");
        }
    }
    // identity acts as identity on the fixed module
    std::size_t k = out.mod.orders.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rat v(0);
            for (std::size_t b = 0; b < o.rank(); ++b)
                v += o.identity_coeffs[b] * Rat(out.mod.ops[b][i][j]);
            if (i == j) v -= 1;
            if (!rat_zero_mod(v, out.mod.orders[i]))
                throw InvariantViolated("order identity fails to act as identity");
        }
    return out;
}

MoritaLift morita_lift(const OModule& h, const HeckeOrder& o,
                       const TruncationSpec& trunc) {
    std::vector<ComponentRef> refs;
    for (int pos : o.aug.positions)
        refs.push_back({pos, (*o.comps)[static_cast<std::size_t>(pos)].h});
    std::vector<MoritaLift> matches;
    for (const ModuleType& ty : enumerate_types(refs, trunc)) {
        GammaModule g = module_from_type(ty, *o.table, *o.comps);
        OModule fixed = invariants_functor(g, o);
        if (!modules_isomorphic_op(fixed.mod, h.mod)) continue;
        MoritaLift lift;
        lift.lift_type = ty;
        lift.lift = std::move(g);
        matches.push_back(std::move(lift));
    }
    if (matches.empty())
        throw NotFound("no lift inside the truncation");
    if (matches.size() > 1) {
        std::string types;
        for (const MoritaLift& m : matches) types += " " + m.lift_type.str();
        throw NotUnique("multiple non-isomorphic lifts found:" + types);
    }
    MoritaLift out = std::move(matches.front());
    OpModule lift_ops;
    lift_ops.orders = out.lift.mod.orders;
    lift_ops.ops = full_action(out.lift);
    out.aut_lift = count_aut_op(lift_ops);
    out.aut_module = count_aut_op(h.mod);
    if (out.aut_lift != out.aut_module)
        throw InvariantViolated("lift and module automorphism counts disagree");
    return out;
}

std::vector<Rat> rank_transfer(const RankSpec& r, const AugmentationComponent& aug,
                               const std::vector<AlgebraComponent>& comps) {
    std::vector<Rat> v;
    for (std::size_t i = 0; i < aug.positions.size(); ++i) {
        const AlgebraComponent& c =
            comps[static_cast<std::size_t>(aug.positions[i])];
        if (static_cast<std::size_t>(aug.positions[i]) >= r.u.size())
            throw ParseError("rank vector does not cover the constituents");
        v.push_back(Rat(c.h) * r.u[static_cast<std::size_t>(aug.positions[i])] /
                    Rat(aug.mults[i]));
    }
    return v;
}

Rat omodule_size_power_v(const OModule& h, const std::vector<Rat>& v) {
    const HeckeOrder& o = *h.order;
    if (v.size() != o.aug.positions.size())
        throw ParseError("one exponent per Hecke component required");
    std::map<Int, Rat> expo;
    std::size_t k = h.mod.orders.size();
    const Group& g = *o.table->group;
    for (std::size_t ci = 0; ci < o.aug.positions.size(); ++ci) {
        const AlgebraComponent& comp =
            (*o.comps)[static_cast<std::size_t>(o.aug.positions[ci])];
        // central idempotent of the Hecke component, expressed in the basis
        QVec eps = galg_mul(g, comp.idempotent, galg_mul(g, o.aug.idempotent, o.e1p));
        QMat bmat(static_cast<std::size_t>(g.size()), QVec(o.rank()));
        for (std::size_t j = 0; j < o.rank(); ++j)
            for (int c = 0; c < g.size(); ++c)
                bmat[static_cast<std::size_t>(c)][j] =
                    o.basis[j][static_cast<std::size_t>(c)];
        auto coeffs = q_solve(bmat, eps);
        if (!coeffs)
            throw InvariantViolated("component idempotent outside the algebra");
        // image of eps on h, computed mod the orders
        std::vector<std::vector<long>> gens;
        for (std::size_t col = 0; col < k; ++col) {
            std::vector<long> gv(k);
            for (std::size_t row = 0; row < k; ++row) {
                Rat val(0);
                for (std::size_t b = 0; b < o.rank(); ++b)
                    val += (*coeffs)[b] * Rat(h.mod.ops[b][row][col]);
                // reduce the S-integral rational mod the order
                Int d = h.mod.orders[row];
                Int inv;
                if (mpz_invert(inv.get_mpz_t(), val.get_den().get_mpz_t(),
                               d.get_mpz_t()) == 0)
                    throw BadPrime("idempotent not integral for the module order");
                Int res = (val.get_num() % d) * inv % d;
                if (res < 0) res += d;
                gv[row] = res.get_si();
            }
            gens.push_back(std::move(gv));
        }
        OpModule plain{h.mod.orders, {}};
        Int sz = submodule_structure(plain, gens).size();
        for (Int p = 2; sz > 1; ++p) {
            if (sz % p != 0) continue;
            long e = 0;
            while (sz % p == 0) { sz /= p; ++e; }
            expo[p] += Rat(e) * v[ci];
        }
    }
    Rat out(1);
    for (const auto& [p, x] : expo) {
        if (!is_integral(x))
            throw NonIntegralPower("|H|^v has non-integral exponent at " +
                                   p.get_str());
        Int e = x.get_num();
        if (e >= 0) out *= Rat(pow_int(p, e.get_si()));
        else {
            Int ne = -e;
            out /= Rat(pow_int(p, ne.get_si()));
        }
    }
    return out;
}

std::vector<NonGaloisRow> nongalois_table(const CharacterTable& t,
                                          const std::vector<AlgebraComponent>& comps,
                                          const HeckeOrder& o, const RankSpec& r,
                                          const TruncationSpec& trunc) {
    std::vector<Rat> v = rank_transfer(r, o.aug, comps);
    std::vector<ComponentRef> refs;
    for (int pos : o.aug.positions)
        refs.push_back({pos, comps[static_cast<std::size_t>(pos)].h});
    std::vector<NonGaloisRow> rows;
    for (const ModuleType& ty : enumerate_types(refs, trunc)) {
        GammaModule g = module_from_type(ty, t, comps);
        OModule h = invariants_functor(g, o);
        NonGaloisRow* row = nullptr;
        for (NonGaloisRow& cand : rows)
            if (modules_isomorphic_op(cand.rep.mod, h.mod)) { row = &cand; break; }
        if (!row) {
            rows.push_back({});
            row = &rows.back();
            row->rep = h;
            row->col_a = 0;
            row->col_b = Rat(1) / (omodule_size_power_v(h, v) *
                                   Rat(count_aut_op(h.mod)));
        }
        row->lift_types.push_back(ty);
        row->col_a += Rat(1) / (size_power_u(ty, r.u) *
                                Rat(count_maps_formula(MapKind::Aut, ty, ty)));
    }
    return rows;
}

RankIndependenceReport rank_independence_check(const Group& sigma,
                                               const Subgroup& delta,
                                               const Subgroup& sigma_prime,
                                               const RankSpec& r_on_sigma) {
    if (!is_normal(sigma, delta)) throw NotNormal("delta must be normal");
    for (int e : delta.elems)
        if (!sigma_prime.contains(e))
            throw ParseError("sigma' must contain delta");
    if (!r_on_sigma.has_places)
        throw ParseError("rank independence needs places to push forward");
    QuotientResult q = coset_and_quotient(sigma, delta);
    const Group& gamma = *q.quotient;
    std::vector<int> pgens;
    for (int e : sigma_prime.elems) pgens.push_back((*q.projection)(e));
    Subgroup gamma_prime = subgroup_closure(gamma, pgens);

    CharacterTable tsig = character_table(sigma);
    auto csig = rational_components(tsig);
    AugmentationComponent asig = augmentation_component(tsig, csig, sigma_prime);
    CharacterTable tgam = character_table(gamma);
    auto cgam = rational_components(tgam);
    AugmentationComponent agam = augmentation_component(tgam, cgam, gamma_prime);

    RankIndependenceReport rep;
    RankSpec rsig = rank_u(tsig, csig, r_on_sigma.places);
    rep.v_direct = rank_transfer(rsig, asig, csig);
    std::vector<Subgroup> pushed;
    for (const Subgroup& pl : r_on_sigma.places) {
        std::vector<int> ims;
        for (int e : pl.elems) ims.push_back((*q.projection)(e));
        pushed.push_back(subgroup_closure(gamma, ims));
    }
    RankSpec rgam = rank_u(tgam, cgam, pushed);
    std::vector<Rat> vgam = rank_transfer(rgam, agam, cgam);

    // match each quotient constituent to its lift among the sigma constituents
    rep.v_quotient.assign(rep.v_direct.size(), Rat(0));
    std::vector<bool> hit(rep.v_direct.size(), false);
    std::vector<Int> dims_sig, dims_gam;
    for (const Int& m : asig.mults) dims_sig.push_back(m);
    for (const Int& m : agam.mults) dims_gam.push_back(m);
    std::sort(dims_sig.begin(), dims_sig.end());
    std::sort(dims_gam.begin(), dims_gam.end());
    rep.equal_dims = dims_sig == dims_gam;

    bool all_matched = true;
    for (std::size_t gi = 0; gi < agam.positions.size(); ++gi) {
        const AlgebraComponent& gc =
            cgam[static_cast<std::size_t>(agam.positions[gi])];
        // lift the character through the projection
        std::vector<Rat> lifted(static_cast<std::size_t>(tsig.num_classes()));
        for (int j = 0; j < tsig.num_classes(); ++j) {
            int repel = tsig.classes[static_cast<std::size_t>(j)].rep;
            int img = (*q.projection)(repel);
            lifted[static_cast<std::size_t>(j)] =
                gc.chi[static_cast<std::size_t>(tgam.class_of[img])];
        }
        bool found = false;
        for (std::size_t si = 0; si < asig.positions.size(); ++si) {
            const AlgebraComponent& sc =
                csig[static_cast<std::size_t>(asig.positions[si])];
            if (sc.chi != lifted) continue;
            rep.v_quotient[si] = vgam[gi];
            hit[si] = true;
            found = true;
            break;
        }
        if (!found) all_matched = false;
    }
    for (bool b : hit)
        if (!b) all_matched = false;
    rep.equal_ranks = all_matched && rep.v_quotient == rep.v_direct;
    return rep;
}

} // namespace clm
