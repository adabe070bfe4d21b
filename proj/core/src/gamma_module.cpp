#include "clm/gamma_module.hpp"

#include "clm/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace clm {

namespace {

IMat mod_reduce(IMat a, const std::vector<Int>& orders) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (Int& x : a[i]) {
            x %= orders[i];
            if (x < 0) x += orders[i];
        }
    return a;
}

IMat mul_mod(const IMat& a, const IMat& b, const std::vector<Int>& orders) {
    return mod_reduce(imat_mul(a, b), orders);
}

int perm_sign(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// Standard representation on the sum-zero sublattice of Z^n with basis
// v_k = e_k - e_{k+1}.
IMat standard_mat(const Perm& p) {
    int n = static_cast<int>(p.size());
    IMat m(n - 1, IVec(n - 1, 0));
    for (int col = 0; col < n - 1; ++col) {
        int a = p[col], b = p[col + 1]; // image of e_col - e_{col+1}
        if (a < b)
            for (int k = a; k < b; ++k) m[k][col] += 1;
        else
            for (int k = b; k < a; ++k) m[k][col] -= 1;
    }
    return m;
}

// Matrix per group element grown from generator matrices; reduce is applied
// after every product. Checks every Cayley edge.
std::vector<IMat> grow_reps(const Group& g, const std::vector<int>& gen_ids,
                            const std::vector<IMat>& mats,
                            const std::function<IMat(IMat)>& reduce) {
    std::size_t dim = mats.empty() ? 0 : mats[0].size();
    std::vector<IMat> rep(g.size());
    std::vector<bool> have(g.size(), false);
    rep[g.identity()] = reduce(identity_imat(dim));
    have[g.identity()] = true;
    std::vector<int> queue{g.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (std::size_t k = 0; k < gen_ids.size(); ++k) {
            int y = g.op(x, gen_ids[k]);
            IMat cand = reduce(imat_mul(rep[x], mats[k]));
            if (!have[y]) {
                rep[y] = std::move(cand);
                have[y] = true;
                queue.push_back(y);
            } else if (rep[y] != cand) {
                throw InvariantViolated("action matrices violate a group relation");
            }
        }
    }
    for (bool h : have)
        if (!h) throw NotAGroup("listed generators do not generate the group");
    return rep;
}

std::optional<std::vector<Rat>> rep_character(const CharacterTable& t,
                                              const std::vector<int>& gen_ids,
                                              const std::vector<IMat>& mats) {
    std::vector<IMat> rep;
    try {
        rep = grow_reps(*t.group, gen_ids, mats, [](IMat m) { return m; });
    } catch (const Error&) {
        return std::nullopt;
    }
    std::vector<Rat> chi(t.num_classes());
    for (int j = 0; j < t.num_classes(); ++j) {
        Int tr = 0;
        const IMat& m = rep[t.classes[j].rep];
        for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
        chi[j] = Rat(tr);
    }
    return chi;
}

std::vector<int> default_generators(const Group& g) {
    if (!g.generator_ids().empty()) return g.generator_ids();
    std::vector<int> gens;
    Subgroup s = trivial_subgroup(g);
    for (int e = 0; e < g.size() && s.size() < g.size(); ++e) {
        if (s.contains(e)) continue;
        std::vector<int> next = s.gens;
        next.push_back(e);
        s = subgroup_closure(g, next);
        gens.push_back(e);
    }
    return gens;
}

} // namespace

std::vector<IMat> full_action(const GammaModule& m) {
    if (!m.group) throw ParseError("module has no group attached");
    if (m.mod.ops.size() != m.gen_ids.size())
        throw ParseError("one action matrix per generator required");
    m.mod.validate();
    const std::vector<Int>& d = m.mod.orders;
    std::vector<IMat> rep = grow_reps(
        *m.group, m.gen_ids, m.mod.ops,
        [&d](IMat a) { return mod_reduce(std::move(a), d); });
    IMat one = mod_reduce(identity_imat(d.size()), d);
    for (int x = 0; x < m.group->size(); ++x)
        if (mul_mod(rep[x], rep[m.group->inverse(x)], d) != one)
            throw InvariantViolated("action matrix not invertible mod the orders");
    return rep;
}

void validate_gamma(GammaModule& m) {
    full_action(m);
    FixedNorm fn = fixed_and_norm(m, full_subgroup(*m.group));
    m.trivial_invariants = fn.fixed_order == 1;
}

std::vector<std::vector<long>> fixed_generators(const GammaModule& m,
                                                const Subgroup& sub) {
    std::vector<IMat> rep = full_action(m);
    std::size_t n = m.mod.orders.size();
    const std::vector<Int>& d = m.mod.orders;
    // fixed points: kernel of stacked (rho(s) - 1) with order slacks
    std::vector<int> movers;
    for (int s : sub.elems)
        if (s != m.group->identity()) movers.push_back(s);
    std::vector<std::vector<long>> fixed_gens;
    if (movers.empty()) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<long> e(n, 0);
            e[j] = 1;
            fixed_gens.push_back(std::move(e));
        }
    } else {
        std::size_t rows = movers.size() * n;
        IMat sys(rows, IVec(n + rows, 0));
        for (std::size_t si = 0; si < movers.size(); ++si) {
            const IMat& a = rep[static_cast<std::size_t>(movers[si])];
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t r = si * n + i;
                for (std::size_t j = 0; j < n; ++j) {
                    sys[r][j] = a[i][j];
                    if (i == j) sys[r][j] -= 1;
                }
                sys[r][n + r] = d[i];
            }
        }
        IMat ker = int_kernel(sys);
        for (const IVec& v : ker) {
            std::vector<long> e(n);
            for (std::size_t j = 0; j < n; ++j) {
                Int c = v[j] % d[j];
                if (c < 0) c += d[j];
                e[j] = c.get_si();
            }
            fixed_gens.push_back(std::move(e));
        }
    }
    return fixed_gens;
}

FixedNorm fixed_and_norm(const GammaModule& m, const Subgroup& sub) {
    std::vector<IMat> rep = full_action(m);
    FixedNorm out;
    std::size_t n = m.mod.orders.size();
    if (n == 0) return out;
    const std::vector<Int>& d = m.mod.orders;
    OpModule plain{d, {}};
    out.fixed = submodule_structure(plain, fixed_generators(m, sub));
    out.fixed_order = out.fixed.size();

    // norm image: columns of sum over the subgroup
    IMat norm(n, IVec(n, 0));
    for (int s : sub.elems) {
        const IMat& a = rep[static_cast<std::size_t>(s)];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) norm[i][j] += a[i][j];
    }
    norm = mod_reduce(std::move(norm), d);
    std::vector<std::vector<long>> norm_gens;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<long> e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = norm[i][j].get_si();
        norm_gens.push_back(std::move(e));
    }
    out.norm = submodule_structure(plain, norm_gens);
    out.norm_order = out.norm.size();
    out.tate_h0_trivial = out.fixed_order == out.norm_order;
    return out;
}

RegistryRep registry_rep(const CharacterTable& t, const AlgebraComponent& comp) {
    const Group& g = *t.group;
    if (!(comp.split_registered && comp.center_degree == 1))
        throw UnsupportedComponent("component " + std::to_string(comp.index) +
                                   " of " + g.name() +
                                   " has no registered integral representation");
    std::vector<int> gens = default_generators(g);
    if (gens.empty() && g.size() > 1)
        throw UnsupportedComponent("group has no usable generating set");

    std::vector<std::vector<IMat>> candidates;
    if (comp.h == 1) {
        std::vector<IMat> mats;
        bool ok = true;
        for (int gid : gens) {
            Rat v = comp.chi[static_cast<std::size_t>(t.class_of[gid])];
            if (v != 1 && v != -1) { ok = false; break; }
            mats.push_back(IMat{{v.get_num()}});
        }
        if (ok) candidates.push_back(std::move(mats));
    }
    if (g.is_perm_mode() && g.degree() >= 2 &&
        comp.h == Int(g.degree() - 1)) {
        std::vector<IMat> std_mats, twist;
        for (int gid : gens) {
            IMat m = standard_mat(g.perm(gid));
            int sgn = perm_sign(g.perm(gid));
            IMat mt = m;
            if (sgn < 0)
                for (auto& row : mt)
                    for (Int& x : row) x = -x;
            std_mats.push_back(std::move(m));
            twist.push_back(std::move(mt));
        }
        candidates.push_back(std::move(std_mats));
        candidates.push_back(std::move(twist));
    }
    // exterior square of the sum-zero lattice: the hook constituent of
    // degree (d-1)(d-2)/2 in permutation mode
    if (g.is_perm_mode() && g.degree() >= 4) {
        long d1 = g.degree() - 1;
        if (comp.h == Int(d1 * (d1 - 1) / 2)) {
            std::vector<IMat> ext, ext_twist;
            std::vector<std::pair<long, long>> pairs;
            for (long i = 0; i < d1; ++i)
                for (long j = i + 1; j < d1; ++j) pairs.push_back({i, j});
            for (int gid : gens) {
                IMat m = standard_mat(g.perm(gid));
                IMat w(pairs.size(), IVec(pairs.size(), 0));
                for (std::size_t col = 0; col < pairs.size(); ++col) {
                    auto [i, j] = pairs[col];
                    for (std::size_t row = 0; row < pairs.size(); ++row) {
                        auto [k, l] = pairs[row];
                        w[row][col] =
                            m[static_cast<std::size_t>(k)]
                             [static_cast<std::size_t>(i)] *
                                m[static_cast<std::size_t>(l)]
                                 [static_cast<std::size_t>(j)] -
                            m[static_cast<std::size_t>(l)]
                             [static_cast<std::size_t>(i)] *
                                m[static_cast<std::size_t>(k)]
                                 [static_cast<std::size_t>(j)];
                    }
                }
                IMat wt = w;
                if (perm_sign(g.perm(gid)) < 0)
                    for (auto& row : wt)
                        for (Int& x : row) x = -x;
                ext.push_back(std::move(w));
                ext_twist.push_back(std::move(wt));
            }
            candidates.push_back(std::move(ext));
            candidates.push_back(std::move(ext_twist));
        }
    }
    if (g.name() == "D4" && comp.h == 2 && gens.size() == 2) {
        candidates.push_back({IMat{{0, -1}, {1, 0}}, IMat{{1, 0}, {0, -1}}});
        candidates.push_back({IMat{{1, 0}, {0, -1}}, IMat{{0, -1}, {1, 0}}});
    }
    for (auto& mats : candidates) {
        auto chi = rep_character(t, gens, mats);
        if (chi && *chi == comp.chi) return {gens, std::move(mats)};
    }
    // Fallback: sum-zero sublattice of the action on cosets of a subgroup of
    // index h+1 (covers constituents of multiplicity-free permutation
    // representations beyond the natural one).
    if (comp.h >= 2 && comp.h + 1 <= Int(g.size())) {
        for (const std::vector<int>& elems : all_subgroups(g)) {
            if (Int(static_cast<long>(elems.size())) * (comp.h + 1) !=
                Int(g.size()))
                continue;
            Subgroup u = subgroup_from_elements(g, elems);
            QuotientResult q = coset_and_quotient(g, u);
            int nc = static_cast<int>(q.cosets.size());
            std::vector<IMat> mats;
            for (int gid : gens) {
                Perm perm(static_cast<std::size_t>(nc));
                for (int c = 0; c < nc; ++c)
                    perm[static_cast<std::size_t>(c)] = q.coset_of
                        [static_cast<std::size_t>(g.op(gid, q.cosets
                            [static_cast<std::size_t>(c)][0]))];
                mats.push_back(standard_mat(perm));
            }
            auto chi = rep_character(t, gens, mats);
            if (chi && *chi == comp.chi) return {gens, std::move(mats)};
            if (g.is_perm_mode()) {
                std::vector<IMat> twist = mats;
                for (std::size_t k = 0; k < twist.size(); ++k)
                    if (perm_sign(g.perm(gens[k])) < 0)
                        for (auto& row : twist[k])
                            for (Int& x : row) x = -x;
                auto chi2 = rep_character(t, gens, twist);
                if (chi2 && *chi2 == comp.chi) return {gens, std::move(twist)};
            }
        }
    }
    throw UnsupportedComponent("no registered integral representation matches "
                               "component " + std::to_string(comp.index) + " of " +
                               g.name());
}

GammaModule module_from_type(const ModuleType& t, const CharacterTable& tab,
                             const std::vector<AlgebraComponent>& comps) {
    GammaModule out;
    out.group = tab.group;
    out.gen_ids = default_generators(*tab.group);
    std::size_t ng = out.gen_ids.size();
    out.mod.ops.assign(ng, IMat{});
    for (const TypeEntry& e : t.entries) {
        const AlgebraComponent& c = comps.at(static_cast<std::size_t>(e.comp_pos));
        RegistryRep rep = registry_rep(tab, c);
        if (rep.gen_ids != out.gen_ids)
            throw InvariantViolated("registry generator mismatch");
        if (e.q != e.p || e.h != c.h)
            throw UnsupportedComponent("type entry outside the split q=p case");
        // one block of h copies of Z/p^part per partition part
        std::vector<long> parts = e.lambda.parts;
        std::sort(parts.begin(), parts.end()); // ascending orders
        for (long part : parts) {
            Int pk = pow_int(e.p, part);
            std::size_t base = out.mod.orders.size();
            std::size_t hdim = rep.mats[0].size();
            for (std::size_t c2 = 0; c2 < hdim; ++c2) out.mod.orders.push_back(pk);
            for (std::size_t k = 0; k < ng; ++k) {
                IMat& big = out.mod.ops[k];
                std::size_t nn = out.mod.orders.size();
                for (auto& row : big) row.resize(nn, 0);
                big.resize(nn, IVec(nn, 0));
                for (std::size_t i = 0; i < hdim; ++i)
                    for (std::size_t j = 0; j < hdim; ++j) {
                        Int v = rep.mats[k][i][j] % pk;
                        if (v < 0) v += pk;
                        big[base + i][base + j] = v;
                    }
            }
        }
    }
    validate_gamma(out);
    return out;
}

ModuleType type_of_module(const GammaModule& m, const CharacterTable& tab,
                          const std::vector<AlgebraComponent>& comps) {
    (void)tab;
    ModuleType out;
    if (m.mod.is_zero()) return out;
    full_action(m); // validates
    // split every coordinate into prime-power coordinates (CRT)
    GammaModule split;
    split.group = m.group;
    split.gen_ids = m.gen_ids;
    std::map<Int, std::vector<std::size_t>> block; // p -> new coordinate ids
    std::vector<std::size_t> src_of;               // new coord -> old coord
    for (std::size_t j = 0; j < m.mod.orders.size(); ++j) {
        Int d = m.mod.orders[j];
        for (Int p = 2; p * p <= d; ++p) {
            if (d % p != 0) continue;
            Int pk = 1;
            while (d % p == 0) { pk *= p; d /= p; }
            block[p].push_back(split.mod.orders.size());
            split.mod.orders.push_back(pk);
            src_of.push_back(j);
        }
        if (d > 1) {
            block[d].push_back(split.mod.orders.size());
            split.mod.orders.push_back(d);
            src_of.push_back(j);
        }
    }
    std::size_t ns = split.mod.orders.size();
    for (const IMat& op : m.mod.ops) {
        IMat so(ns, IVec(ns, 0));
        for (const auto& [p, coords] : block)
            for (std::size_t a : coords)
                for (std::size_t b : coords)
                    so[a][b] = op[src_of[a]][src_of[b]];
        split.mod.ops.push_back(mod_reduce(std::move(so), split.mod.orders));
    }
    std::vector<IMat> rep = full_action(split);

    const Group& g = *m.group;
    for (const auto& [p, coords] : block) {
        std::size_t bn = coords.size();
        std::vector<Int> borders;
        long kmax = 0;
        for (std::size_t c : coords) {
            borders.push_back(split.mod.orders[c]);
            kmax = std::max(kmax, valuation(split.mod.orders[c], p));
        }
        Int pK = pow_int(p, kmax);
        OpModule base{borders, {}};
        Int covered = 1;
        for (const AlgebraComponent& comp : comps) {
            // project with e_i mod p^K; usable only when e_i is p-integral
            bool integral = true;
            for (const Rat& c : comp.idempotent)
                if (valuation(c.get_den(), p) > 0) { integral = false; break; }
            if (!integral) continue;
            IMat e(bn, IVec(bn, 0));
            for (int x = 0; x < g.size(); ++x) {
                const Rat& c = comp.idempotent[static_cast<std::size_t>(x)];
                if (c == 0) continue;
                Int inv;
                if (mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(),
                               pK.get_mpz_t()) == 0)
                    throw InvariantViolated("p-unit denominator failed to invert");
                Int scal = (c.get_num() * inv) % pK;
                const IMat& ax = rep[static_cast<std::size_t>(x)];
                for (std::size_t i = 0; i < bn; ++i)
                    for (std::size_t j = 0; j < bn; ++j)
                        e[i][j] += scal * ax[coords[i]][coords[j]];
            }
            e = mod_reduce(std::move(e), borders);
            std::vector<std::vector<long>> gens;
            for (std::size_t j = 0; j < bn; ++j) {
                std::vector<long> v(bn);
                for (std::size_t i = 0; i < bn; ++i) v[i] = e[i][j].get_si();
                gens.push_back(std::move(v));
            }
            OpModule img = submodule_structure(base, gens);
            covered *= img.size();
            if (img.is_zero()) continue;
            if (comp.index == 1)
                throw NotHomogeneous("module has a nonzero invariant part");
            if (!(comp.split_registered && comp.center_degree == 1))
                throw UnsupportedComponent(
                    "module meets component " + std::to_string(comp.index) +
                    " of " + g.name() + ", which is outside the split registry");
            Partition full = partition_of_orders(img.orders, p);
            // each part must occur with multiplicity divisible by h
            std::vector<long> parts;
            std::size_t i = 0;
            long h = comp.h.get_si();
            while (i < full.parts.size()) {
                std::size_t j2 = i;
                while (j2 < full.parts.size() && full.parts[j2] == full.parts[i])
                    ++j2;
                long mult = static_cast<long>(j2 - i);
                if (mult % h != 0)
                    throw NotHomogeneous(
                        "invariant multiplicities not divisible by the component "
                        "degree (bad prime or corrupted action)");
                for (long r = 0; r < mult / h; ++r) parts.push_back(full.parts[i]);
                i = j2;
            }
            TypeEntry te;
            te.comp_pos = comp.index - 1;
            te.p = p;
            te.lambda = Partition(std::move(parts));
            te.h = comp.h;
            te.q = p;
            out.entries.push_back(std::move(te));
        }
        if (covered != base.size())
            throw BadPrime("module has a nonzero part in a component whose "
                           "idempotent is not integral at " + p.get_str());
    }
    std::sort(out.entries.begin(), out.entries.end());
    return out;
}

std::vector<GammaModule> bruteforce_module_structures(
    const Group& g, const std::vector<Int>& invariants,
    const BruteforceCaps& caps) {
    if (g.size() > caps.max_group)
        throw TooLarge("group exceeds the brute-force cap");
    Int total = 1;
    for (const Int& d : invariants) {
        if (d < 2) throw ParseError("abelian invariants must be >= 2");
        total *= d;
    }
    if (total > caps.max_order)
        throw TooLarge("module order exceeds the brute-force cap");

    std::vector<int> gens = default_generators(g);
    std::vector<GammaModule> found;
    if (invariants.empty()) {
        GammaModule z;
        z.group = &g;
        z.gen_ids = gens;
        z.mod.ops.assign(gens.size(), IMat{});
        validate_gamma(z);
        found.push_back(std::move(z));
        return found;
    }

    OpModule a{invariants, {}};
    ModuleTable tb(a);
    std::size_t n = invariants.size();
    // enumerate automorphism matrices of the plain abelian group
    struct AutCand {
        IMat mat;
        long order;
    };
    std::vector<AutCand> auts;
    std::vector<long> img(n, 0);
    IMat one = mod_reduce(identity_imat(n), invariants);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == n) {
            std::vector<long> idx(n);
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<long> e = tb.element(img[c]);
                idx[c] = img[c];
            }
            if (span_elements(tb, idx).size() != static_cast<std::size_t>(tb.size()))
                return;
            IMat f(n, IVec(n, 0));
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<long> e = tb.element(img[c]);
                for (std::size_t i = 0; i < n; ++i) f[i][c] = e[i];
            }
            IMat pw = f;
            long ord = 1;
            while (pw != one) {
                pw = mul_mod(pw, f, invariants);
                ++ord;
            }
            auts.push_back({std::move(f), ord});
            return;
        }
        for (long x = 0; x < tb.size(); ++x) {
            // image of a generator of order d_j must be killed by d_j
            if (invariants[j] % tb.order_of(x) != 0) continue;
            img[j] = x;
            rec(j + 1);
        }
    };
    rec(0);

    std::vector<std::size_t> pick(gens.size(), 0);
    std::function<void(std::size_t)> assign = [&](std::size_t k) {
        if (k == gens.size()) {
            GammaModule m;
            m.group = &g;
            m.gen_ids = gens;
            m.mod.orders = invariants;
            for (std::size_t i = 0; i < gens.size(); ++i)
                m.mod.ops.push_back(auts[pick[i]].mat);
            try {
                validate_gamma(m);
            } catch (const InvariantViolated&) {
                return;
            }
            for (const GammaModule& prev : found)
                if (gamma_isomorphic(prev, m)) return;
            found.push_back(std::move(m));
            return;
        }
        long go = g.order_of(gens[k]);
        for (std::size_t i = 0; i < auts.size(); ++i) {
            if (go % auts[i].order != 0) continue;
            pick[k] = i;
            assign(k + 1);
        }
    };
    assign(0);
    return found;
}

namespace {

OpModule with_full_ops(const GammaModule& m) {
    OpModule out;
    out.orders = m.mod.orders;
    out.ops = full_action(m);
    return out;
}

} // namespace

Int count_maps_bruteforce(MapKind kind, const GammaModule& src,
                          const GammaModule& dst, const BruteforceCaps& caps) {
    if (src.group != dst.group)
        throw ParseError("map counting requires modules over the same group");
    if (src.group->size() > caps.max_group)
        throw TooLarge("group exceeds the brute-force cap");
    if (src.size() > caps.max_count_order || dst.size() > caps.max_count_order)
        throw TooLarge("module order exceeds the map-counting cap");
    switch (kind) {
        case MapKind::Hom: return count_hom_op(with_full_ops(src), with_full_ops(dst));
        case MapKind::Sur: return count_sur_op(with_full_ops(src), with_full_ops(dst));
        case MapKind::Aut: return count_aut_op(with_full_ops(dst));
    }
    throw ParseError("unknown map kind");
}

bool gamma_isomorphic(const GammaModule& a, const GammaModule& b) {
    if (a.group != b.group)
        throw ParseError("isomorphism test requires modules over the same group");
    return modules_isomorphic_op(with_full_ops(a), with_full_ops(b));
}

} // namespace clm
