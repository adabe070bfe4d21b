#include "clm/class_triple.hpp"

#include "clm/errors.hpp"

#include <algorithm>
#include <functional>

namespace clm {

namespace {

// Extensions get their own cap: the base-group cap would already be consumed
// by the quotient alone.
constexpr int kExtensionCap = 1024;

std::vector<std::vector<int>> fiber_candidates(const ClassTriple& t,
                                               const std::vector<int>& gens) {
    const Group& g = *t.total;
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (int x = 0; x < g.size(); ++x)
            if (t.proj(x) == t.proj(gens[k]) && g.order_of(x) == g.order_of(gens[k]))
                candidates[k].push_back(x);
    return candidates;
}

// DFS over automorphisms of t.total that commute with the projection; calls
// visit(map) for each one and stops early if visit returns true.
bool for_each_fiber_automorphism(const ClassTriple& t,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
    const Group& g = *t.total;
    std::vector<int> gens = group_minimal_generators(g);
    std::vector<std::vector<int>> candidates = fiber_candidates(t, gens);
    std::vector<int> imgs(gens.size(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == gens.size()) {
            auto map = extend_generator_map(g, gens, g, imgs);
            if (!map) return false;
            std::vector<bool> hit(g.size(), false);
            for (int v : *map) hit[static_cast<std::size_t>(v)] = true;
            if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
            return visit(*map);
        }
        for (int c : candidates[k]) {
            imgs[k] = c;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

} // namespace

ClassTriple build_class_triple(const GammaModule& h, int s_elem) {
    const Group& gamma = *h.group;
    if (gamma.op(s_elem, s_elem) != gamma.identity())
        throw ParseError("archimedean element must have order dividing 2");
    Int hsize = h.size();
    Int gc;
    Int gsize(gamma.size());
    mpz_gcd(gc.get_mpz_t(), hsize.get_mpz_t(), gsize.get_mpz_t());
    if (gc != 1)
        throw InvariantViolated("kernel order must be coprime to the group order");
    if (fixed_and_norm(h, full_subgroup(gamma)).fixed_order != 1)
        throw InvariantViolated("kernel has nonzero fixed points");
    if (hsize * gsize > kExtensionCap)
        throw TooLarge("semidirect product exceeds the extension cap");

    std::vector<IMat> rep = full_action(h);
    ModuleTable tb(h.mod);
    long hn = tb.size();
    int gn = gamma.size();
    // element id of (m, gamma) is m*gn + gamma
    std::vector<std::vector<long>> act(static_cast<std::size_t>(gn));
    for (int x = 0; x < gn; ++x) {
        act[static_cast<std::size_t>(x)].resize(static_cast<std::size_t>(hn));
        for (long m = 0; m < hn; ++m) {
            std::vector<long> e = tb.element(m);
            IVec v(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) v[i] = e[i];
            IVec w = imat_apply(rep[static_cast<std::size_t>(x)], v);
            std::vector<long> we(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                Int c = w[i] % h.mod.orders[i];
                if (c < 0) c += h.mod.orders[i];
                we[i] = c.get_si();
            }
            act[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)] =
                tb.index(we);
        }
    }
    long n = hn * gn;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (long m1 = 0; m1 < hn; ++m1)
        for (int x1 = 0; x1 < gn; ++x1)
            for (long m2 = 0; m2 < hn; ++m2)
                for (int x2 = 0; x2 < gn; ++x2) {
                    long m = tb.add(m1, act[static_cast<std::size_t>(x1)]
                                            [static_cast<std::size_t>(m2)]);
                    int x = gamma.op(x1, x2);
                    table[static_cast<std::size_t>(m1 * gn + x1)]
                         [static_cast<std::size_t>(m2 * gn + x2)] =
                        static_cast<int>(m * gn + x);
                }
    ClassTriple out;
    out.total = std::make_shared<Group>(Group::from_table(
        gamma.name() + "-extension", std::move(table), kExtensionCap));
    out.gamma = &gamma;
    out.proj.src = out.total.get();
    out.proj.dst = &gamma;
    out.proj.map.resize(static_cast<std::size_t>(n));
    for (long m = 0; m < hn; ++m)
        for (int x = 0; x < gn; ++x)
            out.proj.map[static_cast<std::size_t>(m * gn + x)] = x;
    out.s_elem = s_elem;
    out.c_elem = s_elem; // pair (0, s)
    for (long m = 0; m < hn; ++m)
        out.kernel_elems.push_back(static_cast<int>(m * gn + gamma.identity()));
    check_class_triple(out);
    return out;
}

void check_class_triple(const ClassTriple& t) {
    const Group& g = *t.total;
    t.proj.check();
    if (!t.proj.is_surjective()) throw InvariantViolated("projection not surjective");
    std::vector<int> ker = t.proj.kernel();
    if (ker != t.kernel_elems) throw InvariantViolated("kernel record mismatch");
    for (int a : ker)
        for (int b : ker)
            if (g.op(a, b) != g.op(b, a))
                throw InvariantViolated("kernel is not abelian");
    Int kn(static_cast<long>(ker.size()));
    Int qn(t.gamma->size());
    Int gc;
    mpz_gcd(gc.get_mpz_t(), kn.get_mpz_t(), qn.get_mpz_t());
    if (gc != 1)
        throw InvariantViolated("kernel order not coprime to the quotient order");
    // fixed points of the conjugation action on the kernel
    for (int k : ker) {
        if (k == g.identity()) continue;
        bool fixed = true;
        for (int x = 0; x < g.size() && fixed; ++x)
            if (g.conjugate(x, k) != k) fixed = false;
        if (fixed) throw InvariantViolated("kernel has nonzero fixed points");
    }
    if (g.op(t.c_elem, t.c_elem) != g.identity())
        throw InvariantViolated("archimedean element order does not divide 2");
    if (t.proj(t.c_elem) != t.s_elem)
        throw InvariantViolated("projection of c is not s");
    if (t.c_elem != g.identity() &&
        std::binary_search(ker.begin(), ker.end(), t.c_elem))
        throw InvariantViolated("image of c meets the kernel");
}

Int triple_aut_formula(const ClassTriple& t, const GammaModule& h) {
    Subgroup s_gen = subgroup_closure(*t.gamma, {t.s_elem});
    Int fixed = fixed_and_norm(h, s_gen).fixed_order;
    Int aut = count_maps_bruteforce(MapKind::Aut, h, h);
    return fixed * aut;
}

Int triple_aut_workbound(const ClassTriple& t) {
    std::vector<int> gens = group_minimal_generators(*t.total);
    std::vector<std::vector<int>> candidates = fiber_candidates(t, gens);
    Int work = 1;
    for (const auto& c : candidates) work *= Int(static_cast<long>(c.size()));
    return work;
}

Int triple_aut_bruteforce(const ClassTriple& t) {
    Int count = 0;
    for_each_fiber_automorphism(t, [&](const std::vector<int>& map) {
        if (map[static_cast<std::size_t>(t.c_elem)] == t.c_elem) ++count;
        return false;
    });
    return count;
}

bool verify_uniqueness(const GammaModule& h, int s_elem) {
    ClassTriple canon = build_class_triple(h, s_elem);
    const Group& g = *canon.total;
    std::vector<int> lifts;
    for (int x = 0; x < g.size(); ++x) {
        if (canon.proj(x) != s_elem) continue;
        if (g.op(x, x) != g.identity()) continue;
        if (x != g.identity() &&
            std::binary_search(canon.kernel_elems.begin(),
                               canon.kernel_elems.end(), x))
            continue;
        lifts.push_back(x);
    }
    for (int c : lifts) {
        bool found = for_each_fiber_automorphism(
            canon, [&](const std::vector<int>& map) {
                return map[static_cast<std::size_t>(canon.c_elem)] == c;
            });
        if (!found) return false;
    }
    return true;
}

Int splitting_count(const ClassTriple& t) {
    const Group& g = *t.total;
    const Group& gamma = *t.gamma;
    std::vector<int> gens = group_minimal_generators(gamma);
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (int x = 0; x < g.size(); ++x)
            if (t.proj(x) == gens[k]) candidates[k].push_back(x);
    Int count = 0;
    std::vector<int> imgs(gens.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == gens.size()) {
            auto map = extend_generator_map(gamma, gens, g, imgs);
            if (!map) return;
            // a splitting must be a section of the projection
            for (int x = 0; x < gamma.size(); ++x)
                if (t.proj((*map)[static_cast<std::size_t>(x)]) != x) return;
            ++count;
            return;
        }
        for (int c : candidates[k]) {
            imgs[k] = c;
            rec(k + 1);
        }
    };
    rec(0);
    return count;
}

} // namespace clm
