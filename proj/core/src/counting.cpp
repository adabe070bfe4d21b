#include "clm/counting.hpp"

#include "clm/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace clm {

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    for (long x : parts)
        if (x <= 0) throw ParseError("partition parts must be positive");
}

Partition Partition::transpose() const {
    Partition t;
    for (long i = 1; i <= max_part(); ++i) {
        long cnt = 0;
        for (long x : parts)
            if (x >= i) ++cnt;
        t.parts.push_back(cnt);
    }
    return t;
}

long Partition::sum() const {
    long s = 0;
    for (long x : parts) s += x;
    return s;
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(parts[i]);
    }
    return out;
}

namespace {

void partitions_rec(long max_part, long budget, std::vector<long>& cur,
                    std::vector<Partition>& out) {
    Partition p;
    p.parts = cur;
    out.push_back(std::move(p));
    long hi = cur.empty() ? max_part : std::min(max_part, cur.back());
    for (long next = hi; next >= 1; --next) {
        if (next > budget) continue;
        cur.push_back(next);
        partitions_rec(max_part, budget - next, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_bounded(long max_part, long max_sum) {
    std::vector<Partition> out;
    std::vector<long> cur;
    partitions_rec(max_part, max_sum, cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.sum() != b.sum()) return a.sum() < b.sum();
        return a.parts < b.parts;
    });
    return out;
}

Int hom_count_formula(const Int& q, const Partition& lambda, const Partition& mu) {
    Partition lt = lambda.transpose(), mt = mu.transpose();
    long e = 0;
    for (std::size_t i = 0; i < std::min(lt.parts.size(), mt.parts.size()); ++i)
        e += lt.parts[i] * mt.parts[i];
    return pow_int(q, e);
}

Int aut_count_formula(const Int& q, const Partition& mu) {
    Partition mt = mu.transpose();
    long e = 0;
    for (long x : mt.parts) e += x * x;
    Rat out(pow_int(q, e));
    // multiplicity k_i of each distinct part contributes (k_i)_q
    std::size_t i = 0;
    while (i < mu.parts.size()) {
        std::size_t j = i;
        while (j < mu.parts.size() && mu.parts[j] == mu.parts[i]) ++j;
        for (std::size_t m = 1; m <= j - i; ++m)
            out *= Rat(1) - Rat(1) / Rat(pow_int(q, static_cast<long>(m)));
        i = j;
    }
    if (!is_integral(out)) throw InvariantViolated("non-integral automorphism count");
    return out.get_num();
}

Partition partition_of_orders(const std::vector<Int>& orders, const Int& p) {
    std::vector<long> parts;
    for (const Int& d : orders) {
        long v = valuation(d, p);
        if (pow_int(p, v) != d)
            throw NotHomogeneous("group order is not a power of " + p.get_str());
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

OpModule abelian_of_type(const Int& q, const Partition& lambda, const Int& h) {
    OpModule m;
    long copies = h.get_si();
    for (auto it = lambda.parts.rbegin(); it != lambda.parts.rend(); ++it)
        for (long c = 0; c < copies; ++c) m.orders.push_back(pow_int(q, *it));
    return m;
}

Int sur_count_formula(const Int& q, const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return 1;
    if (lambda.empty()) return 0;
    static std::map<std::string, Int> cache;
    std::string key = q.get_str() + "|" + lambda.str() + "|" + mu.str();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    // Moebius inversion over the subgroup lattice of the type-mu group:
    // |Sur(A,B)| = sum_{S <= B} mu(S,B) |Hom(A,S)|
    OpModule b = abelian_of_type(q, mu, 1);
    ModuleTable tbl(b);
    std::vector<std::vector<long>> subs = module_subgroups(tbl, false);
    std::vector<Int> moeb = lattice_moebius_to_top(subs);
    Int total = 0;
    for (std::size_t s = 0; s < subs.size(); ++s) {
        if (moeb[s] == 0) continue;
        std::vector<std::vector<long>> gens;
        for (long e : subs[s]) gens.push_back(tbl.element(e));
        OpModule sub = submodule_structure(b, gens);
        Partition nu = partition_of_orders(sub.orders, q);
        total += moeb[s] * hom_count_formula(q, lambda, nu);
    }
    cache[key] = total;
    return total;
}

Int submodule_count_bruteforce(const Int& q, const Partition& lambda,
                               const Partition& mu) {
    OpModule b = abelian_of_type(q, lambda, 1);
    ModuleTable tbl(b);
    Int count = 0;
    for (const auto& sub : module_subgroups(tbl, false)) {
        std::vector<std::vector<long>> gens;
        for (long e : sub) gens.push_back(tbl.element(e));
        OpModule s = submodule_structure(b, gens);
        if (partition_of_orders(s.orders, q) == mu) ++count;
    }
    return count;
}

Int ModuleType::order() const {
    Int out = 1;
    for (const TypeEntry& e : entries)
        out *= pow_int(e.q, e.h.get_si() * e.lambda.sum());
    return out;
}

std::string ModuleType::str() const {
    if (entries.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(entries[i].comp_pos + 1);
        out += ':';
        out += entries[i].p.get_str();
        out += ':';
        out += entries[i].lambda.str();
    }
    return out;
}

Int count_maps_formula(MapKind kind, const ModuleType& src, const ModuleType& dst) {
    if (kind == MapKind::Aut && !(src == dst))
        throw ParseError("automorphism count requires equal source and target types");
    // align entries by (component, prime); counts multiply across local pieces
    std::map<std::pair<int, Int>, std::pair<Partition, Partition>> aligned;
    std::map<std::pair<int, Int>, Int> qs;
    for (const TypeEntry& e : src.entries) {
        aligned[{e.comp_pos, e.p}].first = e.lambda;
        qs[{e.comp_pos, e.p}] = e.q;
    }
    for (const TypeEntry& e : dst.entries) {
        aligned[{e.comp_pos, e.p}].second = e.lambda;
        auto it = qs.find({e.comp_pos, e.p});
        if (it != qs.end() && it->second != e.q)
            throw InvariantViolated("residue size mismatch between aligned entries");
        qs[{e.comp_pos, e.p}] = e.q;
    }
    Int out = 1;
    for (const auto& [key, lm] : aligned) {
        const Int& q = qs[key];
        switch (kind) {
            case MapKind::Hom: out *= hom_count_formula(q, lm.first, lm.second); break;
            case MapKind::Sur: out *= sur_count_formula(q, lm.first, lm.second); break;
            case MapKind::Aut: out *= aut_count_formula(q, lm.second); break;
        }
        if (out == 0) return 0;
    }
    return out;
}

std::vector<ModuleType> enumerate_types(const std::vector<ComponentRef>& comps,
                                        const TruncationSpec& trunc) {
    for (const auto& [p, n] : trunc.prime_exponents)
        if (n < 0) throw ParseError("truncation exponent must be >= 0");
    // (comp, prime) slots in canonical order
    struct Slot {
        ComponentRef comp;
        Int p;
        std::vector<Partition> choices;
    };
    std::vector<Slot> slots;
    for (const ComponentRef& c : comps)
        for (const auto& [p, n] : trunc.prime_exponents) {
            if (n == 0) continue;
            Slot s{c, p, {}};
            if (!trunc.order_bound)
                throw CapExceeded("type enumeration needs an order bound to be finite");
            // max |lambda|: q^{h*sum} <= bound
            long max_sum = 0;
            Int pw = 1;
            while (true) {
                pw *= pow_int(p, c.h.get_si());
                if (pw > *trunc.order_bound) break;
                ++max_sum;
            }
            s.choices = partitions_bounded(n, max_sum);
            slots.push_back(std::move(s));
        }
    std::vector<ModuleType> out;
    std::vector<std::size_t> pick(slots.size(), 0);
    // odometer over per-slot partition choices, filtered by total order bound
    while (true) {
        ModuleType t;
        Int order = 1;
        bool ok = true;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            const Partition& lam = slots[i].choices[pick[i]];
            if (lam.empty()) continue;
            order *= pow_int(slots[i].p, slots[i].comp.h.get_si() * lam.sum());
            if (trunc.order_bound && order > *trunc.order_bound) { ok = false; break; }
            t.entries.push_back({slots[i].comp.pos, slots[i].p, lam, slots[i].comp.h,
                                 slots[i].p});
        }
        if (ok) out.push_back(std::move(t));
        std::size_t i = slots.size();
        while (i > 0) {
            --i;
            if (++pick[i] < slots[i].choices.size()) break;
            pick[i] = 0;
            if (i == 0) { i = slots.size() + 1; break; }
        }
        if (slots.empty() || i == slots.size() + 1) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ModuleType parse_module_type(const std::string& text,
                             const std::vector<AlgebraComponent>& comps) {
    ModuleType t;
    if (text.empty() || text == "0") return t;
    std::istringstream in(text);
    std::string entry;
    while (std::getline(in, entry, ';')) {
        std::istringstream es(entry);
        std::string comp_s, p_s, lam_s;
        if (!std::getline(es, comp_s, ':') || !std::getline(es, p_s, ':'))
            throw ParseError("module type entry must be comp:p:parts");
        std::getline(es, lam_s, ':');
        int idx;
        Int p;
        try {
            idx = std::stoi(comp_s);
            p = Int(p_s);
        } catch (const std::exception&) {
            throw ParseError("bad number in module type: " + entry);
        }
        if (idx < 2 || idx > static_cast<int>(comps.size()))
            throw ParseError("component index out of range (nontrivial components only)");
        if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
            throw ParseError("module type prime is not prime: " + p_s);
        TypeEntry e;
        e.comp_pos = idx - 1;
        e.p = p;
        e.h = comps[static_cast<std::size_t>(idx - 1)].h;
        e.q = p;
        std::vector<long> parts;
        std::istringstream ls(lam_s);
        std::string part;
        while (std::getline(ls, part, '.')) {
            try {
                parts.push_back(std::stol(part));
            } catch (const std::exception&) {
                throw ParseError("bad partition part: " + part);
            }
        }
        if (parts.empty()) continue; // empty partition entry means no entry
        e.lambda = Partition(std::move(parts));
        for (const TypeEntry& prev : t.entries)
            if (prev.comp_pos == e.comp_pos && prev.p == e.p)
                throw ParseError("duplicate (component, prime) pair in type");
        t.entries.push_back(std::move(e));
    }
    std::sort(t.entries.begin(), t.entries.end());
    return t;
}

} // namespace clm
