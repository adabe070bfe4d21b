#include "clm/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace clm {

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
}

Perm perm_inverse(const Perm& a) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
    return out;
}

Group Group::from_perm_generators(std::string name, int degree,
                                  std::vector<Perm> gens, int cap) {
    for (const Perm& p : gens) {
        if (static_cast<int>(p.size()) != degree)
            throw ParseError("generator degree mismatch in group " + name);
        Perm s = p;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < degree; ++i)
            if (s[i] != i) throw ParseError("not a permutation in group " + name);
    }
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<Perm> closure{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& x : frontier)
            for (const Perm& g : gens) {
                Perm y = perm_compose(x, g);
                if (closure.insert(y).second) {
                    if (static_cast<int>(closure.size()) > cap)
                        throw CapExceeded("group " + name + " exceeds cap " +
                                          std::to_string(cap));
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    Group g;
    g.name_ = std::move(name);
    g.degree_ = degree;
    g.perms_.assign(closure.begin(), closure.end()); // sorted: canonical ids
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < g.perms_.size(); ++i)
        index[g.perms_[i]] = static_cast<int>(i);
    int n = static_cast<int>(g.perms_.size());
    g.mult_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.mult_[i][j] = index.at(perm_compose(g.perms_[i], g.perms_[j]));
    for (const Perm& p : gens) g.gen_ids_.push_back(index.at(p));
    g.finish_init();
    return g;
}

Group Group::from_table(std::string name, std::vector<std::vector<int>> table, int cap) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw NotAGroup("empty table");
    if (n > cap) throw CapExceeded("group " + name + " exceeds cap");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw NotAGroup("table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
    }
    Group g;
    g.name_ = std::move(name);
    g.mult_ = std::move(table);
    // identity
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = g.mult_[e][x] == x && g.mult_[x][e] == x;
        if (ok) { id = e; break; }
    }
    if (id < 0) throw NotAGroup("no identity element");
    // associativity via Light's test: checking (a g) b = a (g b) for g in a
    // generating set of the magma is equivalent to the full cubic scan
    std::vector<int> mgens;
    {
        std::vector<bool> in(static_cast<std::size_t>(n), false);
        in[static_cast<std::size_t>(id)] = true;
        int covered = 1;
        while (covered < n) {
            int pick = -1;
            for (int x = 0; x < n; ++x)
                if (!in[static_cast<std::size_t>(x)]) { pick = x; break; }
            mgens.push_back(pick);
            // closure under the raw table
            std::vector<int> frontier{pick};
            in[static_cast<std::size_t>(pick)] = true;
            ++covered;
            while (!frontier.empty()) {
                std::vector<int> next;
                for (int x : frontier)
                    for (int y = 0; y < n; ++y) {
                        if (!in[static_cast<std::size_t>(y)]) continue;
                        for (int z : {g.mult_[x][y], g.mult_[y][x]})
                            if (!in[static_cast<std::size_t>(z)]) {
                                in[static_cast<std::size_t>(z)] = true;
                                next.push_back(z);
                                ++covered;
                            }
                    }
                frontier = std::move(next);
            }
        }
    }
    for (int ge : mgens)
        for (int a = 0; a < n; ++a) {
            const std::vector<int>& ag = g.mult_[g.mult_[a][ge]];
            const std::vector<int>& arow = g.mult_[a];
            const std::vector<int>& grow = g.mult_[ge];
            for (int b = 0; b < n; ++b)
                if (ag[b] != arow[grow[b]])
                    throw NotAGroup("associativity fails");
        }
    // inverses
    for (int a = 0; a < n; ++a) {
        bool has = false;
        for (int b = 0; b < n && !has; ++b) has = g.mult_[a][b] == id;
        if (!has) throw NotAGroup("missing inverse");
    }
    g.finish_init();
    return g;
}

void Group::finish_init() {
    int n = size();
    // identity
    id_ = -1;
    for (int e = 0; e < n && id_ < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mult_[e][x] == x;
        if (ok) id_ = e;
    }
    if (id_ < 0) throw NotAGroup("no identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mult_[a][b] == id_) { inv_[a] = b; break; }
    order_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != id_) { x = mult_[x][a]; ++k; }
        order_[a] = k;
    }
}

int Group::power(int a, long k) const {
    int o = order_[a];
    k %= o;
    if (k < 0) k += o;
    int out = id_;
    for (long i = 0; i < k; ++i) out = mult_[out][a];
    return out;
}

int Group::exponent() const {
    long e = 1;
    for (int a = 0; a < size(); ++a) e = std::lcm(e, static_cast<long>(order_[a]));
    return static_cast<int>(e);
}

std::optional<int> Group::find_perm(const Perm& p) const {
    auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
    if (it != perms_.end() && *it == p)
        return static_cast<int>(it - perms_.begin());
    return std::nullopt;
}

std::string Group::element_name(int a) const {
    if (perms_.empty()) return "g" + std::to_string(a);
    const Perm& p = perms_[a];
    if (a == id_) return "()";
    std::ostringstream out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << (j + 1); // 1-based in reports
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out << ')';
    }
    return out.str();
}

bool Subgroup::contains(int e) const {
    return std::binary_search(elems.begin(), elems.end(), e);
}

Subgroup subgroup_closure(const Group& g, std::vector<int> gen_ids) {
    std::set<int> cl{g.identity()};
    std::vector<int> frontier{g.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int s : gen_ids) {
                int y = g.op(x, s);
                if (cl.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    Subgroup h;
    h.parent = &g;
    h.elems.assign(cl.begin(), cl.end());
    h.gens = std::move(gen_ids);
    return h;
}

Subgroup trivial_subgroup(const Group& g) { return subgroup_closure(g, {}); }

Subgroup full_subgroup(const Group& g) {
    std::vector<int> gens;
    for (int a = 0; a < g.size(); ++a) gens.push_back(a);
    return subgroup_closure(g, gens);
}

Subgroup subgroup_from_elements(const Group& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup h;
    h.parent = &g;
    h.elems = elems;
    if (!h.contains(g.identity())) throw NotASubgroup("missing identity");
    for (int a : elems) {
        if (!h.contains(g.inverse(a))) throw NotASubgroup("not inverse-closed");
        for (int b : elems)
            if (!h.contains(g.op(a, b))) throw NotASubgroup("not closed");
    }
    h.gens = elems;
    return h;
}

bool is_normal(const Group& g, const Subgroup& h) {
    for (int x = 0; x < g.size(); ++x)
        for (int a : h.elems)
            if (!h.contains(g.conjugate(x, a))) return false;
    return true;
}

std::vector<std::vector<int>> all_subgroups(const Group& g) {
    std::set<std::vector<int>> found;
    found.insert({g.identity()});
    std::vector<std::vector<int>> frontier{{g.identity()}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& s : frontier)
            for (int x = 0; x < g.size(); ++x) {
                if (std::binary_search(s.begin(), s.end(), x)) continue;
                std::vector<int> gens = s;
                gens.push_back(x);
                Subgroup bigger = subgroup_closure(g, gens);
                if (found.insert(bigger.elems).second) next.push_back(bigger.elems);
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

void GroupHom::check() const {
    if (map.size() != static_cast<std::size_t>(src->size()))
        throw InvariantViolated("hom map size mismatch");
    if (map[src->identity()] != dst->identity())
        throw InvariantViolated("hom does not preserve identity");
    for (int a = 0; a < src->size(); ++a)
        for (int b = 0; b < src->size(); ++b)
            if (map[src->op(a, b)] != dst->op(map[a], map[b]))
                throw InvariantViolated("hom not multiplicative");
}

bool GroupHom::is_surjective() const {
    std::set<int> im(map.begin(), map.end());
    return static_cast<int>(im.size()) == dst->size();
}

std::vector<int> GroupHom::kernel() const {
    std::vector<int> k;
    for (int a = 0; a < src->size(); ++a)
        if (map[a] == dst->identity()) k.push_back(a);
    return k;
}

std::vector<ConjugacyClass> conjugacy_classes(const Group& g) {
    int n = g.size();
    std::vector<int> cls(n, -1);
    std::vector<ConjugacyClass> out;
    for (int a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        ConjugacyClass c;
        c.rep = a;
        for (int x = 0; x < n; ++x) {
            int y = g.conjugate(x, a);
            if (cls[y] < 0) {
                cls[y] = static_cast<int>(out.size());
                c.members.push_back(y);
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.rep = c.members.front();
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(),
                     [&](const ConjugacyClass& a, const ConjugacyClass& b) {
                         int oa = g.order_of(a.rep), ob = g.order_of(b.rep);
                         if (oa != ob) return oa < ob;
                         if (a.members.size() != b.members.size())
                             return a.members.size() < b.members.size();
                         return a.rep < b.rep;
                     });
    return out;
}

QuotientResult coset_and_quotient(const Group& g, const Subgroup& h) {
    if (h.parent != &g) throw NotASubgroup("subgroup belongs to another group");
    subgroup_from_elements(g, h.elems); // revalidate closure
    QuotientResult res;
    res.coset_of.assign(g.size(), -1);
    for (int a = 0; a < g.size(); ++a) {
        if (res.coset_of[a] >= 0) continue;
        std::vector<int> coset;
        for (int s : h.elems) coset.push_back(g.op(a, s));
        std::sort(coset.begin(), coset.end());
        int idx = static_cast<int>(res.cosets.size());
        for (int x : coset) res.coset_of[x] = idx;
        res.cosets.push_back(std::move(coset));
    }
    // canonical coset order: by minimal member (identity coset first)
    std::vector<int> order(res.cosets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return res.cosets[a].front() < res.cosets[b].front();
    });
    std::vector<std::vector<int>> sorted;
    std::vector<int> newidx(res.cosets.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        newidx[order[i]] = static_cast<int>(i);
        sorted.push_back(res.cosets[order[i]]);
    }
    res.cosets = std::move(sorted);
    for (int& c : res.coset_of) c = newidx[c];

    res.normal = is_normal(g, h);
    if (res.normal) {
        int k = static_cast<int>(res.cosets.size());
        std::vector<std::vector<int>> table(k, std::vector<int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                table[i][j] =
                    res.coset_of[g.op(res.cosets[i].front(), res.cosets[j].front())];
        res.quotient = Group::from_table(g.name() + "/" + std::to_string(h.size()),
                                         std::move(table));
        GroupHom proj;
        proj.src = &g;
        proj.dst = nullptr; // caller rebinds to the stored quotient
        proj.map = res.coset_of;
        res.projection = std::move(proj);
        res.projection->dst = &*res.quotient;
        res.projection->src = &g;
    }
    return res;
}

namespace {

std::vector<int> minimal_generators(const Group& g) {
    std::vector<int> gens;
    Subgroup cur = subgroup_closure(g, {});
    while (cur.size() < g.size()) {
        for (int x = 0; x < g.size(); ++x)
            if (!cur.contains(x)) {
                gens.push_back(x);
                cur = subgroup_closure(g, gens);
                break;
            }
    }
    return gens;
}

// Attempts to extend generator images to a full homomorphism; returns the
// element-wise map on success.
std::optional<std::vector<int>> extend_hom(const Group& a, const std::vector<int>& gens,
                                           const Group& b, const std::vector<int>& imgs) {
    std::vector<int> map(a.size(), -1);
    map[a.identity()] = b.identity();
    std::vector<int> frontier{a.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int y = a.op(x, gens[i]);
                int fy = b.op(map[x], imgs[i]);
                if (map[y] < 0) {
                    map[y] = fy;
                    next.push_back(y);
                } else if (map[y] != fy) {
                    return std::nullopt;
                }
            }
        frontier = std::move(next);
    }
    // full multiplicativity check against generator right-multiplication
    for (int x = 0; x < a.size(); ++x)
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (map[a.op(x, gens[i])] != b.op(map[x], imgs[i])) return std::nullopt;
    return map;
}

bool iso_dfs(const Group& a, const std::vector<int>& gens, const Group& b,
             std::vector<int>& imgs, std::size_t k) {
    if (k == gens.size()) {
        auto map = extend_hom(a, gens, b, imgs);
        if (!map) return false;
        std::vector<bool> hit(b.size(), false);
        for (int v : *map) hit[v] = true;
        return std::find(hit.begin(), hit.end(), false) == hit.end();
    }
    for (int c = 0; c < b.size(); ++c) {
        if (b.order_of(c) != a.order_of(gens[k])) continue;
        imgs[k] = c;
        if (iso_dfs(a, gens, b, imgs, k + 1)) return true;
    }
    return false;
}

} // namespace

std::vector<int> group_minimal_generators(const Group& g) {
    return minimal_generators(g);
}

std::optional<std::vector<int>> extend_generator_map(const Group& src,
                                                     const std::vector<int>& gens,
                                                     const Group& dst,
                                                     const std::vector<int>& images) {
    if (gens.size() != images.size())
        throw ParseError("one image per generator required");
    return extend_hom(src, gens, dst, images);
}

bool groups_isomorphic(const Group& a, const Group& b) {
    if (a.size() != b.size()) return false;
    std::vector<int> oa, ob;
    for (int i = 0; i < a.size(); ++i) oa.push_back(a.order_of(i));
    for (int i = 0; i < b.size(); ++i) ob.push_back(b.order_of(i));
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) return false;
    std::vector<int> gens = minimal_generators(a);
    std::vector<int> imgs(gens.size(), 0);
    return iso_dfs(a, gens, b, imgs, 0);
}

} // namespace clm
