#include "clm/builtin.hpp"
#include "clm/components.hpp"

#include <doctest.h>

#include <algorithm>

using namespace clm;

namespace {

struct Ctx {
    GroupSpecDoc doc;
    CharacterTable tab;
    std::vector<AlgebraComponent> comps;
};

Ctx make(const std::string& name) {
    Ctx c;
    c.doc = builtin_group(name);
    c.tab = character_table(*c.doc.group);
    c.comps = rational_components(c.tab);
    return c;
}

} // namespace

TEST_CASE("character table orthogonality") {
    for (const char* name : {"S3", "D4", "A4", "A5"}) {
        Ctx c = make(name);
        for (int a = 0; a < c.tab.num_classes(); ++a)
            for (int b = 0; b < c.tab.num_classes(); ++b)
                CHECK(c.tab.inner_rows(a, b) == (a == b ? 1 : 0));
    }
}

TEST_CASE("component inventory per group") {
    struct Row {
        const char* name;
        std::vector<long> dims;
    };
    // dim_Q of each simple factor, sorted
    const Row rows[] = {{"C2", {1, 1}},
                        {"C3", {1, 2}},
                        {"C2xC2", {1, 1, 1, 1}},
                        {"S3", {1, 1, 4}},
                        {"D4", {1, 1, 1, 1, 4}},
                        {"A4", {1, 2, 9}},
                        {"S4", {1, 1, 4, 9, 9}},
                        {"A5", {1, 16, 18, 25}},
                        {"S5", {1, 1, 16, 16, 25, 25, 36}}};
    for (const Row& r : rows) {
        Ctx c = make(r.name);
        std::vector<long> dims;
        Int total = 0;
        QVec sum;
        for (const auto& comp : c.comps) {
            dims.push_back(comp.dim.get_si());
            total += comp.dim;
            sum = sum.empty() ? comp.idempotent
                              : galg_add(sum, comp.idempotent);
        }
        std::sort(dims.begin(), dims.end());
        CHECK_MESSAGE(dims == r.dims, r.name);
        CHECK(total == c.doc.group->size());
        // central idempotents sum to 1
        for (std::size_t g = 0; g < sum.size(); ++g)
            CHECK(sum[g] == (static_cast<int>(g) == c.doc.group->identity()
                                 ? Rat(1)
                                 : Rat(0)));
        CHECK(c.comps[0].h == 1); // trivial first
        for (const Rat& v : c.comps[0].chi) CHECK(v == 1);
    }
}

TEST_CASE("idempotents are orthogonal idempotents") {
    Ctx c = make("S4");
    for (std::size_t i = 0; i < c.comps.size(); ++i)
        for (std::size_t j = 0; j < c.comps.size(); ++j) {
            QVec prod = galg_mul(*c.doc.group, c.comps[i].idempotent,
                                 c.comps[j].idempotent);
            if (i == j)
                CHECK(prod == c.comps[i].idempotent);
            else
                CHECK(galg_is_zero(prod));
        }
}

TEST_CASE("dihedral idempotent coefficients") {
    Ctx c = make("D4");
    REQUIRE(c.comps.size() == 5);
    const Group& g = *c.doc.group;
    int s = *g.find_perm(parse_perm_word("(1 2 3 4)", 4));
    int s2 = g.op(s, s);
    int t = *g.find_perm(parse_perm_word("(1 3)", 4));
    // the degree-2 factor: 1/2 (1 - sigma^2)
    const QVec& e5 = c.comps[4].idempotent;
    for (std::size_t a = 0; a < e5.size(); ++a) {
        Rat want = 0;
        if (static_cast<int>(a) == g.identity()) want = Rat(1, 2);
        if (static_cast<int>(a) == s2) want = Rat(-1, 2);
        CHECK(e5[a] == want);
    }
    // a degree-1 factor: (1/8) sum_g chi(g) g with chi(sigma)=1, chi(tau)=-1
    const QVec& e2 = c.comps[1].idempotent;
    CHECK(abs(e2[static_cast<std::size_t>(g.identity())]) == Rat(1, 8));
    CHECK(e2[static_cast<std::size_t>(s)] ==
          e2[static_cast<std::size_t>(g.identity())]);
    Rat sum = 0;
    for (const Rat& v : e2) sum += abs(v);
    CHECK(sum == 1);
    CHECK(abs(e2[static_cast<std::size_t>(t)]) == Rat(1, 8));
}

TEST_CASE("good primes on the shipped pairs") {
    struct Row {
        const char* group;
        const char* sub;
        std::vector<long> bad;
    };
    const Row rows[] = {{"S3", "S2", {3}},      {"S4", "S3", {2}},
                        {"S5", "S4", {2, 3, 5}}, {"D4", "Tau", {2}},
                        {"A5", "A4", {3, 5}},    {"A5", "TS3", {2, 3, 5}}};
    for (const Row& r : rows) {
        Ctx c = make(r.group);
        // constituents of the permutation module minus the trivial one
        std::vector<int> pos;
        for (std::size_t i = 1; i < c.comps.size(); ++i) {
            Rat ip = 0;
            const Subgroup sub = c.doc.subgroup(r.sub);
            // <chi_i, ind 1> = (1/|H|) sum_{h in H} chi_i(h)
            for (int e : sub.elems)
                ip += c.comps[i].chi[static_cast<std::size_t>(
                    c.tab.class_of[static_cast<std::size_t>(e)])];
            if (ip != 0) pos.push_back(static_cast<int>(i));
        }
        for (long pl : {2L, 3L, 5L, 7L, 11L, 13L}) {
            bool bad = std::find(r.bad.begin(), r.bad.end(), pl) != r.bad.end();
            std::vector<GoodPrimeDetail> det;
            PrimeVerdict v = good_prime_for(c.tab, c.comps, pos, Int(pl), &det);
            CHECK_MESSAGE((v == PrimeVerdict::Bad) == bad,
                          r.group << "/" << r.sub << " p=" << pl);
            for (const GoodPrimeDetail& d : det) {
                CHECK(d.denominator == d.gram);
                CHECK(d.gram == d.closed);
            }
        }
    }
}
