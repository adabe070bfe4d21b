#include "clm/builtin.hpp"
#include "clm/hecke.hpp"

#include <doctest.h>

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

std::vector<Int> good_set(const Ctx& c, const Subgroup& sub) {
    AugmentationComponent aug = augmentation_component(c.tab, c.comps, sub);
    std::vector<Int> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
        if (good_prime_for(c.tab, c.comps, aug.positions, Int(p)) ==
            PrimeVerdict::Good)
            out.push_back(Int(p));
    return out;
}

HeckeOrder order_of(const Ctx& c, const std::string& sub_name) {
    Subgroup sub = c.doc.subgroup(sub_name);
    return hecke_order(c.tab, c.comps, sub, good_set(c, sub));
}

} // namespace

TEST_CASE("order ranks across the shipped pairs") {
    CHECK(order_of(make("S3"), "S2").rank() == 1);
    CHECK(order_of(make("S4"), "S3").rank() == 1);
    CHECK(order_of(make("S5"), "S4").rank() == 1);
    CHECK(order_of(make("D4"), "Tau").rank() == 2);
    CHECK(order_of(make("A5"), "TS3").rank() == 2);
}

TEST_CASE("rank one iff the augmentation character is irreducible") {
    const std::pair<const char*, const char*> pairs[] = {
        {"S3", "S2"}, {"S4", "S3"}, {"S5", "S4"},
        {"D4", "Tau"}, {"A5", "A4"}, {"A5", "TS3"}};
    for (const auto& [name, sub_name] : pairs) {
        Ctx c = make(name);
        {
            Subgroup sub = c.doc.subgroup(sub_name);
            AugmentationComponent aug =
                augmentation_component(c.tab, c.comps, sub);
            std::vector<CycElt> a =
                c.tab.rational_class_function(aug.a_char);
            bool irreducible = c.tab.inner(a, a) == 1;
            HeckeOrder o =
                hecke_order(c.tab, c.comps, sub, good_set(c, sub));
            CHECK_MESSAGE((o.rank() == 1) == irreducible,
                          name << "/" << sub_name);
        }
    }
}

TEST_CASE("rank-two order is Z_S[t]/(t^2-1)") {
    HeckeOrder o = order_of(make("D4"), "Tau");
    REQUIRE(o.rank() == 2);
    // find t = x*b0 + y*b1 with t^2 = identity, t != +-identity, over Q
    auto mul = [&](const std::vector<Rat>& v) {
        std::vector<Rat> out(2, Rat(0));
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int k = 0; k < 2; ++k)
                    out[static_cast<std::size_t>(k)] +=
                        v[static_cast<std::size_t>(a)] *
                        v[static_cast<std::size_t>(b)] *
                        o.structure[static_cast<std::size_t>(a)]
                                   [static_cast<std::size_t>(b)]
                                   [static_cast<std::size_t>(k)];
        return out;
    };
    bool found = false;
    for (int x = -4; x <= 4 && !found; ++x)
        for (int y = -4; y <= 4 && !found; ++y) {
            if (x == 0 && y == 0) continue;
            std::vector<Rat> t{make_rat(Int(x), Int(2)), make_rat(Int(y), Int(2))};
            std::vector<Rat> sq = mul(t);
            bool is_pm_one = true;
            for (int k = 0; k < 2; ++k) {
                if (sq[static_cast<std::size_t>(k)] !=
                    o.identity_coeffs[static_cast<std::size_t>(k)])
                    is_pm_one = false;
            }
            if (is_pm_one &&
                t != o.identity_coeffs) {
                std::vector<Rat> neg{-o.identity_coeffs[0],
                                     -o.identity_coeffs[1]};
                if (t != neg) found = true;
            }
        }
    CHECK(found);
}

TEST_CASE("invariants functor and lift round trip") {
    Ctx c = make("S3");
    HeckeOrder o = order_of(c, "S2");
    TruncationSpec tr;
    tr.prime_exponents.push_back({Int(2), 2});
    tr.order_bound = Int(16);
    ModuleType t = parse_module_type("3:2:2", c.comps);
    GammaModule m = module_from_type(t, c.tab, c.comps);
    validate_gamma(m);
    OModule h = invariants_functor(m, o);
    CHECK(invariant_factors(h.mod.orders) == std::vector<Int>{Int(4)});
    MoritaLift lift = morita_lift(h, o, tr);
    CHECK(lift.lift_type == t);
    CHECK(lift.aut_lift == lift.aut_module);
    CHECK(lift.aut_lift == 2); // Aut(Z/4)
}

TEST_CASE("weight identity columns") {
    Ctx c = make("S3");
    HeckeOrder o = order_of(c, "S2");
    RankSpec r = rank_u(c.tab, c.comps, {trivial_subgroup(*c.doc.group)});
    TruncationSpec tr;
    tr.prime_exponents.push_back({Int(2), 3});
    tr.order_bound = Int(64);
    std::vector<NonGaloisRow> rows = nongalois_table(c.tab, c.comps, o, r, tr);
    REQUIRE(rows.size() == 7);
    for (const NonGaloisRow& row : rows) CHECK(row.col_a == row.col_b);
    // frozen: H = Z/2 row
    bool seen = false;
    for (const NonGaloisRow& row : rows)
        if (invariant_factors(row.rep.mod.orders) == std::vector<Int>{Int(2)}) {
            CHECK(row.col_a == Rat(1, 4));
            seen = true;
        }
    CHECK(seen);
}

TEST_CASE("rank vectors") {
    Ctx c2 = make("C2");
    RankSpec imag = rank_u(c2.tab, c2.comps, {full_subgroup(*c2.doc.group)});
    CHECK(imag.u[1] == 0);
    RankSpec real = rank_u(c2.tab, c2.comps, {trivial_subgroup(*c2.doc.group)});
    CHECK(real.u[1] == 1);

    for (const char* name : {"S3", "S4", "S5"}) {
        Ctx c = make(name);
        RankSpec r = rank_u(c.tab, c.comps, {trivial_subgroup(*c.doc.group)});
        Subgroup sub = c.doc.subgroup(name == std::string("S3")   ? "S2"
                                      : name == std::string("S4") ? "S3"
                                                                  : "S4");
        AugmentationComponent aug = augmentation_component(c.tab, c.comps, sub);
        std::vector<Rat> v = rank_transfer(r, aug, c.comps);
        long n = c.doc.group->degree();
        for (const Rat& x : v) CHECK(x == n - 1);
    }

    Ctx d4 = make("D4");
    RankSpec r = rank_u(d4.tab, d4.comps, {trivial_subgroup(*d4.doc.group)});
    for (std::size_t i = 1; i < d4.comps.size(); ++i) CHECK(r.u[i] == 1);
    AugmentationComponent aug =
        augmentation_component(d4.tab, d4.comps, d4.doc.subgroup("Tau"));
    CHECK(rank_transfer(r, aug, d4.comps) == std::vector<Rat>{Rat(1), Rat(2)});
}

TEST_CASE("rank independence on the shipped instances") {
    Ctx v4 = make("C2xC2");
    RankSpec r4 = rank_u(v4.tab, v4.comps, {trivial_subgroup(*v4.doc.group)});
    CHECK(rank_independence_check(*v4.doc.group, v4.doc.subgroup("A"),
                                  v4.doc.subgroup("A"), r4)
              .ok());
    Ctx d4 = make("D4");
    RankSpec rd = rank_u(d4.tab, d4.comps, {trivial_subgroup(*d4.doc.group)});
    CHECK(rank_independence_check(*d4.doc.group, d4.doc.subgroup("Z"),
                                  d4.doc.subgroup("ZTau"), rd)
              .ok());
}
