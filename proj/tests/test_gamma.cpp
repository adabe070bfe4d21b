#include "clm/builtin.hpp"
#include "clm/gamma_module.hpp"

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

} // namespace

TEST_CASE("every builtin component has a realization over Z") {
    for (const std::string& name : builtin_group_names()) {
        Ctx c = make(name);
        for (const AlgebraComponent& comp : c.comps) {
            if (!comp.split_registered) continue;
            RegistryRep rep = registry_rep(c.tab, comp);
            REQUIRE(!rep.mats.empty());
            CHECK_MESSAGE(Int(static_cast<long>(rep.mats[0].size())) == comp.h,
                          name << " component " << comp.index);
        }
    }
}

TEST_CASE("type to module round trip") {
    Ctx c = make("S3");
    for (const char* text : {"3:2:1", "3:2:2.1", "2:5:1", "3:5:1.1"}) {
        ModuleType t = parse_module_type(text, c.comps);
        GammaModule m = module_from_type(t, c.tab, c.comps);
        validate_gamma(m);
        CHECK(type_of_module(m, c.tab, c.comps) == t);
        CHECK(m.size() == t.order());
    }
    ModuleType zero;
    GammaModule z = module_from_type(zero, c.tab, c.comps);
    CHECK(z.size() == 1);
}

TEST_CASE("fixed points and norms on sign modules") {
    Ctx c = make("C2");
    // component 2 is the sign character; Z/5 with x -> -x
    GammaModule m =
        module_from_type(parse_module_type("2:5:1", c.comps), c.tab, c.comps);
    FixedNorm full = fixed_and_norm(m, full_subgroup(*c.doc.group));
    CHECK(full.fixed_order == 1);
    CHECK(full.tate_h0_trivial);
    FixedNorm triv = fixed_and_norm(m, trivial_subgroup(*c.doc.group));
    CHECK(triv.fixed_order == 5);
}

TEST_CASE("gamma isomorphism distinguishes twists") {
    Ctx c = make("S3");
    GammaModule a =
        module_from_type(parse_module_type("2:5:1", c.comps), c.tab, c.comps);
    GammaModule b =
        module_from_type(parse_module_type("3:5:1", c.comps), c.tab, c.comps);
    GammaModule a2 =
        module_from_type(parse_module_type("2:5:1", c.comps), c.tab, c.comps);
    CHECK(gamma_isomorphic(a, a2));
    CHECK(!gamma_isomorphic(a, b)); // sign vs standard constituent
}

TEST_CASE("brute force structures agree with formula counts") {
    Ctx c = make("S3");
    ModuleType big = parse_module_type("3:2:1.1", c.comps);
    ModuleType small = parse_module_type("3:2:1", c.comps);
    GammaModule mb = module_from_type(big, c.tab, c.comps);
    GammaModule ms = module_from_type(small, c.tab, c.comps);
    CHECK(count_maps_bruteforce(MapKind::Hom, mb, ms) ==
          count_maps_formula(MapKind::Hom, big, small));
    CHECK(count_maps_bruteforce(MapKind::Sur, mb, ms) ==
          count_maps_formula(MapKind::Sur, big, small));
    CHECK(count_maps_bruteforce(MapKind::Aut, ms, ms) ==
          count_maps_formula(MapKind::Aut, small, small));
}
