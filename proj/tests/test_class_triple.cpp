#include "clm/builtin.hpp"
#include "clm/class_triple.hpp"

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

GammaModule mod_of(const Ctx& c, const std::string& type) {
    GammaModule m =
        module_from_type(parse_module_type(type, c.comps), c.tab, c.comps);
    validate_gamma(m);
    return m;
}

} // namespace

TEST_CASE("quadratic triples over Z/3") {
    Ctx c = make("C2");
    GammaModule m = mod_of(c, "2:3:1");
    int sigma = 1 - c.doc.group->identity(); // the involution
    // imaginary: s = sigma acts by inversion on the kernel
    ClassTriple imag = build_class_triple(m, sigma);
    check_class_triple(imag);
    CHECK(imag.total->size() == 6);
    CHECK(triple_aut_formula(imag, m) == 2);
    CHECK(triple_aut_bruteforce(imag) == 2);
    // real: s = 1
    ClassTriple real = build_class_triple(m, c.doc.group->identity());
    CHECK(triple_aut_formula(real, m) == 6);
    CHECK(triple_aut_bruteforce(real) == 6);
    CHECK(verify_uniqueness(m, sigma));
    // pi splits in |h| ways (complements of Z/3 in S3)
    CHECK(splitting_count(imag) == 3);
}

TEST_CASE("splitting count equals the kernel order") {
    Ctx c2 = make("C2");
    GammaModule m25 = mod_of(c2, "2:5:2");
    ClassTriple t = build_class_triple(m25, 1 - c2.doc.group->identity());
    CHECK(splitting_count(t) == 25);

    Ctx s3 = make("S3");
    GammaModule std5 = mod_of(s3, "3:5:1");
    int tau = *s3.doc.group->find_perm(parse_perm_word("(1 2)", 3));
    ClassTriple ts = build_class_triple(std5, tau);
    CHECK(splitting_count(ts) == 25);
    CHECK(triple_aut_formula(ts, std5) == triple_aut_bruteforce(ts));
}

TEST_CASE("coprimality and fixed points are enforced") {
    Ctx c = make("S3");
    // 3 divides |S3|: not a class field kernel for S3
    GammaModule bad = module_from_type(parse_module_type("3:3:1", c.comps),
                                       c.tab, c.comps);
    validate_gamma(bad);
    int tau = *c.doc.group->find_perm(parse_perm_word("(1 2)", 3));
    CHECK_THROWS_AS(build_class_triple(bad, tau), InvariantViolated);
    // s must have order dividing 2
    GammaModule ok = mod_of(c, "3:5:1");
    int rho = *c.doc.group->find_perm(parse_perm_word("(1 2 3)", 3));
    CHECK_THROWS_AS(build_class_triple(ok, rho), ParseError);
}

TEST_CASE("workbound gates the exhaustive count") {
    Ctx c = make("C2");
    GammaModule m = mod_of(c, "2:3:1");
    ClassTriple t = build_class_triple(m, 1 - c.doc.group->identity());
    CHECK(triple_aut_workbound(t) >= triple_aut_bruteforce(t));
}
