#include "clm/abelian.hpp"
#include "clm/counting.hpp"

#include <doctest.h>

using namespace clm;

TEST_CASE("invariant factors") {
    CHECK(invariant_factors({Int(4), Int(6)}) ==
          std::vector<Int>{Int(2), Int(12)});
    CHECK(invariant_factors({Int(2), Int(3)}) == std::vector<Int>{Int(6)});
    CHECK(invariant_factors({}).empty());
}

TEST_CASE("module table arithmetic") {
    OpModule m;
    m.orders = {Int(2), Int(4)};
    ModuleTable t(m);
    CHECK(t.size() == 8);
    long a = t.index({1, 0});
    long b = t.index({0, 3});
    CHECK(t.element(t.add(a, b)) == std::vector<long>{1, 3});
    CHECK(t.add(b, t.neg(b)) == t.index({0, 0}));
    CHECK(t.order_of(b) == 4);
    CHECK(t.order_of(t.index({0, 0})) == 1);
}

TEST_CASE("subgroup lattice of plain abelian groups") {
    OpModule klein;
    klein.orders = {Int(2), Int(2)};
    CHECK(module_subgroups(ModuleTable(klein), false).size() == 5);

    OpModule z8;
    z8.orders = {Int(8)};
    CHECK(module_subgroups(ModuleTable(z8), false).size() == 4);
}

TEST_CASE("operator counts match partition formulas when the action is trivial") {
    for (long ql : {2L, 3L})
        for (const Partition& lam : partitions_bounded(2, 3))
            for (const Partition& mu : partitions_bounded(2, 3)) {
                Int q(ql);
                OpModule a = abelian_of_type(q, lam, 1);
                OpModule b = abelian_of_type(q, mu, 1);
                CHECK(count_hom_op(a, b) == hom_count_formula(q, lam, mu));
                CHECK(count_sur_op(a, b) == sur_count_formula(q, lam, mu));
                if (lam == mu)
                    CHECK(count_aut_op(b) == aut_count_formula(q, mu));
            }
}

TEST_CASE("submodule structure and moebius") {
    OpModule m;
    m.orders = {Int(4), Int(2)};
    ModuleTable t(m);
    auto subs = module_subgroups(t, false);
    CHECK(subs.size() == 8); // subgroups of Z/4 x Z/2
    // moebius inversion recovers surjection counts
    std::vector<Int> moeb = lattice_moebius_to_top(subs);
    REQUIRE(moeb.size() == subs.size());
    Int total = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        std::vector<std::vector<long>> gens;
        for (long e : subs[i]) gens.push_back(t.element(e));
        OpModule s = submodule_structure(m, gens);
        total += moeb[i] * count_hom_op(m, s);
    }
    CHECK(total == count_sur_op(m, m));
    CHECK(total == count_aut_op(m));
}

TEST_CASE("isomorphism of operator modules") {
    OpModule a, b;
    a.orders = {Int(2), Int(4)};
    b.orders = {Int(4), Int(2)};
    CHECK(modules_isomorphic_op(a, b));
    OpModule c;
    c.orders = {Int(8)};
    CHECK(!modules_isomorphic_op(a, c));
}

TEST_CASE("operator well-definedness is validated") {
    OpModule m;
    m.orders = {Int(2), Int(4)};
    m.ops = {{{0, 1}, {1, 0}}}; // swap is not an automorphism of Z/2 x Z/4
    CHECK_THROWS_AS(m.validate(), InvariantViolated);
}
