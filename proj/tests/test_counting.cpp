#include "clm/builtin.hpp"
#include "clm/counting.hpp"

#include <doctest.h>

using namespace clm;

TEST_CASE("partition basics") {
    Partition p({3, 1});
    CHECK(p.transpose().parts == std::vector<long>{2, 1, 1});
    CHECK(p.sum() == 4);
    CHECK(p.str() == "3.1");
    CHECK(Partition(std::vector<long>{}).str().empty());
    CHECK(partitions_bounded(2, 4).size() == 9); // up to 1111 and 22
    CHECK(Partition({1, 3}).parts == std::vector<long>{3, 1});
    CHECK_THROWS_AS(Partition({0}), ParseError);
}

TEST_CASE("automorphism counts of small p-groups") {
    // |Aut(Z/9 x Z/3)| at p=3
    CHECK(aut_count_formula(3, Partition({2, 1})) == 108);
    // |Aut(Z/2 x Z/2)| = |GL_2(F_2)|
    CHECK(aut_count_formula(2, Partition({1, 1})) == 6);
    CHECK(aut_count_formula(2, Partition({3})) == 4);
    CHECK(aut_count_formula(2, Partition(std::vector<long>{})) == 1);
}

TEST_CASE("hom and sur closed forms against submodule brute force") {
    for (long ql : {2L, 3L}) {
        Int q(ql);
        for (const Partition& lam : partitions_bounded(3, 4))
            for (const Partition& mu : partitions_bounded(3, 4)) {
                // #{submodules of type mu} * |Aut mu| = |Sur(lam, mu)|
                Int subs = submodule_count_bruteforce(q, lam, mu);
                CHECK_MESSAGE(sur_count_formula(q, lam, mu) ==
                                  subs * aut_count_formula(q, mu),
                              q.get_str() << " " << lam.str() << " "
                                          << mu.str());
            }
    }
    CHECK(hom_count_formula(2, Partition({2, 1}), Partition({1})) == 4);
    CHECK(sur_count_formula(3, Partition({2}), Partition({1})) == 2);
    CHECK(sur_count_formula(3, Partition({1}), Partition({2})) == 0);
}

TEST_CASE("type enumeration under truncation") {
    GroupSpecDoc doc = builtin_group("C2");
    CharacterTable tab = character_table(*doc.group);
    std::vector<AlgebraComponent> comps = rational_components(tab);
    std::vector<ComponentRef> refs{{1, comps[1].h}};

    TruncationSpec tr;
    tr.prime_exponents.push_back({Int(3), 2});
    tr.order_bound = Int(81);
    std::vector<ModuleType> types = enumerate_types(refs, tr);
    CHECK(types.size() == 9); // partitions with parts <= 2, order <= 3^4
    CHECK(types.front().is_zero());

    tr.order_bound = Int(9);
    CHECK(enumerate_types(refs, tr).size() == 4); // 0, 1, 11, 2

    TruncationSpec no_bound;
    no_bound.prime_exponents.push_back({Int(3), 2});
    CHECK_THROWS_AS(enumerate_types(refs, no_bound), CapExceeded);
}

TEST_CASE("module type parse and render") {
    GroupSpecDoc doc = builtin_group("S3");
    CharacterTable tab = character_table(*doc.group);
    std::vector<AlgebraComponent> comps = rational_components(tab);
    ModuleType t = parse_module_type("3:2:2.1", comps);
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries[0].comp_pos == 2);
    CHECK(t.entries[0].h == comps[2].h);
    CHECK(t.str() == "3:2:2.1");
    CHECK(t.order() == 64); // 2^(h*3) with h=2
    CHECK(parse_module_type("0", comps).is_zero());
    CHECK_THROWS_AS(parse_module_type("9:2:1", comps), ParseError);
    CHECK_THROWS_AS(parse_module_type("1:2:1", comps), ParseError);
}

TEST_CASE("orders to partition") {
    CHECK(partition_of_orders({Int(3), Int(9)}, 3).str() == "2.1");
    CHECK(partition_of_orders({}, 2).empty());
    CHECK_THROWS_AS(partition_of_orders({Int(6)}, 3), NotHomogeneous);
}
