#include "clm/builtin.hpp"
#include "clm/group_spec.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace clm;

TEST_CASE("permutation word parsing") {
    Perm p = parse_perm_word("(1 2 3)(4 5)", 5);
    CHECK(p == Perm{1, 2, 0, 4, 3});
    CHECK(perm_to_string(p) == "(1 2 3)(4 5)");
    CHECK(parse_perm_word("()", 3) == Perm{0, 1, 2});
    CHECK_THROWS_AS(parse_perm_word("(1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_perm_word("(1 7)", 3), ParseError);
}

TEST_CASE("builtin group orders and class counts") {
    struct Row {
        const char* name;
        int order;
        int classes;
    };
    const Row rows[] = {{"C2", 2, 2},   {"C3", 3, 3},  {"C2xC2", 4, 4},
                        {"S3", 6, 3},   {"D4", 8, 5},  {"A4", 12, 4},
                        {"S4", 24, 5},  {"A5", 60, 5}, {"S5", 120, 7}};
    for (const Row& r : rows) {
        GroupSpecDoc doc = builtin_group(r.name);
        CHECK(doc.group->size() == r.order);
        CHECK(static_cast<int>(conjugacy_classes(*doc.group).size()) ==
              r.classes);
    }
}

TEST_CASE("named subgroups of the shipped specs") {
    GroupSpecDoc d4 = builtin_group("D4");
    CHECK(d4.subgroup("Tau").size() == 2);
    CHECK(d4.subgroup("Z").size() == 2);
    CHECK(is_normal(*d4.group, d4.subgroup("Z")));
    CHECK(!is_normal(*d4.group, d4.subgroup("Tau")));
    GroupSpecDoc a5 = builtin_group("A5");
    CHECK(a5.subgroup("A4").size() == 12);
    CHECK(a5.subgroup("TS3").size() == 6);
    CHECK_THROWS_AS(a5.subgroup("nope"), ParseError);
}

TEST_CASE("spec text round trip") {
    GroupSpecDoc doc = builtin_group("S3");
    GroupSpecDoc again = parse_group_spec(serialize_group_spec(doc));
    CHECK(again.group->size() == 6);
    CHECK(groups_isomorphic(*doc.group, *again.group));
    CHECK(again.subgroup("S2").size() == 2);
}

TEST_CASE("shipped data files match the embedded specs") {
    for (const std::string& name : builtin_group_names()) {
        std::ifstream in(std::string(CLM_DATA_DIR "/") + name + ".grp");
        REQUIRE_MESSAGE(in.good(), name);
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK_MESSAGE(buf.str() == builtin_group_text(name), name);
    }
}

TEST_CASE("quotient and closure") {
    GroupSpecDoc d4 = builtin_group("D4");
    QuotientResult q = coset_and_quotient(*d4.group, d4.subgroup("Z"));
    CHECK(q.quotient->size() == 4);
    CHECK(q.quotient->exponent() == 2); // D4 / center is Klein four
    Subgroup whole = subgroup_closure(*d4.group, d4.group->generator_ids());
    CHECK(whole.size() == 8);
}

TEST_CASE("malformed specs are loud") {
    CHECK_THROWS_AS(parse_group_spec("degree 2\ngen (1 2)\n"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("name X\nwhat 3\n"), ParseError);
    // not a Latin square
    CHECK_THROWS_AS(parse_group_spec("name Bad\ntable 3\nrow 0 1 2\n"
                                     "row 1 2 1\nrow 2 1 0\n"),
                    NotAGroup);
}
