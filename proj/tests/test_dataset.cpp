#include "clm/builtin.hpp"
#include "clm/dataset.hpp"

#include <doctest.h>

#include <sstream>

using namespace clm;

TEST_CASE("dataset ingest accepts invariant chains") {
    std::istringstream in("label,invariants\n"
                          "-3,\n"
                          "-23,3\n"
                          "-4027,3.3\n"
                          "-3896,2.2.4\n");
    IngestResult r = ingest_dataset(in, true);
    REQUIRE(r.rows.size() == 4);
    CHECK(r.skipped.empty());
    CHECK(r.rows[0].invariants.empty());
    CHECK(r.rows[1].label == -23);
    CHECK(r.rows[1].invariants == std::vector<Int>{Int(3)});
    CHECK(r.rows[3].invariants == std::vector<Int>{Int(2), Int(2), Int(4)});
}

TEST_CASE("malformed rows: strict throws, lenient skips") {
    const char* text = "label,invariants\n"
                       "-23,3\n"
                       "-100,3.2\n" // 3 does not divide 2
                       "-47,5\n";
    std::istringstream strict(text);
    CHECK_THROWS_AS(ingest_dataset(strict, true), FormatError);
    std::istringstream lenient(text);
    IngestResult r = ingest_dataset(lenient, false);
    CHECK(r.rows.size() == 2);
    REQUIRE(r.skipped.size() == 1);
    CHECK(r.skipped[0].find("line 3") != std::string::npos);
}

TEST_CASE("header and field validation") {
    std::istringstream bad_header("disc,group\n-23,3\n");
    CHECK_THROWS_AS(ingest_dataset(bad_header, false), FormatError);
    std::istringstream empty("");
    CHECK_THROWS_AS(ingest_dataset(empty, false), FormatError);
    std::istringstream bad_label("label,invariants\nxyz,3\n");
    CHECK_THROWS_AS(ingest_dataset(bad_label, true), FormatError);
    std::istringstream one("label,invariants\n-23,1\n");
    CHECK_THROWS_AS(ingest_dataset(one, true), FormatError);
}

TEST_CASE("render and ingest round trip") {
    std::istringstream in("label,invariants\n-23,3\n-3,\n-3896,2.2.4\n");
    IngestResult r = ingest_dataset(in, true);
    std::istringstream again(render_dataset(r.rows));
    IngestResult r2 = ingest_dataset(again, true);
    REQUIRE(r2.rows.size() == r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(r2.rows[i].label == r.rows[i].label);
        CHECK(r2.rows[i].invariants == r.rows[i].invariants);
    }
}

TEST_CASE("comparison against the truncated prediction") {
    GroupSpecDoc doc = builtin_group("C2");
    CharacterTable tab = character_table(*doc.group);
    std::vector<AlgebraComponent> comps = rational_components(tab);
    RankSpec r = rank_from_u(tab, comps, {Rat(0)});
    TruncationSpec tr;
    tr.prime_exponents.push_back({Int(3), 2});
    tr.order_bound = Int(81);

    std::istringstream in("label,invariants\n"
                          "-3,\n-4,\n-23,3\n-31,3\n-59,3\n-456,2.4\n"
                          "-3299,27\n-4027,3.3\n");
    IngestResult ing = ingest_dataset(in, true);
    CompareReport rep =
        compare_dataset(ing.rows, tab, comps, {1}, r, tr);
    CHECK(rep.total == 8);
    CHECK(rep.unmatched == 1); // the 27 exceeds level 2
    CHECK(decimal12(rep.closed_trivial) == "5.60126077928e-1");
    for (const CompareRow& row : rep.rows) {
        if (row.type.is_zero()) CHECK(row.count == 3); // -3, -4, -456
        if (row.type.str() == "2:3:1") CHECK(row.count == 3);
        if (row.type.str() == "2:3:1.1") CHECK(row.count == 1);
        CHECK(row.predicted > 0);
    }
}

TEST_CASE("comparison requires a single multiplicity-one component") {
    GroupSpecDoc doc = builtin_group("S3");
    CharacterTable tab = character_table(*doc.group);
    std::vector<AlgebraComponent> comps = rational_components(tab);
    RankSpec r = rank_from_u(tab, comps, {Rat(0), Rat(0)});
    TruncationSpec tr;
    tr.prime_exponents.push_back({Int(5), 1});
    tr.order_bound = Int(25);
    CHECK_THROWS_AS(compare_dataset({}, tab, comps, {2}, r, tr),
                    UnsupportedComponent);
    RankSpec rh = rank_from_u(tab, comps, {Rat(1, 2), Rat(0)});
    CHECK_THROWS_AS(compare_dataset({}, tab, comps, {1}, rh, tr),
                    NonIntegralPower);
}
