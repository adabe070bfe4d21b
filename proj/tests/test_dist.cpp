#include "clm/builtin.hpp"
#include "clm/dist.hpp"

#include <doctest.h>

#include <map>

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

TruncationSpec trunc3(long exponent, long bound) {
    TruncationSpec tr;
    tr.prime_exponents.push_back({Int(3), exponent});
    tr.order_bound = Int(bound);
    return tr;
}

} // namespace

TEST_CASE("quadratic weights at u=1") {
    Ctx c = make("C2");
    RankSpec r = rank_from_u(c.tab, c.comps, {Rat(1)});
    DistributionTable t =
        truncated_table(c.tab, c.comps, {1}, r, trunc3(2, 81));
    REQUIRE(t.rows.size() == 9);
    std::map<std::string, Rat> w;
    for (const DistRow& row : t.rows) w[row.type.str()] = row.weight;
    // 1 / (|G| * |Aut G|)
    CHECK(w["0"] == 1);
    CHECK(w["2:3:1"] == Rat(1, 6));
    CHECK(w["2:3:1.1"] == Rat(1, 432));
    CHECK(w["2:3:2"] == Rat(1, 54));
    CHECK(w["2:3:2.2"] == Rat(1, 314928));
    Rat total = 0;
    for (const DistRow& row : t.rows) {
        CHECK(row.prob == row.weight / t.z_trunc);
        total += row.prob;
    }
    CHECK(total == 1);
}

TEST_CASE("level-one probabilities") {
    Ctx c = make("C2");
    RankSpec r = rank_from_u(c.tab, c.comps, {Rat(1)});
    DistributionTable t = truncated_table(c.tab, c.comps, {1}, r, trunc3(1, 3));
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].prob == Rat(6, 7));
    CHECK(t.rows[1].prob == Rat(1, 7));
}

TEST_CASE("moment of Z/3 approaches one third") {
    Ctx c = make("C2");
    RankSpec r = rank_from_u(c.tab, c.comps, {Rat(1)});
    ModuleType h;
    Rat prev_gap;
    for (long level = 1; level <= 3; ++level) {
        Int bound = pow_int(Int(3), static_cast<unsigned long>(2 * level));
        DistributionTable t = truncated_table(
            c.tab, c.comps, {1}, r, trunc3(level, bound.get_si()));
        h = parse_module_type("2:3:1", c.comps);
        MomentResult m = moment(t, h, r, c.comps);
        CHECK(m.closed == Rat(1, 3));
        Rat gap = abs(m.truncated - m.closed);
        if (level > 1) CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("moment inversion is exact on a table's own moments") {
    Ctx c = make("S3");
    RankSpec r = rank_from_u(c.tab, c.comps, {Rat(1), Rat(1)});
    TruncationSpec tr;
    tr.prime_exponents.push_back({Int(2), 1});
    tr.order_bound = Int(16);
    DistributionTable t = truncated_table(c.tab, c.comps, {2}, r, tr);
    std::vector<ModuleType> types;
    std::vector<Rat> moms;
    for (const DistRow& row : t.rows) {
        types.push_back(row.type);
        moms.push_back(moment(t, row.type, r, c.comps).truncated);
    }
    std::vector<Rat> sol = invert_moments(types, moms);
    for (std::size_t i = 0; i < sol.size(); ++i)
        CHECK(sol[i] == t.rows[i].prob);
}

TEST_CASE("normalizer partial products") {
    // Prod_{k>=1} (1 - 3^-k) ~ 0.560126, via the u=0 normalizer
    Rat z = local_normalizer_partial(3, 0, 64);
    CHECK(decimal12(1 / z) == "5.60126077928e-1");
    CHECK(local_normalizer_partial(3, 0, 1) == Rat(3, 2));
}

TEST_CASE("exact sampler determinism") {
    Ctx c = make("C2");
    RankSpec r = rank_from_u(c.tab, c.comps, {Rat(0)});
    DistributionTable t = truncated_table(c.tab, c.comps, {1}, r, trunc3(3, 729));
    std::vector<ModuleType> a = sample(t, 20260823, 12);
    std::vector<ModuleType> b = sample(t, 20260823, 12);
    CHECK(a == b);
    CHECK(a != sample(t, 1, 12));
    std::string stream;
    for (const ModuleType& x : a)
        stream += (stream.empty() ? "" : " ") + x.str();
    CHECK(stream == "0 0 2:3:1 2:3:1 0 2:3:3 2:3:1 2:3:1 2:3:1 2:3:1 0 2:3:1");
}

TEST_CASE("rejection sampling stays in range") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Int v = rand_below(rng, Int("1000000000000000000000"));
        CHECK(v >= 0);
        CHECK(v < Int("1000000000000000000000"));
    }
}

TEST_CASE("cokernel sampler matches the table on a small case") {
    CokernelSamplerConfig cfg;
    cfg.p = 3;
    cfg.n = 6;
    cfg.u = 1;
    cfg.precision = 5;
    cfg.seed = 42;
    long count = 20000;
    std::vector<Partition> draws = sample_cokernel(cfg, count);
    long trivial = 0;
    for (const Partition& p : draws)
        if (p.empty()) ++trivial;
    // u=1: P(trivial) -> prod_{k>=2}(1 - 3^-k) ~ 0.840189
    double freq = static_cast<double>(trivial) / static_cast<double>(count);
    Rat target = 1 / local_normalizer_partial(3, 1, 64);
    CHECK(std::abs(freq - target.get_d()) < 0.02);
}
