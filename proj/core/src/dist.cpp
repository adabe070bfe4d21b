#include "clm/dist.hpp"

#include "clm/errors.hpp"

#include <algorithm>
#include <map>

namespace clm {

namespace {

Rat rat_pow(const Int& base, const Int& expo) {
    if (expo >= 0) return Rat(pow_int(base, expo.get_si()));
    Int neg = -expo;
    return Rat(1) / Rat(pow_int(base, neg.get_si()));
}

void require_good(const ModuleType& t, const RankSpec& r,
                  const std::vector<AlgebraComponent>& comps) {
    if (!r.table) throw ParseError("rank spec carries no character table");
    for (const TypeEntry& e : t.entries) {
        PrimeVerdict v = good_prime_for(*r.table, comps, {e.comp_pos}, e.p);
        if (v == PrimeVerdict::Bad)
            throw BadPrime("prime " + e.p.get_str() + " is bad for component " +
                           std::to_string(e.comp_pos + 1));
        if (v == PrimeVerdict::Unsupported)
            throw UnsupportedComponent("component " + std::to_string(e.comp_pos + 1) +
                                       " has no goodness certificate");
    }
}

} // namespace

Rat size_power_u(const ModuleType& t, const std::vector<Rat>& u) {
    // combine exponents prime by prime; only the total must be integral
    std::map<Int, Rat> expo;
    for (const TypeEntry& e : t.entries) {
        if (static_cast<std::size_t>(e.comp_pos) >= u.size())
            throw ParseError("rank vector does not cover a component in the type");
        expo[e.q] += Rat(e.h * Int(e.lambda.sum())) * u[static_cast<std::size_t>(e.comp_pos)];
    }
    Rat out(1);
    for (const auto& [q, x] : expo) {
        if (!is_integral(x))
            throw NonIntegralPower("|G|^u has non-integral exponent " +
                                   x.get_str() + " at " + q.get_str());
        out *= rat_pow(q, x.get_num());
    }
    return out;
}

Rat weight(const ModuleType& t, const RankSpec& r,
           const std::vector<AlgebraComponent>& comps) {
    require_good(t, r, comps);
    Rat size_u = size_power_u(t, r.u);
    Int aut = count_maps_formula(MapKind::Aut, t, t);
    if (r.has_places) {
        // second route: |G|^u = prod over infinite places of |G^{Gamma_v}|
        GammaModule g = module_from_type(t, *r.table, comps);
        Rat via_places(1);
        for (const Subgroup& gv : r.places)
            via_places *= Rat(fixed_and_norm(g, gv).fixed_order);
        if (via_places != size_u)
            throw InvariantViolated("place route for |G|^u disagrees with the "
                                    "component-exponent route");
    }
    return Rat(1) / (size_u * Rat(aut));
}

DistributionTable truncated_table(const CharacterTable& tab,
                                  const std::vector<AlgebraComponent>& comps,
                                  const std::vector<int>& positions,
                                  const RankSpec& r, const TruncationSpec& trunc) {
    (void)tab;
    DistributionTable out;
    out.u = r.u;
    out.trunc = trunc;
    std::vector<ComponentRef> refs;
    for (int pos : positions) {
        if (pos <= 0 || static_cast<std::size_t>(pos) >= comps.size())
            throw ParseError("distribution components must be nontrivial");
        refs.push_back({pos, comps[static_cast<std::size_t>(pos)].h});
    }
    TruncationSpec use = trunc;
    if (refs.empty() || use.prime_exponents.empty()) use.order_bound = Int(1);
    for (const ModuleType& t : enumerate_types(refs, use)) {
        DistRow row;
        row.weight = weight(t, r, comps);
        if (row.weight <= 0) throw InvariantViolated("nonpositive weight");
        row.type = t;
        out.rows.push_back(std::move(row));
    }
    out.z_trunc = 0;
    for (const DistRow& row : out.rows) out.z_trunc += row.weight;
    Rat total(0);
    for (DistRow& row : out.rows) {
        row.prob = row.weight / out.z_trunc;
        total += row.prob;
    }
    if (total != 1) throw InvariantViolated("probabilities do not sum to 1");
    return out;
}

MomentResult moment(const DistributionTable& table, const ModuleType& h,
                    const RankSpec& r, const std::vector<AlgebraComponent>& comps) {
    MomentResult out;
    out.truncated = 0;
    for (const DistRow& row : table.rows)
        out.truncated += row.prob * Rat(count_maps_formula(MapKind::Sur, row.type, h));
    out.closed = Rat(1) / size_power_u(h, r.u);
    if (r.has_places && r.table) {
        GammaModule g = module_from_type(h, *r.table, comps);
        Rat via_places(1);
        for (const Subgroup& gv : r.places)
            via_places *= Rat(fixed_and_norm(g, gv).fixed_order);
        if (Rat(1) / via_places != out.closed)
            throw InvariantViolated("place route for the moment disagrees with "
                                    "the |H|^u route");
    }
    return out;
}

Rat local_normalizer_partial(const Int& q, long hu, long terms) {
    Rat out(1);
    for (long j = 1; j <= terms; ++j)
        out /= Rat(1) - Rat(1) / Rat(pow_int(q, hu + j));
    return out;
}

std::vector<Rat> invert_moments(const std::vector<ModuleType>& types,
                                const std::vector<Rat>& moments) {
    std::size_t n = types.size();
    if (moments.size() != n)
        throw ParseError("moment vector length must match the type list");
    QMat m(n, QVec(n));
    for (std::size_t hi = 0; hi < n; ++hi)
        for (std::size_t gi = 0; gi < n; ++gi)
            m[hi][gi] = Rat(count_maps_formula(MapKind::Sur, types[gi], types[hi]));
    if (q_rank(m) != n)
        throw SingularSystem("surjection matrix is singular; type list is "
                             "probably not closed under quotients");
    auto x = q_solve(m, moments);
    if (!x) throw SingularSystem("moment system has no solution");
    return *x;
}

Int rand_below(std::mt19937_64& rng, const Int& bound) {
    if (bound <= 0) throw ParseError("rand_below needs a positive bound");
    std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    std::size_t words = (bits + 63) / 64;
    while (true) {
        Int v = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t x = rng();
            v <<= 64;
            Int word = Int(static_cast<unsigned long>(x >> 32));
            word <<= 32;
            word += Int(static_cast<unsigned long>(x & 0xffffffffULL));
            v += word;
        }
        // keep only `bits` low bits, then reject
        Int mask = (Int(1) << bits) - 1;
        v &= mask;
        if (v < bound) return v;
    }
}

std::vector<ModuleType> sample(const DistributionTable& table, std::uint64_t seed,
                               long count) {
    if (table.rows.empty()) throw ParseError("cannot sample from an empty table");
    Int denom = 1;
    for (const DistRow& row : table.rows)
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
                row.prob.get_den().get_mpz_t());
    std::vector<Int> cumulative;
    Int acc = 0;
    for (const DistRow& row : table.rows) {
        acc += row.prob.get_num() * (denom / row.prob.get_den());
        cumulative.push_back(acc);
    }
    if (acc != denom) throw InvariantViolated("cumulative probability mismatch");
    std::mt19937_64 rng(seed);
    std::vector<ModuleType> out;
    for (long i = 0; i < count; ++i) {
        Int r = rand_below(rng, denom);
        std::size_t lo = 0;
        while (cumulative[lo] <= r) ++lo;
        out.push_back(table.rows[lo].type);
    }
    return out;
}

namespace {

std::uint64_t rand_mod(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace

std::vector<Partition> sample_cokernel(const CokernelSamplerConfig& cfg, long count) {
    if (cfg.n < 1 || cfg.precision < 1 || cfg.u < 0)
        throw ParseError("invalid cokernel sampler configuration");
    Int pn_big = pow_int(cfg.p, cfg.precision);
    if (pn_big > Int(1) << 31) throw TooLarge("p^precision exceeds the sampler cap");
    long long pn = pn_big.get_si();
    long long p = cfg.p.get_si();
    int rows = cfg.n, cols = cfg.n + cfg.u;
    std::mt19937_64 rng(cfg.seed);
    std::vector<Partition> out;
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    for (long s = 0; s < count; ++s) {
        for (auto& row : a)
            for (long long& x : row)
                x = static_cast<long long>(
                    rand_mod(rng, static_cast<std::uint64_t>(pn)));
        // p-adic elimination mod p^N; cokernel invariant p^{v_k} per pivot
        std::vector<long> parts;
        int k = 0;
        for (; k < rows && k < cols; ++k) {
            int bi = -1, bj = -1, bv = cfg.precision;
            for (int i = k; i < rows; ++i)
                for (int j = k; j < cols; ++j) {
                    if (a[i][j] == 0) continue;
                    int v = 0;
                    long long x = a[i][j];
                    while (x % p == 0) { x /= p; ++v; }
                    if (v < bv) { bv = v; bi = i; bj = j; }
                }
            if (bi < 0) break; // all remaining entries are 0 mod p^N
            std::swap(a[k], a[bi]);
            for (int i = 0; i < rows; ++i) std::swap(a[i][k], a[i][bj]);
            long long pv = 1;
            for (int t = 0; t < bv; ++t) pv *= p;
            // scale row k by the inverse (extended Euclid) of the pivot's unit part
            long long unit = (a[k][k] / pv) % pn;
            long long r0 = pn, r1 = unit, s0 = 0, s1 = 1;
            while (r1 != 0) {
                long long q = r0 / r1;
                long long r2 = r0 - q * r1, s2 = s0 - q * s1;
                r0 = r1; r1 = r2; s0 = s1; s1 = s2;
            }
            long long inv = ((s0 % pn) + pn) % pn;
            for (int j = k; j < cols; ++j)
                a[k][j] = static_cast<long long>(
                    (static_cast<__int128>(a[k][j]) * inv) % pn);
            for (int i = k + 1; i < rows; ++i) {
                long long f = a[i][k] / pv;
                for (int j = k; j < cols; ++j)
                    a[i][j] = static_cast<long long>(
                        ((static_cast<__int128>(a[i][j]) -
                          static_cast<__int128>(f) * a[k][j]) % pn + pn) % pn);
            }
            for (int j = k + 1; j < cols; ++j) {
                long long f = a[k][j] / pv;
                for (int i = k; i < rows; ++i)
                    a[i][j] = static_cast<long long>(
                        ((static_cast<__int128>(a[i][j]) -
                          static_cast<__int128>(f) * a[i][k]) % pn + pn) % pn);
            }
            if (bv > 0) parts.push_back(bv);
        }
        for (int r = k; r < rows; ++r) parts.push_back(cfg.precision);
        out.push_back(Partition(std::move(parts)));
    }
    return out;
}

} // namespace clm
