#pragma once

#include "clm/gamma_module.hpp"

#include <cstdint>
#include <random>

namespace clm {

struct DistRow {
    ModuleType type;
    Rat weight; // 1 / (|G|^u * |Aut G|)
    Rat prob;   // weight / Z_trunc
};

struct DistributionTable {
    std::vector<Rat> u; // per component position (trivial kept 0)
    TruncationSpec trunc;
    std::vector<DistRow> rows;
    Rat z_trunc;
};

// |G|^u = prod over entries q^{h |lambda| u_i}; throws NonIntegralPower if the
// combined exponent at some prime is not an integer.
Rat size_power_u(const ModuleType& t, const std::vector<Rat>& u);

// Weight of a type; when r carries places the exponent route is cross-checked
// against prod_v |G^{Gamma_v}| on a realized module.
Rat weight(const ModuleType& t, const RankSpec& r,
           const std::vector<AlgebraComponent>& comps);

DistributionTable truncated_table(const CharacterTable& tab,
                                  const std::vector<AlgebraComponent>& comps,
                                  const std::vector<int>& positions,
                                  const RankSpec& r, const TruncationSpec& trunc);

struct MomentResult {
    Rat truncated;
    Rat closed; // 1 / |H|^u
};

MomentResult moment(const DistributionTable& table, const ModuleType& h,
                    const RankSpec& r, const std::vector<AlgebraComponent>& comps);

// Partial product prod_{j=1..terms} (1 - q^{-(hu+j)})^{-1}: the local
// normalizer for a single component and prime, used as a convergence oracle.
Rat local_normalizer_partial(const Int& q, long hu, long terms);

// Solve sum_G |Sur(G,H)| x_G = moment_H exactly over the listed types.
std::vector<Rat> invert_moments(const std::vector<ModuleType>& types,
                                const std::vector<Rat>& moments);

// Uniform integer in [0, bound) by rejection from 64-bit blocks.
Int rand_below(std::mt19937_64& rng, const Int& bound);

std::vector<ModuleType> sample(const DistributionTable& table, std::uint64_t seed,
                               long count);

struct CokernelSamplerConfig {
    Int p = 3;
    int n = 4;          // matrix is n x (n+u)
    int u = 0;
    int precision = 4;  // entries drawn mod p^precision
    std::uint64_t seed = 0;
};

std::vector<Partition> sample_cokernel(const CokernelSamplerConfig& cfg, long count);

} // namespace clm
