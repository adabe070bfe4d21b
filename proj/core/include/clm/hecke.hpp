#pragma once

#include "clm/dist.hpp"

namespace clm {

struct AugmentationComponent {
    std::vector<Rat> a_char;    // per class: induced character minus trivial
    QVec idempotent;            // sum of constituent central idempotents
    std::vector<int> positions; // constituent components (positions, >= 1)
    std::vector<Int> mults;     // multiplicity of each constituent in a
};

// Both routes (character support / e_i e_1' != 0) compared and asserted.
AugmentationComponent augmentation_component(const CharacterTable& t,
                                             const std::vector<AlgebraComponent>& comps,
                                             const Subgroup& h);

// Integral order of left-subgroup-fixed elements of e * Z_S[Gamma] * e_1'.
struct HeckeOrder {
    const CharacterTable* table = nullptr;
    const std::vector<AlgebraComponent>* comps = nullptr;
    Subgroup sub;                // Gamma'
    AugmentationComponent aug;
    std::vector<Int> primes;     // S (all good for the constituents)
    QVec e1p;                    // idempotent of the subgroup
    std::vector<QVec> basis;     // exact elements of Q[Gamma]
    // structure[a][b] = coefficients of basis[a]*basis[b] in the basis
    std::vector<std::vector<QVec>> structure;
    QVec identity_coeffs;        // e*e_1' in the basis
    // integral expression basis[j] = sum_g expr[j][g] * (e g e_1'), integer
    std::vector<IVec> expr;
    std::size_t rank() const { return basis.size(); }
};

HeckeOrder hecke_order(const CharacterTable& t,
                       const std::vector<AlgebraComponent>& comps,
                       const Subgroup& h, const std::vector<Int>& primes);

// Finite module over a Hecke order: ops aligned with the order's basis.
struct OModule {
    const HeckeOrder* order = nullptr;
    OpModule mod;

    Int size() const { return mod.size(); }
};

// Subgroup-fixed points of an e-component module with the induced order
// action; representative independence and identity action are asserted.
OModule invariants_functor(const GammaModule& m, const HeckeOrder& o);

struct MoritaLift {
    GammaModule lift;
    ModuleType lift_type;
    Int aut_lift;   // over the group ring
    Int aut_module; // over the Hecke order
};

// Search over enumerated types for the unique module whose fixed points are
// isomorphic to h; NotFound / NotUnique are loud outcomes.
MoritaLift morita_lift(const OModule& h, const HeckeOrder& o,
                       const TruncationSpec& trunc);

// v_i = h_i * u_i / <phi_i, a_{Gamma/Gamma'}> on each constituent position.
std::vector<Rat> rank_transfer(const RankSpec& r, const AugmentationComponent& aug,
                               const std::vector<AlgebraComponent>& comps);

struct NonGaloisRow {
    OModule rep;
    std::vector<ModuleType> lift_types;
    Rat col_a; // sum over lifts G of 1/(|G|^u |Aut G|)
    Rat col_b; // 1/(|H|^v |Aut_o H|)
};

std::vector<NonGaloisRow> nongalois_table(const CharacterTable& t,
                                          const std::vector<AlgebraComponent>& comps,
                                          const HeckeOrder& o, const RankSpec& r,
                                          const TruncationSpec& trunc);

// |H|^v = prod over Hecke components of |eps_i H|^{v_i} on a realized module.
Rat omodule_size_power_v(const OModule& h, const std::vector<Rat>& v);

struct RankIndependenceReport {
    bool equal_ranks = false;
    bool equal_dims = false;
    std::vector<Rat> v_direct;   // through (Sigma, Sigma')
    std::vector<Rat> v_quotient; // through (Gamma, Gamma'), matched order
    bool ok() const { return equal_ranks && equal_dims; }
};

RankIndependenceReport rank_independence_check(const Group& sigma,
                                               const Subgroup& delta,
                                               const Subgroup& sigma_prime,
                                               const RankSpec& r_on_sigma);

} // namespace clm
