#pragma once

#include "clm/counting.hpp"
#include "clm/group.hpp"

namespace clm {

// Finite module over the integral group ring: an abelian group together with
// an action matrix per generating group element.
struct GammaModule {
    const Group* group = nullptr;
    OpModule mod;             // ops aligned with gen_ids
    std::vector<int> gen_ids; // ids of generating elements of the group
    bool trivial_invariants = false; // no nonzero fixed points under the group

    Int size() const { return mod.size(); }
};

// Action matrix for every group element, grown from the generator matrices
// along the Cayley table. Verifies all relations (every product edge) and
// that each matrix is invertible mod the orders; throws InvariantViolated.
std::vector<IMat> full_action(const GammaModule& m);

// Runs full_action checks and fills the trivial_invariants flag.
void validate_gamma(GammaModule& m);

struct RegistryRep {
    std::vector<int> gen_ids;
    std::vector<IMat> mats; // one per generator, h x h
};

// Integral matrices realizing a split component on the group's generators.
// Covers all degree-1 rational components plus registered standard and
// dihedral representations; throws UnsupportedComponent otherwise.
RegistryRep registry_rep(const CharacterTable& t, const AlgebraComponent& comp);

GammaModule module_from_type(const ModuleType& t, const CharacterTable& tab,
                             const std::vector<AlgebraComponent>& comps);
ModuleType type_of_module(const GammaModule& m, const CharacterTable& tab,
                          const std::vector<AlgebraComponent>& comps);

struct FixedNorm {
    OpModule fixed;       // structure of the fixed submodule (no operators)
    OpModule norm;        // structure of the norm image
    Int fixed_order = 1;
    Int norm_order = 1;
    bool tate_h0_trivial = true; // fixed == norm image
};

FixedNorm fixed_and_norm(const GammaModule& m, const Subgroup& sub);

// Generating element vectors of the fixed submodule under the subgroup.
std::vector<std::vector<long>> fixed_generators(const GammaModule& m,
                                                const Subgroup& sub);

struct BruteforceCaps {
    int max_group = 24;
    Int max_order = 81;       // structure enumeration cap
    Int max_count_order = 243; // map-counting cap
};

// Every module structure on the given abelian group up to isomorphism over
// the group ring (independent oracle behind enumeration and counting).
std::vector<GammaModule> bruteforce_module_structures(
    const Group& g, const std::vector<Int>& invariants,
    const BruteforceCaps& caps = {});

// Exact equivariant map counts between concrete modules over the same group.
Int count_maps_bruteforce(MapKind kind, const GammaModule& src,
                          const GammaModule& dst, const BruteforceCaps& caps = {});
bool gamma_isomorphic(const GammaModule& a, const GammaModule& b);

} // namespace clm
