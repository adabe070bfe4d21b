#pragma once

#include "clm/gamma_module.hpp"

#include <memory>

namespace clm {

// A finite group extension of the base group by an abelian kernel of coprime
// order, together with a distinguished order-<=2 archimedean element.
struct ClassTriple {
    std::shared_ptr<Group> total; // G
    const Group* gamma = nullptr;
    GroupHom proj;                // pi : G -> Gamma
    int c_elem = 0;               // element of G, order dividing 2
    int s_elem = 0;               // element of Gamma, pi(c) = s
    std::vector<int> kernel_elems;
};

// Semidirect product realization; requires gcd(|h|,|Gamma|)=1, trivial
// fixed points, and s of order dividing 2.
ClassTriple build_class_triple(const GammaModule& h, int s_elem);

// Re-verifies every structural invariant; throws InvariantViolated.
void check_class_triple(const ClassTriple& t);

// |h^{<s>}| * |Aut over the group ring of h|.
Int triple_aut_formula(const ClassTriple& t, const GammaModule& h);
// Exhaustive count of automorphisms of G commuting with pi and fixing c.
Int triple_aut_bruteforce(const ClassTriple& t);
// Upper bound on the exhaustive search tree (product of fiber candidate
// counts), for deciding whether the brute-force oracle is affordable.
Int triple_aut_workbound(const ClassTriple& t);

// True iff every valid archimedean lift of s gives a triple isomorphic to
// the canonical one.
bool verify_uniqueness(const GammaModule& h, int s_elem);

// Total number of splittings Gamma -> G of pi.
Int splitting_count(const ClassTriple& t);

} // namespace clm
