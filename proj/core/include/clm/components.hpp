#pragma once

#include "clm/character.hpp"
#include "clm/matrix.hpp"

#include <map>

namespace clm {

// One simple factor of Q[Gamma].
struct AlgebraComponent {
    int index = 0;                 // 1-based, trivial component is 1
    std::vector<Rat> chi;          // rational character (Galois orbit sum), per class
    std::vector<CycElt> phi;       // chosen absolutely irreducible constituent
    Int h = 0;                     // phi(1)
    int center_degree = 1;         // [K_i : Q]
    Int dim = 0;                   // dim_Q of the simple factor
    QVec idempotent;               // element id -> exact rational coefficient
    bool split_registered = false; // from the splitness registry
};

// Group algebra helpers: elements of Q[Gamma] as coefficient vectors.
QVec galg_mul(const Group& g, const QVec& a, const QVec& b);
QVec galg_scale(const QVec& a, const Rat& r);
QVec galg_add(const QVec& a, const QVec& b);
bool galg_is_zero(const QVec& a);

std::vector<AlgebraComponent> rational_components(const CharacterTable& t);

// Groups whose center-Q components are certified split with Schur index 1.
bool split_registry_covers(const std::string& group_name);

enum class PrimeVerdict { Good, Bad, Unsupported };
const char* verdict_name(PrimeVerdict v);

struct GoodPrimeDetail {
    bool denominator = false; // e integral at p
    bool gram = false;        // unit Gram determinant at p
    bool closed = false;      // p does not divide |Gamma|/h_i
};

// Verdict for the sum of the listed components (positions into comps).
PrimeVerdict good_prime_for(const CharacterTable& t,
                            const std::vector<AlgebraComponent>& comps,
                            const std::vector<int>& positions, const Int& p,
                            std::vector<GoodPrimeDetail>* details = nullptr);
std::map<Int, PrimeVerdict> good_primes(const CharacterTable& t,
                                        const std::vector<AlgebraComponent>& comps,
                                        const std::vector<int>& positions,
                                        const std::vector<Int>& primes);

struct RankSpec {
    const CharacterTable* table = nullptr;
    std::vector<Rat> chiK; // virtual character per class (empty if u given directly)
    std::vector<Rat> u;    // aligned with comps; u[0] (trivial) unused, kept 0
    bool has_places = false;
    std::vector<Subgroup> places;
};

RankSpec rank_u(const CharacterTable& t, const std::vector<AlgebraComponent>& comps,
                const std::vector<Subgroup>& places);
RankSpec rank_from_u(const CharacterTable& t,
                     const std::vector<AlgebraComponent>& comps,
                     const std::vector<Rat>& u_nontrivial);

} // namespace clm
