#pragma once

#include "clm/matrix.hpp"

#include <vector>

namespace clm {

// Finite abelian group with a (possibly empty) list of integer operator
// matrices acting on column vectors modulo the cyclic orders. This is the
// shared substrate for Gamma-modules, Hecke-order modules, and the plain
// abelian groups used by the counting oracles.
struct OpModule {
    std::vector<Int> orders; // each >= 2; empty list is the zero module
    std::vector<IMat> ops;   // n x n matrices, one per operator

    int ngens() const { return static_cast<int>(orders.size()); }
    Int size() const;
    bool is_zero() const { return orders.empty(); }
    void validate() const; // operator well-definedness mod the orders
};

// Canonical invariant-factor chain d1 | d2 | ... of the group (CRT-merged).
std::vector<Int> invariant_factors(const std::vector<Int>& orders);

// Element enumeration table; requires size() to fit in long.
class ModuleTable {
public:
    explicit ModuleTable(const OpModule& m, long cap = 1 << 20);

    const OpModule& module() const { return *m_; }
    long size() const { return n_; }
    std::vector<long> element(long idx) const;
    long index(const std::vector<long>& e) const;
    long add(long a, long b) const;
    long neg(long a) const;
    long apply_op(std::size_t k, long a) const; // via precomputed tables
    long order_of(long a) const;

private:
    const OpModule* m_;
    long n_;
    std::vector<long> radix_;
    std::vector<std::vector<long>> op_table_;
};

// Closure of element indices under addition (subgroup generated).
std::vector<long> span_elements(const ModuleTable& t, std::vector<long> gens);

// All subgroups (as sorted index lists, ascending size); stable_only keeps
// the operator-stable ones.
std::vector<std::vector<long>> module_subgroups(const ModuleTable& t, bool stable_only);

// Structure (cyclic decomposition + induced operators) of the subgroup of B
// generated by the given element vectors; throws if not operator-stable.
OpModule submodule_structure(const OpModule& b, const std::vector<std::vector<long>>& gens);

// |Hom(A,B)| respecting all operators, by exact integer linear algebra.
Int count_hom_op(const OpModule& a, const OpModule& b);
// |Sur(A,B)| via Moebius inversion over the operator-stable subgroup lattice
// of B; |Aut(B)| = |Sur(B,B)|.
Int count_sur_op(const OpModule& a, const OpModule& b);
Int count_aut_op(const OpModule& b);
// Same-operator-signature isomorphism test (finite: surjection <=> iso).
bool modules_isomorphic_op(const OpModule& a, const OpModule& b);

// Moebius function mu(S, top) for every lattice member, top = last entry.
std::vector<Int> lattice_moebius_to_top(const std::vector<std::vector<long>>& lattice);

} // namespace clm
