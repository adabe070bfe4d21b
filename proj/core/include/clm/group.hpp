#pragma once

#include "clm/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clm {

// Permutation of {0..n-1} in image form.
using Perm = std::vector<int>;

Perm perm_compose(const Perm& a, const Perm& b); // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);

inline constexpr int kGroupCap = 200;

class Group {
public:
    // Closure of permutation generators; elements canonically indexed by
    // sorted permutation word (identity always gets id 0).
    static Group from_perm_generators(std::string name, int degree,
                                      std::vector<Perm> gens, int cap = kGroupCap);
    // Cayley mode: the table is validated against the full group axioms.
    static Group from_table(std::string name, std::vector<std::vector<int>> table,
                            int cap = kGroupCap);

    const std::string& name() const { return name_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(mult_.size()); }
    int identity() const { return id_; }
    int op(int a, int b) const { return mult_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    int conjugate(int g, int x) const { return op(op(g, x), inv_[g]); }
    int order_of(int a) const { return order_[a]; }
    int power(int a, long k) const;
    int exponent() const;
    bool is_perm_mode() const { return !perms_.empty(); }
    const Perm& perm(int a) const { return perms_[a]; }
    // ids of the stored generators (empty in table mode unless recorded)
    const std::vector<int>& generator_ids() const { return gen_ids_; }
    std::optional<int> find_perm(const Perm& p) const;
    std::string element_name(int a) const;

private:
    Group() = default;
    void finish_init();

    std::string name_;
    int degree_ = 0;
    int id_ = 0;
    std::vector<Perm> perms_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
    std::vector<int> order_;
    std::vector<int> gen_ids_;
};

struct Subgroup {
    const Group* parent = nullptr;
    std::vector<int> elems; // sorted
    std::vector<int> gens;

    int size() const { return static_cast<int>(elems.size()); }
    bool contains(int e) const;
};

// Closure of generator ids inside g.
Subgroup subgroup_closure(const Group& g, std::vector<int> gen_ids);
Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);
// Validates closure/identity/inverses of an explicit element list.
Subgroup subgroup_from_elements(const Group& g, std::vector<int> elems);
bool is_normal(const Group& g, const Subgroup& h);
// All subgroups of g, each as a sorted element list (ascending by size).
std::vector<std::vector<int>> all_subgroups(const Group& g);

struct GroupHom {
    const Group* src = nullptr;
    const Group* dst = nullptr;
    std::vector<int> map; // element id -> element id

    int operator()(int a) const { return map[a]; }
    void check() const; // throws InvariantViolated on non-multiplicativity
    bool is_surjective() const;
    std::vector<int> kernel() const;
};

struct ConjugacyClass {
    int rep;                  // minimal member id
    std::vector<int> members; // sorted
};

// Canonical order: by (element order of rep, class size, rep id);
// the identity class always comes first.
std::vector<ConjugacyClass> conjugacy_classes(const Group& g);

struct QuotientResult {
    std::vector<std::vector<int>> cosets; // left cosets, each sorted
    std::vector<int> coset_of;            // element id -> coset index
    bool normal = false;
    std::optional<Group> quotient;        // present iff normal
    std::optional<GroupHom> projection;   // g -> quotient
};

QuotientResult coset_and_quotient(const Group& g, const Subgroup& h);

// Greedy minimal generating set (first elements enlarging the closure).
std::vector<int> group_minimal_generators(const Group& g);
// Extends generator images to a full homomorphism when one exists.
std::optional<std::vector<int>> extend_generator_map(const Group& src,
                                                     const std::vector<int>& gens,
                                                     const Group& dst,
                                                     const std::vector<int>& images);

// Brute-force isomorphism test (small groups only; used by oracles).
bool groups_isomorphic(const Group& a, const Group& b);

} // namespace clm
