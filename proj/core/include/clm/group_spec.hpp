#pragma once

#include "clm/group.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace clm {

// Parsed group description document. See README for the grammar:
//   name NAME
//   degree N              (permutation mode)
//   gen (c1 c2 ...)(...)  one generator per line, cycles 1-based
//   sub NAME (..); (..)   named subgroup by generators, ';' separated
// or Cayley mode:
//   name NAME
//   table N
//   row i0 i1 ... i{N-1}  (N rows)
struct GroupSpecDoc {
    std::shared_ptr<Group> group;
    std::vector<Perm> generator_perms;                       // as written
    std::vector<std::pair<std::string, std::vector<Perm>>> subgroup_gens;

    Subgroup subgroup(const std::string& name) const;
    std::vector<std::string> subgroup_names() const;
};

Perm parse_perm_word(const std::string& text, int degree);
std::string perm_to_string(const Perm& p);

GroupSpecDoc parse_group_spec(const std::string& text, int cap = kGroupCap);
GroupSpecDoc load_group_spec(const std::string& path, int cap = kGroupCap);
std::string serialize_group_spec(const GroupSpecDoc& doc);

} // namespace clm
