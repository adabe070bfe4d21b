#pragma once

#include "clm/abelian.hpp"
#include "clm/components.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace clm {

struct Partition {
    std::vector<long> parts; // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<long> p);
    Partition transpose() const;
    long sum() const;
    long max_part() const { return parts.empty() ? 0 : parts.front(); }
    bool empty() const { return parts.empty(); }
    std::string str() const; // "2.1", "" for empty
    auto operator<=>(const Partition&) const = default;
};

// all partitions with max part <= max_part and sum <= max_sum, sorted by
// (sum, lexicographic)
std::vector<Partition> partitions_bounded(long max_part, long max_sum);

struct TypeEntry {
    int comp_pos = 0; // position in the component list
    Int p;
    Partition lambda;
    Int h;          // component multiplicity
    Int q;          // residue size; q = p in the supported split case

    bool operator==(const TypeEntry& o) const {
        return comp_pos == o.comp_pos && p == o.p && lambda == o.lambda &&
               h == o.h && q == o.q;
    }
    bool operator<(const TypeEntry& o) const {
        if (comp_pos != o.comp_pos) return comp_pos < o.comp_pos;
        if (p != o.p) return p < o.p;
        return lambda < o.lambda;
    }
};

struct ModuleType {
    std::vector<TypeEntry> entries; // sorted by (comp_pos, p), no duplicates

    bool is_zero() const { return entries.empty(); }
    Int order() const; // product of q^{h*|lambda|}
    std::string str() const;
    bool operator==(const ModuleType& o) const { return entries == o.entries; }
    bool operator<(const ModuleType& o) const {
        return std::lexicographical_compare(entries.begin(), entries.end(),
                                            o.entries.begin(), o.entries.end());
    }
};

struct TruncationSpec {
    std::vector<std::pair<Int, long>> prime_exponents; // (p, n_p)
    std::optional<Int> order_bound;
};

enum class MapKind { Hom, Sur, Aut };

// Closed-form local counts (q = p, one component).
Int hom_count_formula(const Int& q, const Partition& lambda, const Partition& mu);
Int aut_count_formula(const Int& q, const Partition& mu);
Int sur_count_formula(const Int& q, const Partition& lambda, const Partition& mu);
// submodule-count: number of subgroups of type mu inside type lambda at q
Int submodule_count_bruteforce(const Int& q, const Partition& lambda, const Partition& mu);

// Counts between full types (product over aligned entries).
Int count_maps_formula(MapKind kind, const ModuleType& src, const ModuleType& dst);

// Partition type of a finite abelian p-group given by arbitrary p-power orders.
Partition partition_of_orders(const std::vector<Int>& orders, const Int& p);
// Realize a plain abelian p-group of the given type (no operators).
OpModule abelian_of_type(const Int& q, const Partition& lambda, const Int& h);

struct ComponentRef {
    int pos = 0;
    Int h;
};

std::vector<ModuleType> enumerate_types(const std::vector<ComponentRef>& comps,
                                        const TruncationSpec& trunc);

ModuleType parse_module_type(const std::string& text,
                             const std::vector<AlgebraComponent>& comps);

} // namespace clm
