#pragma once

#include "clm/cyclotomic.hpp"
#include "clm/group.hpp"

#include <memory>

namespace clm {

struct CharacterTable {
    const Group* group = nullptr;
    int exponent = 1;
    std::shared_ptr<CycRing> ring;
    std::vector<ConjugacyClass> classes;
    std::vector<int> class_of;      // element id -> class index
    std::vector<int> inverse_class; // class index -> class index of inverses
    std::vector<std::vector<CycElt>> rows; // absolutely irreducible characters
    std::vector<Int> degrees;

    int num_classes() const { return static_cast<int>(classes.size()); }
    const CycElt& value(int row, int element) const {
        return rows[row][class_of[element]];
    }
    // exact inner product of two rows (or arbitrary class functions)
    Rat inner(const std::vector<CycElt>& a, const std::vector<CycElt>& b) const;
    Rat inner_rows(int a, int b) const { return inner(rows[a], rows[b]); }
    std::vector<CycElt> rational_class_function(const std::vector<Rat>& v) const;
};

// Burnside-Dixon: character table over a finite field lifted to exact
// cyclotomic values, deterministic given the canonical class ordering.
CharacterTable character_table(const Group& g);

} // namespace clm
