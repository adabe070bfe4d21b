#pragma once

#include "clm/dist.hpp"

#include <iosfwd>

namespace clm {

// One row of an external class-group table: a label (e.g. a discriminant,
// sign allowed) and the invariant-factor chain d1 | d2 | ... of the group.
struct DatasetRow {
    Int label;
    std::vector<Int> invariants; // each >= 2, divisibility chain
};

struct IngestResult {
    std::vector<DatasetRow> rows;
    std::vector<std::string> skipped; // lenient mode: "line N: reason"
};

// CSV with header "label,invariants"; invariants dot-joined ("3.3"), empty
// string is the trivial group. Strict mode throws FormatError on the first
// malformed row, lenient mode records and skips it.
IngestResult ingest_dataset(std::istream& in, bool strict);
IngestResult ingest_dataset_file(const std::string& path, bool strict);
std::string render_dataset(const std::vector<DatasetRow>& rows);

struct CompareRow {
    ModuleType type;
    Rat predicted;
    Rat empirical;
    long count = 0;
};

struct CompareReport {
    std::vector<CompareRow> rows;
    Rat closed_trivial;   // limit prediction for the trivial part
    long total = 0;       // rows ingested
    long unmatched = 0;   // rows whose p-part falls outside the truncation
};

// Empirical frequency of each enumerated type among the rows, next to the
// predicted probability (weight over the partial-product normalizer). Only
// multiplicity-one components are supported: a bare abelian group determines
// the module type exactly when every constituent has h = 1.
CompareReport compare_dataset(const std::vector<DatasetRow>& rows,
                              const CharacterTable& tab,
                              const std::vector<AlgebraComponent>& comps,
                              const std::vector<int>& positions,
                              const RankSpec& r, const TruncationSpec& trunc,
                              long normalizer_terms = 64);

} // namespace clm
