#include "clm/dataset.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace clm {

namespace {

bool parse_int(const std::string& s, Int& out) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    out = Int(s);
    return true;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

DatasetRow parse_row(const std::string& line) {
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) throw FormatError("missing comma");
    DatasetRow row;
    if (!parse_int(trim(line.substr(0, comma)), row.label))
        throw FormatError("label is not an integer");
    std::string inv = trim(line.substr(comma + 1));
    if (inv.empty()) return row; // trivial group
    std::istringstream in(inv);
    std::string piece;
    while (std::getline(in, piece, '.')) {
        Int d;
        if (!parse_int(trim(piece), d) || d < 2)
            throw FormatError("invariant factor '" + piece + "' is not an integer >= 2");
        row.invariants.push_back(d);
    }
    for (std::size_t i = 0; i + 1 < row.invariants.size(); ++i)
        if (!mpz_divisible_p(row.invariants[i + 1].get_mpz_t(),
                             row.invariants[i].get_mpz_t()))
            throw FormatError("divisibility chain violated: " + inv);
    return row;
}

} // namespace

IngestResult ingest_dataset(std::istream& in, bool strict) {
    IngestResult out;
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (!saw_header) {
            if (t != "label,invariants")
                throw FormatError("expected header 'label,invariants', got '" + t + "'");
            saw_header = true;
            continue;
        }
        try {
            out.rows.push_back(parse_row(t));
        } catch (const FormatError& e) {
            std::string msg = "line " + std::to_string(lineno) + ": " + e.what();
            if (strict) throw FormatError(msg);
            out.skipped.push_back(msg);
        }
    }
    if (!saw_header) throw FormatError("empty dataset (no header)");
    return out;
}

IngestResult ingest_dataset_file(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open dataset: " + path);
    return ingest_dataset(in, strict);
}

std::string render_dataset(const std::vector<DatasetRow>& rows) {
    std::ostringstream out;
    out << "label,invariants\n";
    for (const DatasetRow& r : rows) {
        out << r.label.get_str() << ',';
        for (std::size_t i = 0; i < r.invariants.size(); ++i) {
            if (i) out << '.';
            out << r.invariants[i].get_str();
        }
        out << '\n';
    }
    return out.str();
}

CompareReport compare_dataset(const std::vector<DatasetRow>& rows,
                              const CharacterTable& tab,
                              const std::vector<AlgebraComponent>& comps,
                              const std::vector<int>& positions,
                              const RankSpec& r, const TruncationSpec& trunc,
                              long normalizer_terms) {
    (void)tab;
    if (positions.size() != 1 || comps[static_cast<std::size_t>(positions[0])].h != 1)
        throw UnsupportedComponent(
            "dataset comparison needs a single multiplicity-one component");
    int pos = positions[0];
    const Rat& u = r.u[static_cast<std::size_t>(pos)];
    if (!is_integral(u))
        throw NonIntegralPower("comparison normalizer needs an integer exponent");
    long ui = Rat(u).get_num().get_si();

    std::vector<ComponentRef> refs{{pos, comps[static_cast<std::size_t>(pos)].h}};
    std::vector<ModuleType> types = enumerate_types(refs, trunc);

    Rat z = 1;
    for (const auto& [p, np] : trunc.prime_exponents) {
        (void)np;
        z *= local_normalizer_partial(p, ui, normalizer_terms);
    }

    CompareReport rep;
    rep.closed_trivial = 1 / z;
    rep.total = static_cast<long>(rows.size());

    std::map<std::string, long> counts;
    for (const DatasetRow& row : rows) {
        ModuleType t;
        for (const auto& [p, np] : trunc.prime_exponents) {
            (void)np;
            std::vector<Int> ppart;
            for (const Int& d : row.invariants) {
                Int q = pow_int(p, static_cast<unsigned long>(valuation(d, p)));
                if (q > 1) ppart.push_back(q);
            }
            Partition lam = partition_of_orders(ppart, p);
            if (lam.empty()) continue;
            t.entries.push_back({pos, p, lam, Int(1), p});
        }
        counts[t.str()] += 1;
    }

    long matched = 0;
    for (const ModuleType& t : types) {
        CompareRow cr;
        cr.type = t;
        cr.predicted = weight(t, r, comps) / z;
        auto it = counts.find(t.str());
        cr.count = it == counts.end() ? 0 : it->second;
        matched += cr.count;
        cr.empirical = rep.total == 0 ? Rat(0) : make_rat(Int(cr.count), Int(rep.total));
        rep.rows.push_back(std::move(cr));
    }
    rep.unmatched = rep.total - matched;
    return rep;
}

} // namespace clm
