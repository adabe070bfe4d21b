#include "clm/builtin.hpp"

#include "clm/errors.hpp"

namespace clm {

namespace {

struct Entry {
    const char* name;
    const char* text;
};

// Keep these byte-identical to the files in tools/data/ (a test compares).
const Entry kEntries[] = {
    {"C2",
     "name C2\n"
     "degree 2\n"
     "gen (1 2)\n"},
    {"C3",
     "name C3\n"
     "degree 3\n"
     "gen (1 2 3)\n"},
    {"C2xC2",
     "name C2xC2\n"
     "degree 4\n"
     "gen (1 2)\n"
     "gen (3 4)\n"
     "sub A (1 2)\n"
     "sub B (3 4)\n"
     "sub Diag (1 2)(3 4)\n"},
    {"S3",
     "name S3\n"
     "degree 3\n"
     "gen (1 2 3)\n"
     "gen (1 2)\n"
     "sub S2 (1 2)\n"
     "sub C3 (1 2 3)\n"},
    {"D4",
     "name D4\n"
     "degree 4\n"
     "gen (1 2 3 4)\n"
     "gen (1 3)\n"
     "sub Tau (1 3)\n"
     "sub Z (1 3)(2 4)\n"
     "sub ZTau (1 3); (2 4)\n"
     "sub C4 (1 2 3 4)\n"},
    {"A4",
     "name A4\n"
     "degree 4\n"
     "gen (1 2 3)\n"
     "gen (1 2)(3 4)\n"
     "sub V (1 2)(3 4); (1 3)(2 4)\n"
     "sub C3 (1 2 3)\n"},
    {"S4",
     "name S4\n"
     "degree 4\n"
     "gen (1 2 3 4)\n"
     "gen (1 2)\n"
     "sub S3 (1 2 3); (1 2)\n"
     "sub V (1 2)(3 4); (1 3)(2 4)\n"},
    {"A5",
     "name A5\n"
     "degree 5\n"
     "gen (1 2 3 4 5)\n"
     "gen (1 2 3)\n"
     "sub A4 (1 2 3); (1 2)(3 4)\n"
     "sub TS3 (1 2 3); (1 2)(4 5)\n"},
    {"S5",
     "name S5\n"
     "degree 5\n"
     "gen (1 2 3 4 5)\n"
     "gen (1 2)\n"
     "sub S4 (1 2 3 4); (1 2)\n"},
};

} // namespace

const char* builtin_group_text(const std::string& name) {
    for (const Entry& e : kEntries)
        if (name == e.name) return e.text;
    throw ParseError("no built-in group named '" + name + "'");
}

std::vector<std::string> builtin_group_names() {
    std::vector<std::string> out;
    for (const Entry& e : kEntries) out.emplace_back(e.name);
    return out;
}

GroupSpecDoc builtin_group(const std::string& name) {
    return parse_group_spec(builtin_group_text(name));
}

} // namespace clm
