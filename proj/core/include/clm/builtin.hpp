#pragma once

#include "clm/group_spec.hpp"

namespace clm {

// Group descriptions shipped with the tools (also installed as plain files
// under tools/data/). The library embeds them so the verification suites
// run without any data directory.
const char* builtin_group_text(const std::string& name);
std::vector<std::string> builtin_group_names();
GroupSpecDoc builtin_group(const std::string& name);

} // namespace clm
