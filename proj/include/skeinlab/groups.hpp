#pragma once

#include <string_view>

#include "skeinlab/permgroup.hpp"

namespace skeinlab {

// Resolves a group source: "trivial:d", "sym:d", "cyclic:d", "petersen", text
// in the group file format (recognized by a ';' or newline), or a file path.
// Throws GroupError.
GroupAction resolve_group(std::string_view source);

}  // namespace skeinlab
