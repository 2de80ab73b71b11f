#pragma once

#include <string>
#include <vector>

#include "symbreak/perm.hpp"

namespace symbreak {

/// JSON form of a symmetry:
/// {"label": "rot90", "var": [..], "val": [..], "offset": 1}
/// where var and val are index images and offset maps value index k to
/// external value k + offset.
std::string symmetry_to_json(const Symmetry& g, int offset);
Symmetry symmetry_from_json(const std::string& text);

/// {"vars": n, "values": m, "offset": o, "generators": [symmetry, ...]}.
std::string generators_to_json(const SymmetryGroup& group, int offset);
SymmetryGroup group_from_json(const std::string& text);

} // namespace symbreak
