#pragma once

#include <string>

#include "json.hpp"
#include "rover/groupoid.hpp"

namespace rover {

using json = nlohmann::ordered_json;

// Trees serialize as sorted lists of leaf addresses ("" is the root leaf),
// forests as lists of trees.  Permutation images and component indices are
// 1-based in JSON; labels are a string over e/b/c/d.
json tree_to_json(const Tree& t);
Tree tree_from_json(const json& j);
json forest_to_json(const Forest& f);
Forest forest_from_json(const json& j);
json element_to_json(const GroupoidElement& g);
GroupoidElement element_from_json(const json& j);

}  // namespace rover
