#pragma once

#include <string>

#include "rover/groupoid.hpp"

// Canonical serializations used for fast equality and deduplication.
//
// Every element maps each sufficiently deep cylinder onto a cylinder with a
// tail action in the nucleus {e,s,b,c,d}.  Splitting down to such tails and
// then greedily merging sibling pairs whose merged tail stays in the nucleus
// reaches the unique coarsest nucleus-labeled decomposition of the map, which
// serializes to a canonical key.  For coset keys the decomposition is taken
// per range component, minimized over the four Klein twists, and the
// component encodings are sorted, which quotients exactly by K_n.

namespace rover {

// Equal keys iff the two elements are equal maps.
std::string element_key(const GroupoidElement& g, int depth_cap = 64);

// Equal keys iff the elements generate the same left coset K_n g.
std::string coset_key(const GroupoidElement& g, int depth_cap = 64);

}  // namespace rover
