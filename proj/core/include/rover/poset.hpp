#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rover/groupoid.hpp"
#include "rover/topology.hpp"

// The expansion poset.  A vertex is the class of an element f with domain
// C(1) under precomposition-after-the-fact by labeled permutations of its
// range components; its rank is the number of range components.  Vertices
// expand by splitting components, plainly or with a twist inside the new
// component, and the descending link of a vertex is assembled from its
// pair and triple contractions.

namespace rover {

class Vertex {
 public:
  explicit Vertex(GroupoidElement rep);
  const GroupoidElement& rep() const { return rep_; }
  int rank() const { return rep_.range_roots(); }
  const std::string& key() const;  // canonical class key, cached

 private:
  GroupoidElement rep_;
  mutable std::string key_;
};

bool vertex_equals(const Vertex& v, const Vertex& w);
int morse_rank(const Vertex& v);

// Vertex with the right-spine range tree {0^(n-1), 0^k 1}; the CLI uses it
// as the base point of rank n.
Vertex spine_vertex(int n);

// Single splittings: [x_i v] and the twisted [s_i x_i v], 2n of them.
std::vector<Vertex> splittings(const Vertex& v);
// Double splittings [x_i x_i v], n of them.
std::vector<Vertex> double_splittings(const Vertex& v);

// Per-component elementary pieces: leave alone, split, split with a twist,
// split twice.
enum class ElemPiece : uint8_t { One, X, SigmaX, XX };

GroupoidElement piece_element(ElemPiece p);

// All products of elementary pieces applied to v, deduplicated; 4^rank
// candidates before deduplication.
std::vector<Vertex> elementary_expansions(const Vertex& v);
Vertex apply_pieces(const Vertex& v, const std::vector<ElemPiece>& pieces);

// Whether w is an iterated splitting of v.  Ranks may differ by at most
// gap_cap (RankGapTooLarge).
bool is_expansion(const Vertex& v, const Vertex& w, int gap_cap = 8);

// A common upper bound: both vertices expand to the pure-tree vertex of the
// common refinement of their domain trees.
Vertex common_expansion(const Vertex& v, const Vertex& w);

// For an expansion v <= w, one witness factorization of the interval into
// per-component expansions g_i of the trivial vertex, so that w is obtained
// from v by applying g_i inside component i.  Throws NotAnExpansion.
std::vector<Vertex> factor_over(const Vertex& v, const Vertex& w, int gap_cap = 8);

struct ElemCore {
  std::vector<ElemPiece> pieces;  // one per component of v
  Vertex vertex;
};
// The largest elementary expansion of v lying below w.
ElemCore elementary_core(const Vertex& v, const Vertex& w, int gap_cap = 8);

enum class ContractionKind : uint8_t { Pair = 0, PairSigma = 1, Triple = 2 };

struct ContractionRecord {
  ContractionKind kind;
  std::vector<int> indices;   // ordered component tuple, 0-based
  std::vector<Klein> labels;  // decoration applied at indices before merging
  std::vector<int> support;   // sorted set of the indices
  Vertex vertex;
};

// All pair, twisted-pair and triple contractions of v, deduplicated by
// resulting vertex (keeping the lexicographically least description).
// Requires rank >= 2 for pairs, >= 3 for triples (RankTooSmall below 2).
// With all_labels=false only trivial decorations are enumerated.
std::vector<ContractionRecord> contractions(const Vertex& v, bool all_labels = true);

struct DescendingLink {
  std::vector<ContractionRecord> records;
  std::vector<std::pair<int, int>> edges;  // indices into records
  FlagGraph graph() const;
};

DescendingLink descending_link(const Vertex& v, bool all_labels = true);

// The 3k+1 disjoint trivial pair contractions at components
// {1,2},{3,4},...  Requires rank >= 6k+2 (RankTooSmall).
std::vector<ContractionRecord> ground_simplex(const Vertex& v, int k);

// Positions of the ground simplex records inside the link, by vertex key
// and support.
std::vector<int> locate_ground(const DescendingLink& link, const Vertex& v, int k);

// Elements fixing the vertex class, conjugated into the group of v's domain:
// rank! * 4^rank of them.  Requires rank <= 5 (RankTooLarge).
std::vector<GroupoidElement> stabilizer_elements(const Vertex& v);

struct BasicPolysimplex {
  std::vector<Vertex> vertices;  // product order, last factor fastest
  std::vector<int> shape;        // per-component dimension |S_i| - 1
  bool degenerate = false;       // some vertices coincide
};
// sets[i] must be one of the six admissible piece sets: {1}, {1,x}, {1,sx},
// {1,xx}, {1,x,xx}, {1,sx,xx} (IllegalSet otherwise).
BasicPolysimplex basic_polysimplex(const Vertex& v,
                                   const std::vector<std::vector<ElemPiece>>& sets);

}  // namespace rover
