#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rover/errors.hpp"

// Finite binary trees, forests and permutations acting on disjoint unions of
// Cantor sets.  C(n) is n disjoint copies of the Cantor set {0,1}^inf; a
// forest with m roots and n leaves encodes the homeomorphism C(m) -> C(n)
// obtained by composing split maps.  All indices are 0-based internally.

namespace rover {

// Word over '0'/'1'; "" addresses the root.
using Address = std::string;

bool is_valid_address(const Address& a);

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;
  Permutation inverse() const;

  bool operator==(const Permutation& o) const = default;

 private:
  std::vector<int> img_;
};

// (a*b)(i) = a(b(i)); b acts first, matching left-to-right map composition.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation direct_sum(const Permutation& a, const Permutation& b);

// Blow every point i up to a block of size sizes[i]; block i is sent onto the
// contiguous target slot of alpha(i), preserving order inside blocks.
Permutation block_permutation(const Permutation& alpha, const std::vector<int>& sizes);

class Tree {
 public:
  Tree();  // trivial tree: single leaf ""
  static Tree trivial();
  // Validates that the addresses form a complete prefix code.
  static Tree from_leaves(std::vector<Address> leaves);
  static Tree caret(const Tree& left, const Tree& right);

  int leaf_count() const { return static_cast<int>(leaves_.size()); }
  const std::vector<Address>& leaves() const { return leaves_; }
  const Address& leaf(int i) const;
  bool is_trivial() const { return leaves_.size() == 1; }
  int max_depth() const;

  // Subtrees hanging under the root caret; requires a non-trivial tree.
  std::pair<Tree, Tree> split_root() const;

  // Index of the unique leaf whose address is a prefix of bits, or nullopt if
  // bits is too shallow to reach a leaf.
  std::optional<int> locate(const std::string& bits) const;

  bool operator==(const Tree& o) const = default;

 private:
  std::vector<Address> leaves_;  // sorted; complete prefix code
};

class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);
  static Forest trivial(int roots);
  static Forest single(Tree t);

  int roots() const { return static_cast<int>(trees_.size()); }
  const Tree& tree(int r) const;
  const std::vector<Tree>& trees() const { return trees_; }
  int leaf_count() const;
  int leaf_offset(int r) const;  // leaves before root r
  bool is_trivial() const;
  int max_depth() const;

  bool operator==(const Forest& o) const = default;

 private:
  std::vector<Tree> trees_;
};

// Forest with n roots splitting root i into a caret: C(n) -> C(n+1).
Forest split_at(int n, int i);

// Graft tree j of outer onto leaf j of inner; addresses concatenate.
// inner: C(m) -> C(n), outer: C(n) -> C(p), result C(m) -> C(p).
Forest forest_compose(const Forest& inner, const Forest& outer);

struct Refinement {
  Tree refined;      // coarsest common refinement T
  Forest on_first;   // forest_compose(t1, on_first) == T
  Forest on_second;  // forest_compose(t2, on_second) == T
};
Refinement common_refinement(const Tree& t1, const Tree& t2);

struct PermPushdown {
  Permutation alpha;  // permutation of the leaves
  Forest forest;      // trees reordered: tree r of forest == tree alpha_root(r) of f
};
// Solve f . p_alpha = p_alpha' . f' for alpha' and f' (alpha permutes roots).
PermPushdown permutation_pushdown(const Forest& f, const Permutation& alpha);

// Root index and in-root address of global leaf j.
std::pair<int, Address> leaf_location(const Forest& f, int leaf);

}  // namespace rover
