#pragma once

#include <string>
#include <vector>

#include "rover/cantor.hpp"
#include "rover/grigorchuk.hpp"

// Elements of the groupoid generated by split maps, permutations and the
// Grigorchuk generators acting on the union Cantor sets C(n).  Every element
// is kept in the normal form
//
//     g = f2^-1 . p_alpha . (k_1 + ... + k_n) . f1
//
// where f1: C(m) -> C(n) and f2: C(m') -> C(n) are forests, alpha permutes
// the n leaves and each Klein label k_j acts on the tail entering leaf j of
// f1 before the leaf is sent to leaf alpha(j) of f2.

namespace rover {

struct GroupoidElement {
  Forest f1;
  Permutation alpha;
  std::vector<Klein> labels;
  Forest f2;

  int domain_roots() const { return f1.roots(); }
  int range_roots() const { return f2.roots(); }
  int inner_size() const { return f1.leaf_count(); }

  bool operator==(const GroupoidElement& o) const = default;  // structural
};

GroupoidElement make_element(Forest f1, Permutation alpha, std::vector<Klein> labels, Forest f2);
GroupoidElement identity_element(int m);

enum class Generator { X, Sigma, B, C, D };

// x_i, sigma_i, b_i, c_i, d_i acting at component i (0-based) of C(n).
// b and c are realized through their depth-2 nucleus form, d at depth 1.
GroupoidElement from_generator(Generator kind, int i, int n);
GroupoidElement perm_element(const Permutation& alpha);
GroupoidElement klein_element(int n, int i, Klein k);

GroupoidElement direct_sum(const GroupoidElement& a, const GroupoidElement& b);

// g . h, h acting first; domain of g must equal the range of h.
GroupoidElement multiply(const GroupoidElement& g, const GroupoidElement& h, int depth_cap = 64);

GroupoidElement invert(const GroupoidElement& g);

// Greedy caret cancellation.  Sibling leaves of f1 carried order-preservingly
// onto sibling leaves of f2 collapse when the labels are (e,e) or (e,b); the
// merged leaf keeps label e or d.  These are the only patterns whose merged
// decoration stays in the Klein group.
GroupoidElement reduce(const GroupoidElement& g);

bool is_identity(const GroupoidElement& g);
bool equals(const GroupoidElement& g, const GroupoidElement& h);

struct EvalResult {
  int root;              // range component
  std::string bits;      // image address prefix
  GrigWord residual;     // acts on the unread tail
};
// Follow (root, bits) through the element; bits must reach a leaf of f1.
EvalResult evaluate(const GroupoidElement& g, int root, const std::string& bits);

// Like evaluate but returns only (root, bits); bits is consumed entirely.
std::pair<int, std::string> full_image(const GroupoidElement& g, int root,
                                       const std::string& bits);

}  // namespace rover
