#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rover/cantor.hpp"
#include "rover/errors.hpp"
#include "rover/groupoid.hpp"

// Seeded generators and small evaluation oracles shared by the test binaries.

namespace testutil {

// Error code raised by f, or a sentinel when nothing was thrown.
inline constexpr auto kNoError = static_cast<rover::Errc>(255);

template <class F>
rover::Errc thrown_errc(F&& f) {
  try {
    f();
  } catch (const rover::Error& e) {
    return e.code();
  }
  return kNoError;
}

inline std::string random_bits(std::mt19937_64& rng, int len) {
  std::string s(static_cast<size_t>(len), '0');
  for (char& c : s) c = (rng() & 1) ? '1' : '0';
  return s;
}

// Grows a tree by splitting random leaves.
inline rover::Tree random_tree(std::mt19937_64& rng, int splits) {
  std::vector<std::string> leaves = {""};
  for (int s = 0; s < splits; ++s) {
    size_t at = rng() % leaves.size();
    std::string base = leaves[at];
    leaves[at] = base + "0";
    leaves.push_back(base + "1");
  }
  return rover::Tree::from_leaves(std::move(leaves));
}

inline rover::Forest random_forest(std::mt19937_64& rng, int roots, int total_splits) {
  std::vector<rover::Tree> trees;
  trees.reserve(static_cast<size_t>(roots));
  for (int r = 0; r < roots; ++r) trees.push_back(rover::Tree::trivial());
  for (int s = 0; s < total_splits; ++s) {
    int r = static_cast<int>(rng() % static_cast<uint64_t>(roots));
    std::vector<std::string> leaves = trees[r].leaves();
    size_t at = rng() % leaves.size();
    std::string base = leaves[at];
    leaves[at] = base + "0";
    leaves.push_back(base + "1");
    trees[r] = rover::Tree::from_leaves(std::move(leaves));
  }
  return rover::Forest(std::move(trees));
}

inline rover::Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> images(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
    std::swap(images[i], images[j]);
  }
  return rover::Permutation(std::move(images));
}

inline rover::GrigWord random_word(std::mt19937_64& rng, int len) {
  static const char letters[] = {'s', 'b', 'c', 'd'};
  std::string w;
  w.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) w += letters[rng() % 4];
  return rover::GrigWord(w);
}

// Random product of generator elements starting at C(m); the range arity
// walks between 1 and max_arity.
inline rover::GroupoidElement random_element(std::mt19937_64& rng, int m, int steps,
                                             int max_arity = 4) {
  rover::GroupoidElement e = rover::identity_element(m);
  int r = m;
  for (int s = 0; s < steps; ++s) {
    int choice = static_cast<int>(rng() % 6);
    rover::GroupoidElement f = rover::identity_element(r);
    if (choice == 0 && r < max_arity) {
      f = rover::from_generator(rover::Generator::X, static_cast<int>(rng() % r), r);
      ++r;
    } else if (choice == 1 && r > 1) {
      f = rover::invert(
          rover::from_generator(rover::Generator::X, static_cast<int>(rng() % (r - 1)), r - 1));
      --r;
    } else if (choice == 2) {
      f = rover::perm_element(random_permutation(rng, r));
    } else {
      static const rover::Generator gens[] = {rover::Generator::Sigma, rover::Generator::B,
                                              rover::Generator::C, rover::Generator::D};
      f = rover::from_generator(gens[rng() % 4], static_cast<int>(rng() % r), r);
    }
    e = rover::multiply(f, e);
  }
  return e;
}

// Sends (root, bits) through a forest read as a map C(roots) -> C(leaves):
// the covering leaf becomes the output component, its address is consumed.
inline std::pair<int, std::string> forest_apply(const rover::Forest& f, int root,
                                                const std::string& bits) {
  const rover::Tree& t = f.tree(root);
  auto leaf = t.locate(bits);
  if (!leaf) return {-1, ""};  // too shallow
  return {f.leaf_offset(root) + *leaf, bits.substr(t.leaf(*leaf).size())};
}

}  // namespace testutil
