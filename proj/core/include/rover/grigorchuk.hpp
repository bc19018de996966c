#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rover/cantor.hpp"

// The Grigorchuk group as a Mealy automaton over the binary alphabet.
// Generators sigma, b, c, d obey
//   sigma: 0 -> 1 / e,  1 -> 0 / e       (flips the first bit)
//   b:     0 -> 0 / s,  1 -> 1 / c
//   c:     0 -> 0 / s,  1 -> 1 / d
//   d:     0 -> 0 / e,  1 -> 1 / b
// e, b, c, d form a Klein four-group; {e, sigma, b, c, d} is the nucleus.

namespace rover {

enum class Klein : uint8_t { E = 0, B = 1, C = 2, D = 3 };
enum class Nucleus : uint8_t { E = 0, S = 1, B = 2, C = 3, D = 4 };

Klein klein_mul(Klein a, Klein b);
char klein_char(Klein k);        // one of e b c d
Klein klein_from_char(char c);

char nucleus_char(Nucleus s);    // one of e s b c d
Nucleus nucleus_of(Klein k);
bool nucleus_is_klein(Nucleus s);
Klein klein_of(Nucleus s);       // requires nucleus_is_klein(s)

// One automaton step: output bit and residual state.
std::pair<char, Nucleus> nucleus_step(Nucleus s, char bit);

// Word over {s,b,c,d}; the product reads left to right but the RIGHTMOST
// letter acts first on points.  The empty word is the identity.
struct GrigWord {
  std::string letters;

  GrigWord() = default;
  explicit GrigWord(std::string w);
  static GrigWord one();
  static GrigWord letter(char c);
  static GrigWord from_klein(Klein k);  // empty word for E
  static GrigWord from_nucleus(Nucleus s);

  bool empty() const { return letters.empty(); }
  int size() const { return static_cast<int>(letters.size()); }
  GrigWord inverse() const;  // letters are involutions: reverse the word
  GrigWord concat(const GrigWord& right) const;  // this acts after right

  bool operator==(const GrigWord& o) const = default;
};

// Free/Klein reduction: cancel equal adjacent letters, fold adjacent Klein
// letters, drop identities.  The result alternates s with Klein letters.
GrigWord word_reduce(const GrigWord& w);

// Image prefix of u and the residual word acting on the tail.
std::pair<std::string, GrigWord> word_eval(const GrigWord& w, const std::string& u);

struct SplitThrough {
  bool swap;    // true when the pushed word flips the top caret
  GrigWord w0;  // acts under output child 0
  GrigWord w1;
};
// x . w = p_swap (w0 + w1) x, pushing the split map through the word.
SplitThrough push_split_through_word(const GrigWord& w);

struct ForestThrough {
  Permutation alpha;            // on the leaves of f
  std::vector<GrigWord> words;  // one per leaf
  Forest forest;                // same leaf counts; subtrees swapped along the way
};
// f (w_1 + ... + w_m) = p_alpha (words) f', one word per root of f.
ForestThrough push_forest_through_decoration(const Forest& f, const std::vector<GrigWord>& words);

struct NucleusForm {
  Tree tree;
  Permutation alpha;          // on the leaves of tree
  std::vector<Klein> labels;  // applied before permuting
};
// w = tree^-1 . p_alpha . (labels) . tree with one tree on both sides.
// Splits proceed breadth-first in alpha-cycle-closed batches so the two
// copies of the tree stay equal; a nonempty word always splits at least once.
NucleusForm word_to_nucleus_form(const GrigWord& w, int depth_cap = 64);

GrigWord parse_grig_word(const std::string& text);  // letters in {s,b,c,d}

// True iff the word acts trivially on the binary tree.
bool word_is_identity(const GrigWord& w, int depth_cap = 64);

}  // namespace rover
