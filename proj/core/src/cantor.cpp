#include "rover/cantor.hpp"

#include <algorithm>
#include <numeric>

namespace rover {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::prefix_violation: return "PrefixViolation";
    case Errc::incomplete_code: return "IncompleteCode";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::unknown_generator: return "UnknownGenerator";
    case Errc::input_too_shallow: return "InputTooShallow";
    case Errc::contraction_cap_exceeded: return "ContractionCapExceeded";
    case Errc::rank_gap_too_large: return "RankGapTooLarge";
    case Errc::not_an_expansion: return "NotAnExpansion";
    case Errc::rank_too_small: return "RankTooSmall";
    case Errc::rank_too_large: return "RankTooLarge";
    case Errc::size_cap_exceeded: return "SizeCapExceeded";
    case Errc::not_a_clique: return "NotAClique";
    case Errc::illegal_set: return "IllegalSet";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

bool is_valid_address(const Address& a) {
  return std::all_of(a.begin(), a.end(), [](char c) { return c == '0' || c == '1'; });
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    require(v >= 0 && v < size() && !seen[v], Errc::index_out_of_range,
            "not a permutation image list");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  require(a >= 0 && a < n && b >= 0 && b < n, Errc::index_out_of_range, "transposition");
  auto p = identity(n);
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 0; i < size(); ++i) img[img_[i]] = i;
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require(a.size() == b.size(), Errc::arity_mismatch, "permutation sizes differ");
  std::vector<int> img(a.size());
  for (int i = 0; i < a.size(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> img;
  img.reserve(a.size() + b.size());
  for (int i = 0; i < a.size(); ++i) img.push_back(a(i));
  for (int i = 0; i < b.size(); ++i) img.push_back(b(i) + a.size());
  return Permutation(std::move(img));
}

Permutation block_permutation(const Permutation& alpha, const std::vector<int>& sizes) {
  require(alpha.size() == static_cast<int>(sizes.size()), Errc::arity_mismatch,
          "block sizes do not match permutation");
  int m = alpha.size();
  std::vector<int> src_off(m, 0), tgt_off(m, 0);
  for (int i = 1; i < m; ++i) src_off[i] = src_off[i - 1] + sizes[i - 1];
  // Target slot of block i starts after all blocks placed before alpha(i).
  std::vector<int> size_at_target(m);
  for (int i = 0; i < m; ++i) size_at_target[alpha(i)] = sizes[i];
  std::vector<int> slot(m, 0);
  for (int p = 1; p < m; ++p) slot[p] = slot[p - 1] + size_at_target[p - 1];
  int total = src_off.empty() ? 0 : src_off[m - 1] + sizes[m - 1];
  std::vector<int> img(total);
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < sizes[i]; ++r) img[src_off[i] + r] = slot[alpha(i)] + r;
  return Permutation(std::move(img));
}

Tree::Tree() : leaves_{Address{}} {}

Tree Tree::trivial() { return Tree(); }

Tree Tree::from_leaves(std::vector<Address> leaves) {
  require(!leaves.empty(), Errc::incomplete_code, "empty leaf set");
  for (const auto& a : leaves)
    require(is_valid_address(a), Errc::prefix_violation, "address has characters outside 0/1");
  std::sort(leaves.begin(), leaves.end());
  for (size_t i = 0; i + 1 < leaves.size(); ++i) {
    const auto& a = leaves[i];
    const auto& b = leaves[i + 1];
    require(!(a.size() <= b.size() && b.compare(0, a.size(), a) == 0), Errc::prefix_violation,
            "leaf " + (a.empty() ? std::string("\"\"") : a) + " is a prefix of " + b);
  }
  // A sorted complete prefix code collapses to the root by merging sibling pairs.
  std::vector<Address> st;
  for (const auto& a : leaves) {
    st.push_back(a);
    while (st.size() >= 2) {
      Address& top = st.back();
      Address& under = st[st.size() - 2];
      if (!top.empty() && !under.empty() && top.size() == under.size() &&
          top.back() == '1' && under.back() == '0' &&
          top.compare(0, top.size() - 1, under, 0, under.size() - 1) == 0) {
        Address parent = under.substr(0, under.size() - 1);
        st.pop_back();
        st.back() = std::move(parent);
      } else {
        break;
      }
    }
  }
  require(st.size() == 1 && st[0].empty(), Errc::incomplete_code,
          "leaves do not form a complete prefix code");
  Tree t;
  t.leaves_ = std::move(leaves);
  return t;
}

Tree Tree::caret(const Tree& left, const Tree& right) {
  std::vector<Address> leaves;
  leaves.reserve(left.leaf_count() + right.leaf_count());
  for (const auto& a : left.leaves_) leaves.push_back("0" + a);
  for (const auto& a : right.leaves_) leaves.push_back("1" + a);
  Tree t;
  t.leaves_ = std::move(leaves);  // still sorted and complete
  return t;
}

const Address& Tree::leaf(int i) const {
  require(i >= 0 && i < leaf_count(), Errc::index_out_of_range, "leaf index");
  return leaves_[i];
}

int Tree::max_depth() const {
  size_t d = 0;
  for (const auto& a : leaves_) d = std::max(d, a.size());
  return static_cast<int>(d);
}

std::pair<Tree, Tree> Tree::split_root() const {
  require(!is_trivial(), Errc::index_out_of_range, "trivial tree has no root caret");
  Tree l, r;
  l.leaves_.clear();
  r.leaves_.clear();
  for (const auto& a : leaves_) {
    if (a[0] == '0')
      l.leaves_.push_back(a.substr(1));
    else
      r.leaves_.push_back(a.substr(1));
  }
  return {l, r};
}

std::optional<int> Tree::locate(const std::string& bits) const {
  // Largest leaf <= bits is the unique prefix of bits when one exists.
  auto it = std::upper_bound(leaves_.begin(), leaves_.end(), bits);
  if (it != leaves_.begin()) {
    const Address& cand = *(it - 1);
    if (cand.size() <= bits.size() && bits.compare(0, cand.size(), cand) == 0)
      return static_cast<int>(it - 1 - leaves_.begin());
  }
  return std::nullopt;
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  require(!trees_.empty(), Errc::arity_mismatch, "forest needs at least one root");
}

Forest Forest::trivial(int roots) {
  require(roots >= 1, Errc::arity_mismatch, "forest needs at least one root");
  return Forest(std::vector<Tree>(roots, Tree::trivial()));
}

Forest Forest::single(Tree t) { return Forest(std::vector<Tree>{std::move(t)}); }

const Tree& Forest::tree(int r) const {
  require(r >= 0 && r < roots(), Errc::index_out_of_range, "root index");
  return trees_[r];
}

int Forest::leaf_count() const {
  int n = 0;
  for (const auto& t : trees_) n += t.leaf_count();
  return n;
}

int Forest::leaf_offset(int r) const {
  require(r >= 0 && r < roots(), Errc::index_out_of_range, "root index");
  int n = 0;
  for (int i = 0; i < r; ++i) n += trees_[i].leaf_count();
  return n;
}

bool Forest::is_trivial() const {
  return std::all_of(trees_.begin(), trees_.end(), [](const Tree& t) { return t.is_trivial(); });
}

int Forest::max_depth() const {
  int d = 0;
  for (const auto& t : trees_) d = std::max(d, t.max_depth());
  return d;
}

Forest split_at(int n, int i) {
  require(n >= 1, Errc::arity_mismatch, "split_at needs at least one root");
  require(i >= 0 && i < n, Errc::index_out_of_range, "split index out of range");
  std::vector<Tree> trees(n, Tree::trivial());
  trees[i] = Tree::caret(Tree::trivial(), Tree::trivial());
  return Forest(std::move(trees));
}

Forest forest_compose(const Forest& inner, const Forest& outer) {
  require(inner.leaf_count() == outer.roots(), Errc::arity_mismatch,
          "outer roots must match inner leaves");
  std::vector<Tree> trees;
  trees.reserve(inner.roots());
  int leaf = 0;
  for (int r = 0; r < inner.roots(); ++r) {
    std::vector<Address> leaves;
    for (const auto& a : inner.tree(r).leaves()) {
      for (const auto& b : outer.tree(leaf).leaves()) leaves.push_back(a + b);
      ++leaf;
    }
    trees.push_back(Tree::from_leaves(std::move(leaves)));
  }
  return Forest(std::move(trees));
}

namespace {

std::vector<Address> refine_codes(const std::vector<Address>& a, const std::vector<Address>& b) {
  if (a.size() == 1 && a[0].empty()) return b;
  if (b.size() == 1 && b[0].empty()) return a;
  auto part = [](const std::vector<Address>& v) {
    std::pair<std::vector<Address>, std::vector<Address>> halves;
    for (const auto& x : v)
      (x[0] == '0' ? halves.first : halves.second).push_back(x.substr(1));
    return halves;
  };
  auto [a0, a1] = part(a);
  auto [b0, b1] = part(b);
  auto r0 = refine_codes(a0, b0);
  auto r1 = refine_codes(a1, b1);
  std::vector<Address> out;
  out.reserve(r0.size() + r1.size());
  for (const auto& x : r0) out.push_back("0" + x);
  for (const auto& x : r1) out.push_back("1" + x);
  return out;
}

Forest subtrees_under(const Tree& coarse, const Tree& fine) {
  std::vector<Tree> trees;
  trees.reserve(coarse.leaf_count());
  for (const auto& a : coarse.leaves()) {
    std::vector<Address> sub;
    for (const auto& c : fine.leaves())
      if (c.size() >= a.size() && c.compare(0, a.size(), a) == 0) sub.push_back(c.substr(a.size()));
    trees.push_back(Tree::from_leaves(std::move(sub)));
  }
  return Forest(std::move(trees));
}

}  // namespace

Refinement common_refinement(const Tree& t1, const Tree& t2) {
  Tree refined = Tree::from_leaves(refine_codes(t1.leaves(), t2.leaves()));
  return {refined, subtrees_under(t1, refined), subtrees_under(t2, refined)};
}

PermPushdown permutation_pushdown(const Forest& f, const Permutation& alpha) {
  require(alpha.size() == f.roots(), Errc::arity_mismatch,
          "permutation must act on the forest's roots");
  std::vector<Tree> trees;
  trees.reserve(f.roots());
  std::vector<int> sizes(f.roots());
  for (int r = 0; r < f.roots(); ++r) {
    trees.push_back(f.tree(alpha(r)));
    sizes[r] = trees.back().leaf_count();
  }
  // Leaf block r of the reordered forest lands on block alpha(r) of f.
  return {block_permutation(alpha, sizes), Forest(std::move(trees))};
}

std::pair<int, Address> leaf_location(const Forest& f, int leaf) {
  require(leaf >= 0 && leaf < f.leaf_count(), Errc::index_out_of_range, "leaf index");
  int r = 0;
  while (leaf >= f.tree(r).leaf_count()) {
    leaf -= f.tree(r).leaf_count();
    ++r;
  }
  return {r, f.tree(r).leaf(leaf)};
}

}  // namespace rover
