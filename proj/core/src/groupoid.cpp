#include "rover/groupoid.hpp"

#include <algorithm>
#include <utility>

#include "rover/errors.hpp"

namespace rover {

namespace {

std::vector<GrigWord> labels_to_words(const std::vector<Klein>& labels) {
  std::vector<GrigWord> out;
  out.reserve(labels.size());
  for (Klein k : labels) out.push_back(GrigWord::from_klein(k));
  return out;
}

bool word_is_settled(const GrigWord& w) {
  if (w.empty()) return true;
  return w.size() == 1 && w.letters[0] != 's';
}

Klein settled_word_to_klein(const GrigWord& w) {
  if (w.empty()) return Klein::E;
  switch (w.letters[0]) {
    case 'b': return Klein::B;
    case 'c': return Klein::C;
    case 'd': return Klein::D;
    default: fail(Errc::contraction_cap_exceeded, "tail failed to contract");
  }
}

// Replace the sibling pair of leaves j, j+1 of the forest by their parent.
Forest collapse_leaf_pair(const Forest& f, int j) {
  auto [root, a0] = leaf_location(f, j);
  std::vector<Address> leaves = f.tree(root).leaves();
  int local = j - f.leaf_offset(root);
  leaves.erase(leaves.begin() + local, leaves.begin() + local + 2);
  leaves.insert(leaves.begin() + local, a0.substr(0, a0.size() - 1));
  std::vector<Tree> trees = f.trees();
  trees[root] = Tree::from_leaves(leaves);
  return Forest(std::move(trees));
}

}  // namespace

GroupoidElement make_element(Forest f1, Permutation alpha, std::vector<Klein> labels, Forest f2) {
  int n = f1.leaf_count();
  require(f2.leaf_count() == n, Errc::arity_mismatch, "forests have different leaf counts");
  require(alpha.size() == n, Errc::arity_mismatch, "permutation degree does not match leaf count");
  require(static_cast<int>(labels.size()) == n, Errc::arity_mismatch,
          "label count does not match leaf count");
  return GroupoidElement{std::move(f1), std::move(alpha), std::move(labels), std::move(f2)};
}

GroupoidElement identity_element(int m) {
  require(m >= 1, Errc::index_out_of_range, "arity must be positive");
  return GroupoidElement{Forest::trivial(m), Permutation::identity(m),
                         std::vector<Klein>(m, Klein::E), Forest::trivial(m)};
}

GroupoidElement perm_element(const Permutation& alpha) {
  int n = alpha.size();
  return GroupoidElement{Forest::trivial(n), alpha, std::vector<Klein>(n, Klein::E),
                         Forest::trivial(n)};
}

GroupoidElement klein_element(int n, int i, Klein k) {
  require(i >= 0 && i < n, Errc::index_out_of_range, "component index out of range");
  std::vector<Klein> labels(n, Klein::E);
  labels[i] = k;
  return GroupoidElement{Forest::trivial(n), Permutation::identity(n), std::move(labels),
                         Forest::trivial(n)};
}

GroupoidElement from_generator(Generator kind, int i, int n) {
  require(n >= 1, Errc::arity_mismatch, "arity must be positive");
  require(i >= 0 && i < n, Errc::index_out_of_range, "generator index out of range");
  switch (kind) {
    case Generator::X:
      return GroupoidElement{split_at(n, i), Permutation::identity(n + 1),
                             std::vector<Klein>(n + 1, Klein::E), Forest::trivial(n + 1)};
    case Generator::Sigma:
      return GroupoidElement{split_at(n, i), Permutation::transposition(n + 1, i, i + 1),
                             std::vector<Klein>(n + 1, Klein::E), split_at(n, i)};
    case Generator::B:
    case Generator::C:
    case Generator::D: {
      char letter = kind == Generator::B ? 'b' : (kind == Generator::C ? 'c' : 'd');
      NucleusForm nf = word_to_nucleus_form(GrigWord::letter(letter));
      int inner = nf.tree.leaf_count();
      std::vector<Tree> trees(n, Tree());
      trees[i] = nf.tree;
      Forest f(std::move(trees));
      std::vector<int> images(n - 1 + inner);
      for (int s = 0; s < i; ++s) images[s] = s;
      for (int s = 0; s < inner; ++s) images[i + s] = i + nf.alpha(s);
      for (int s = i + inner; s < n - 1 + inner; ++s) images[s] = s;
      std::vector<Klein> labels(n - 1 + inner, Klein::E);
      for (int s = 0; s < inner; ++s) labels[i + s] = nf.labels[s];
      return GroupoidElement{f, Permutation(std::move(images)), std::move(labels), f};
    }
  }
  fail(Errc::unknown_generator, "unhandled generator kind");
}

GroupoidElement direct_sum(const GroupoidElement& a, const GroupoidElement& b) {
  std::vector<Tree> f1 = a.f1.trees();
  for (const Tree& t : b.f1.trees()) f1.push_back(t);
  std::vector<Tree> f2 = a.f2.trees();
  for (const Tree& t : b.f2.trees()) f2.push_back(t);
  std::vector<Klein> labels = a.labels;
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  return GroupoidElement{Forest(std::move(f1)), direct_sum(a.alpha, b.alpha), std::move(labels),
                         Forest(std::move(f2))};
}

GroupoidElement invert(const GroupoidElement& g) {
  Permutation beta = g.alpha.inverse();
  int n = g.inner_size();
  std::vector<Klein> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = g.labels[beta(i)];
  return GroupoidElement{g.f2, std::move(beta), std::move(labels), g.f1};
}

GroupoidElement multiply(const GroupoidElement& g, const GroupoidElement& h, int depth_cap) {
  require(g.domain_roots() == h.range_roots(), Errc::arity_mismatch,
          "domain of left factor does not match range of right factor");

  // Common refinement of g's domain forest and h's range forest, root by root.
  std::vector<Tree> a_trees;  // grafted onto g.f1's leaves
  std::vector<Tree> b_trees;  // grafted onto h.f2's leaves
  for (int r = 0; r < g.f1.roots(); ++r) {
    Refinement ref = common_refinement(g.f1.tree(r), h.f2.tree(r));
    for (const Tree& t : ref.on_first.trees()) a_trees.push_back(t);
    for (const Tree& t : ref.on_second.trees()) b_trees.push_back(t);
  }
  Forest a(std::move(a_trees));
  Forest b(std::move(b_trees));
  int total = a.leaf_count();

  // Right half: push B past h's permutation, then past h's labels.
  PermPushdown pb = permutation_pushdown(b, h.alpha);
  ForestThrough ft = push_forest_through_decoration(pb.forest, labels_to_words(h.labels));
  Forest f1 = forest_compose(h.f1, ft.forest);
  Permutation right = compose(pb.alpha, ft.alpha);

  // Left half, via its formal inverse A (sum k) p_{alpha^-1} f2.
  ForestThrough at = push_forest_through_decoration(a, labels_to_words(g.labels));
  PermPushdown pd = permutation_pushdown(at.forest, g.alpha.inverse());
  Forest f2 = forest_compose(g.f2, pd.forest);
  Permutation left = compose(at.alpha, pd.alpha).inverse();

  Permutation alpha = compose(left, right);
  std::vector<GrigWord> words(total);
  for (int i = 0; i < total; ++i) {
    GrigWord v = at.words[pd.alpha(alpha(i))].inverse();
    words[i] = word_reduce(v.concat(ft.words[i]));
  }

  // Tails longer than one nucleus letter are split until they contract.
  for (int round = 0;; ++round) {
    std::vector<int> split(total, 0);
    bool any = false;
    for (int i = 0; i < total; ++i) {
      if (!word_is_settled(words[i])) {
        split[i] = 1;
        any = true;
      }
    }
    if (!any) break;
    require(round < depth_cap, Errc::contraction_cap_exceeded,
            "tails failed to contract within depth cap");
    std::vector<Tree> carets(total);
    for (int i = 0; i < total; ++i) {
      if (split[i]) carets[i] = Tree::caret(Tree(), Tree());
    }
    Forest f(std::move(carets));
    ForestThrough through = push_forest_through_decoration(f, words);
    PermPushdown down = permutation_pushdown(f, alpha.inverse());
    f1 = forest_compose(f1, through.forest);
    f2 = forest_compose(f2, down.forest);
    alpha = compose(down.alpha.inverse(), through.alpha);
    words = std::move(through.words);
    total = static_cast<int>(words.size());
  }

  std::vector<Klein> labels(total);
  for (int i = 0; i < total; ++i) labels[i] = settled_word_to_klein(words[i]);
  return reduce(GroupoidElement{std::move(f1), std::move(alpha), std::move(labels), std::move(f2)});
}

GroupoidElement reduce(const GroupoidElement& g) {
  GroupoidElement r = g;
  bool changed = true;
  while (changed) {
    changed = false;
    int n = r.inner_size();
    for (int j = 0; j + 1 < n; ++j) {
      auto [r1, a1] = leaf_location(r.f1, j);
      auto [r2, a2] = leaf_location(r.f1, j + 1);
      if (r1 != r2 || a1.empty() || a2.empty()) continue;
      if (a1.substr(0, a1.size() - 1) != a2.substr(0, a2.size() - 1)) continue;
      if (a1.back() != '0' || a2.back() != '1') continue;
      int p = r.alpha(j);
      if (r.alpha(j + 1) != p + 1) continue;
      auto [s1, b1] = leaf_location(r.f2, p);
      auto [s2, b2] = leaf_location(r.f2, p + 1);
      if (s1 != s2 || b1.empty() || b2.empty()) continue;
      if (b1.substr(0, b1.size() - 1) != b2.substr(0, b2.size() - 1)) continue;
      if (b1.back() != '0' || b2.back() != '1') continue;
      Klein k0 = r.labels[j];
      Klein k1 = r.labels[j + 1];
      Klein merged;
      if (k0 == Klein::E && k1 == Klein::E) {
        merged = Klein::E;
      } else if (k0 == Klein::E && k1 == Klein::B) {
        merged = Klein::D;
      } else {
        continue;
      }
      Forest f1 = collapse_leaf_pair(r.f1, j);
      Forest f2 = collapse_leaf_pair(r.f2, p);
      std::vector<int> images;
      images.reserve(n - 1);
      for (int i = 0; i < n; ++i) {
        if (i == j + 1) continue;
        int img = r.alpha(i);
        if (img > p) img -= 1;
        images.push_back(img);
      }
      std::vector<Klein> labels;
      labels.reserve(n - 1);
      for (int i = 0; i < n; ++i) {
        if (i == j + 1) continue;
        labels.push_back(i == j ? merged : r.labels[i]);
      }
      r = GroupoidElement{std::move(f1), Permutation(std::move(images)), std::move(labels),
                          std::move(f2)};
      changed = true;
      break;
    }
  }
  return r;
}

bool is_identity(const GroupoidElement& g) {
  if (g.domain_roots() != g.range_roots()) return false;
  GroupoidElement r = reduce(g);
  if (!r.alpha.is_identity()) return false;
  for (Klein k : r.labels) {
    if (k != Klein::E) return false;
  }
  for (int t = 0; t < r.f1.roots(); ++t) {
    if (!(r.f1.tree(t) == r.f2.tree(t))) return false;
  }
  return true;
}

bool equals(const GroupoidElement& g, const GroupoidElement& h) {
  if (g.domain_roots() != h.domain_roots() || g.range_roots() != h.range_roots()) return false;
  return is_identity(multiply(g, invert(h)));
}

EvalResult evaluate(const GroupoidElement& g, int root, const std::string& bits) {
  require(root >= 0 && root < g.domain_roots(), Errc::index_out_of_range,
          "root index out of range");
  for (char ch : bits) {
    require(ch == '0' || ch == '1', Errc::parse_error, "input must be a binary string");
  }
  const Tree& t = g.f1.tree(root);
  std::optional<int> local = t.locate(bits);
  require(local.has_value(), Errc::input_too_shallow,
          "input does not reach below the domain tree");
  int j = g.f1.leaf_offset(root) + *local;
  const Address& leaf = t.leaf(*local);
  std::string tail = bits.substr(leaf.size());
  auto [out, residual] = word_eval(GrigWord::from_klein(g.labels[j]), tail);
  auto [rr, prefix] = leaf_location(g.f2, g.alpha(j));
  return EvalResult{rr, prefix + out, residual};
}

std::pair<int, std::string> full_image(const GroupoidElement& g, int root,
                                       const std::string& bits) {
  EvalResult r = evaluate(g, root, bits);
  return {r.root, r.bits};
}

}  // namespace rover
