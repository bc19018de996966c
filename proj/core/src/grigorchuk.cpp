#include "rover/grigorchuk.hpp"

#include <algorithm>

namespace rover {

Klein klein_mul(Klein a, Klein b) {
  if (a == Klein::E) return b;
  if (b == Klein::E) return a;
  if (a == b) return Klein::E;
  // distinct non-identity elements multiply to the third one
  int s = static_cast<int>(a) + static_cast<int>(b);  // 1+2=3, 1+3=4, 2+3=5
  switch (s) {
    case 3: return Klein::D;
    case 4: return Klein::C;
    default: return Klein::B;
  }
}

char klein_char(Klein k) { return "ebcd"[static_cast<int>(k)]; }

Klein klein_from_char(char c) {
  switch (c) {
    case 'e': return Klein::E;
    case 'b': return Klein::B;
    case 'c': return Klein::C;
    case 'd': return Klein::D;
  }
  fail(Errc::parse_error, std::string("not a Klein label: ") + c);
}

char nucleus_char(Nucleus s) { return "esbcd"[static_cast<int>(s)]; }

Nucleus nucleus_of(Klein k) {
  switch (k) {
    case Klein::E: return Nucleus::E;
    case Klein::B: return Nucleus::B;
    case Klein::C: return Nucleus::C;
    case Klein::D: return Nucleus::D;
  }
  fail(Errc::parse_error, "bad Klein label");
}

bool nucleus_is_klein(Nucleus s) { return s != Nucleus::S; }

Klein klein_of(Nucleus s) {
  switch (s) {
    case Nucleus::E: return Klein::E;
    case Nucleus::B: return Klein::B;
    case Nucleus::C: return Klein::C;
    case Nucleus::D: return Klein::D;
    case Nucleus::S: break;
  }
  fail(Errc::parse_error, "sigma is not a Klein label");
}

std::pair<char, Nucleus> nucleus_step(Nucleus s, char bit) {
  require(bit == '0' || bit == '1', Errc::parse_error, "input bits must be 0/1");
  bool one = bit == '1';
  switch (s) {
    case Nucleus::E: return {bit, Nucleus::E};
    case Nucleus::S: return {one ? '0' : '1', Nucleus::E};
    case Nucleus::B: return {bit, one ? Nucleus::C : Nucleus::S};
    case Nucleus::C: return {bit, one ? Nucleus::D : Nucleus::S};
    case Nucleus::D: return {bit, one ? Nucleus::B : Nucleus::E};
  }
  fail(Errc::parse_error, "bad nucleus state");
}

GrigWord::GrigWord(std::string w) : letters(std::move(w)) {
  for (char c : letters)
    require(c == 's' || c == 'b' || c == 'c' || c == 'd', Errc::parse_error,
            std::string("bad generator letter: ") + c);
}

GrigWord GrigWord::one() { return GrigWord(); }

GrigWord GrigWord::letter(char c) { return GrigWord(std::string(1, c)); }

GrigWord GrigWord::from_klein(Klein k) {
  return k == Klein::E ? GrigWord() : GrigWord(std::string(1, klein_char(k)));
}

GrigWord GrigWord::from_nucleus(Nucleus s) {
  return s == Nucleus::E ? GrigWord() : GrigWord(std::string(1, nucleus_char(s)));
}

GrigWord GrigWord::inverse() const {
  GrigWord w = *this;
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

GrigWord GrigWord::concat(const GrigWord& right) const {
  GrigWord w = *this;
  w.letters += right.letters;
  return w;
}

GrigWord word_reduce(const GrigWord& w) {
  std::string st;
  auto is_klein = [](char c) { return c == 'b' || c == 'c' || c == 'd'; };
  for (char c : w.letters) {
    st.push_back(c);
    while (st.size() >= 2) {
      char top = st[st.size() - 1], under = st[st.size() - 2];
      if (top == under) {
        st.erase(st.size() - 2);
      } else if (is_klein(top) && is_klein(under)) {
        Klein prod = klein_mul(klein_from_char(under), klein_from_char(top));
        st.erase(st.size() - 2);
        st.push_back(klein_char(prod));
      } else {
        break;
      }
    }
  }
  GrigWord out;
  out.letters = std::move(st);
  return out;
}

std::pair<std::string, GrigWord> word_eval(const GrigWord& w, const std::string& u) {
  // Rightmost letter touches the input first; residuals keep the word order.
  std::string cur = u;
  std::string residual;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    Nucleus s;
    switch (*it) {
      case 's': s = Nucleus::S; break;
      case 'b': s = Nucleus::B; break;
      case 'c': s = Nucleus::C; break;
      default: s = Nucleus::D; break;
    }
    std::string out;
    out.reserve(cur.size());
    for (char bit : cur) {
      auto [o, ns] = nucleus_step(s, bit);
      out.push_back(o);
      s = ns;
    }
    cur = std::move(out);
    if (s != Nucleus::E) residual.insert(residual.begin(), nucleus_char(s));
  }
  GrigWord res;
  res.letters = std::move(residual);
  return {cur, word_reduce(res)};
}

SplitThrough push_split_through_word(const GrigWord& w) {
  // Fold x through the word from its rightmost letter outwards:
  //   x s = p_(12) (e + e) x,  x b = (s + c) x,  x c = (s + d) x,  x d = (e + b) x.
  SplitThrough acc{false, GrigWord(), GrigWord()};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    bool swap = false;
    std::string a, b;
    switch (*it) {
      case 's': swap = true; break;
      case 'b': a = "s"; b = "c"; break;
      case 'c': a = "s"; b = "d"; break;
      default: b = "b"; break;
    }
    if (acc.swap) std::swap(a, b);
    acc.w0.letters = a + acc.w0.letters;
    acc.w1.letters = b + acc.w1.letters;
    acc.swap = acc.swap != swap;
  }
  acc.w0 = word_reduce(acc.w0);
  acc.w1 = word_reduce(acc.w1);
  return acc;
}

namespace {

struct TreeThrough {
  Permutation alpha;
  std::vector<GrigWord> words;
  Tree tree;
};

TreeThrough push_tree_through_word(const Tree& t, const GrigWord& w) {
  if (t.is_trivial()) return {Permutation::identity(1), {word_reduce(w)}, t};
  auto [t0, t1] = t.split_root();
  auto top = push_split_through_word(w);
  if (!top.swap) {
    auto l = push_tree_through_word(t0, top.w0);
    auto r = push_tree_through_word(t1, top.w1);
    l.words.insert(l.words.end(), r.words.begin(), r.words.end());
    return {direct_sum(l.alpha, r.alpha), std::move(l.words), Tree::caret(l.tree, r.tree)};
  }
  // (t0 + t1) p_(12) = p_block (t1 + t0): the subtrees trade places.
  auto l = push_tree_through_word(t1, top.w0);
  auto r = push_tree_through_word(t0, top.w1);
  Permutation blocks =
      block_permutation(Permutation(std::vector<int>{1, 0}),
                        {t1.leaf_count(), t0.leaf_count()});
  Permutation alpha = compose(blocks, direct_sum(l.alpha, r.alpha));
  l.words.insert(l.words.end(), r.words.begin(), r.words.end());
  return {std::move(alpha), std::move(l.words), Tree::caret(l.tree, r.tree)};
}

}  // namespace

ForestThrough push_forest_through_decoration(const Forest& f,
                                             const std::vector<GrigWord>& words) {
  require(static_cast<int>(words.size()) == f.roots(), Errc::arity_mismatch,
          "one word per root required");
  Permutation alpha(std::vector<int>{});
  std::vector<GrigWord> out;
  std::vector<Tree> trees;
  bool first = true;
  for (int r = 0; r < f.roots(); ++r) {
    auto piece = push_tree_through_word(f.tree(r), words[r]);
    alpha = first ? piece.alpha : direct_sum(alpha, piece.alpha);
    first = false;
    out.insert(out.end(), piece.words.begin(), piece.words.end());
    trees.push_back(std::move(piece.tree));
  }
  return {std::move(alpha), std::move(out), Forest(std::move(trees))};
}

NucleusForm word_to_nucleus_form(const GrigWord& w, int depth_cap) {
  GrigWord start = word_reduce(w);
  if (start.empty()) return {Tree::trivial(), Permutation::identity(1), {Klein::E}};

  Tree t = Tree::trivial();
  Permutation alpha = Permutation::identity(1);
  std::vector<GrigWord> res{start};
  bool first = true;
  for (int round = 0;; ++round) {
    require(round <= depth_cap, Errc::contraction_cap_exceeded,
            "nucleus form did not stabilize within the depth cap");
    int n = static_cast<int>(res.size());
    std::vector<char> split(n, 0);
    bool any = false;
    for (int i = 0; i < n; ++i) {
      const GrigWord& r = res[i];
      bool ok = r.empty() || (r.size() == 1 && r.letters[0] != 's');
      if (!ok) {
        split[i] = 1;
        any = true;
      }
    }
    if (first) {
      // generators expand one level even when already a Klein letter
      std::fill(split.begin(), split.end(), 1);
      any = true;
      first = false;
    }
    if (!any) break;
    // close under alpha cycles so carets land on matching leaves of both trees
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 0; i < n; ++i)
        if (split[i] && !split[alpha(i)]) {
          split[alpha(i)] = 1;
          grew = true;
        }
    }
    std::vector<Tree> carets;
    carets.reserve(n);
    for (int i = 0; i < n; ++i)
      carets.push_back(split[i] ? Tree::caret(Tree::trivial(), Tree::trivial())
                                : Tree::trivial());
    Forest f(std::move(carets));
    auto through = push_forest_through_decoration(f, res);
    auto push = permutation_pushdown(f, alpha.inverse());
    alpha = compose(push.alpha.inverse(), through.alpha);
    res = std::move(through.words);
    for (auto& word : res) word = word_reduce(word);
    t = forest_compose(Forest::single(t), f).tree(0);
  }

  std::vector<Klein> labels;
  labels.reserve(res.size());
  for (const auto& r : res)
    labels.push_back(r.empty() ? Klein::E : klein_from_char(r.letters[0]));
  return {std::move(t), std::move(alpha), std::move(labels)};
}

GrigWord parse_grig_word(const std::string& text) {
  if (text == "e" || text.empty()) return GrigWord();
  return GrigWord(text);
}

bool word_is_identity(const GrigWord& w, int depth_cap) {
  NucleusForm nf = word_to_nucleus_form(w, depth_cap);
  if (!nf.alpha.is_identity()) return false;
  for (Klein k : nf.labels)
    if (k != Klein::E) return false;
  return true;
}

}  // namespace rover
