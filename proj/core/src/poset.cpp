#include "rover/poset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "rover/canonical.hpp"
#include "rover/errors.hpp"

namespace rover {

Vertex::Vertex(GroupoidElement rep) : rep_(std::move(rep)) {
  require(rep_.domain_roots() == 1, Errc::arity_mismatch, "vertices have domain arity 1");
}

const std::string& Vertex::key() const {
  if (key_.empty()) key_ = coset_key(rep_);
  return key_;
}

bool vertex_equals(const Vertex& v, const Vertex& w) { return v.key() == w.key(); }

int morse_rank(const Vertex& v) { return v.rank(); }

Vertex spine_vertex(int n) {
  require(n >= 1, Errc::index_out_of_range, "rank must be positive");
  std::vector<Address> leaves;
  for (int k = 0; k + 1 < n; ++k) leaves.push_back(std::string(k, '0') + '1');
  leaves.push_back(std::string(n - 1, '0'));
  Tree t = Tree::from_leaves(std::move(leaves));
  return Vertex(make_element(Forest::single(t), Permutation::identity(n),
                             std::vector<Klein>(n, Klein::E), Forest::trivial(n)));
}

std::vector<Vertex> splittings(const Vertex& v) {
  int n = v.rank();
  std::vector<Vertex> out;
  out.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    GroupoidElement plain = multiply(from_generator(Generator::X, i, n), v.rep());
    out.push_back(Vertex(multiply(from_generator(Generator::Sigma, i, n + 1), plain)));
    out.push_back(Vertex(std::move(plain)));
  }
  return out;
}

std::vector<Vertex> double_splittings(const Vertex& v) {
  int n = v.rank();
  std::vector<Vertex> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    GroupoidElement once = multiply(from_generator(Generator::X, i, n), v.rep());
    out.push_back(Vertex(multiply(from_generator(Generator::X, i, n + 1), once)));
  }
  return out;
}

GroupoidElement piece_element(ElemPiece p) {
  switch (p) {
    case ElemPiece::One: return identity_element(1);
    case ElemPiece::X: return from_generator(Generator::X, 0, 1);
    case ElemPiece::SigmaX:
      return multiply(from_generator(Generator::Sigma, 0, 2), from_generator(Generator::X, 0, 1));
    case ElemPiece::XX:
      return multiply(from_generator(Generator::X, 0, 2), from_generator(Generator::X, 0, 1));
  }
  fail(Errc::index_out_of_range, "unhandled piece");
}

Vertex apply_pieces(const Vertex& v, const std::vector<ElemPiece>& pieces) {
  require(static_cast<int>(pieces.size()) == v.rank(), Errc::arity_mismatch,
          "one piece per component");
  GroupoidElement u = piece_element(pieces[0]);
  for (size_t i = 1; i < pieces.size(); ++i) u = direct_sum(u, piece_element(pieces[i]));
  return Vertex(multiply(u, v.rep()));
}

std::vector<Vertex> elementary_expansions(const Vertex& v) {
  int n = v.rank();
  std::vector<ElemPiece> pieces(n, ElemPiece::One);
  std::vector<Vertex> out;
  std::unordered_set<std::string> seen;
  while (true) {
    Vertex u = apply_pieces(v, pieces);
    if (seen.insert(u.key()).second) out.push_back(std::move(u));
    int i = n - 1;
    while (i >= 0 && pieces[i] == ElemPiece::XX) {
      pieces[i] = ElemPiece::One;
      --i;
    }
    if (i < 0) break;
    pieces[i] = static_cast<ElemPiece>(static_cast<uint8_t>(pieces[i]) + 1);
  }
  return out;
}

namespace {

struct SearchNode {
  Vertex vertex;
  int parent;    // index into the arena, -1 at the root
  int comp;      // split component leading here
  bool twisted;
};

// Breadth-first search through iterated splittings from v up to w's rank.
// Returns the arena and the index of the node matching w, or -1.
std::pair<std::vector<SearchNode>, int> search_up(const Vertex& v, const Vertex& w, int gap_cap) {
  int gap = w.rank() - v.rank();
  require(gap <= gap_cap, Errc::rank_gap_too_large, "rank gap exceeds the cap");
  std::vector<SearchNode> arena;
  arena.push_back(SearchNode{v, -1, -1, false});
  if (gap == 0) return {std::move(arena), vertex_equals(v, w) ? 0 : -1};
  std::unordered_set<std::string> seen{v.key()};
  size_t lo = 0, hi = arena.size();
  for (int step = 0; step < gap; ++step) {
    bool last = step + 1 == gap;
    for (size_t a = lo; a < hi; ++a) {
      int n = arena[a].vertex.rank();
      for (int i = 0; i < n; ++i) {
        GroupoidElement plain = multiply(from_generator(Generator::X, i, n),
                                         arena[a].vertex.rep());
        Vertex tw(multiply(from_generator(Generator::Sigma, i, n + 1), plain));
        Vertex pl(std::move(plain));
        for (int variant = 0; variant < 2; ++variant) {
          Vertex& u = variant ? tw : pl;
          if (!seen.insert(u.key()).second) continue;
          bool match = last && u.key() == w.key();
          arena.push_back(SearchNode{std::move(u), static_cast<int>(a), i, variant == 1});
          if (match) return {std::move(arena), static_cast<int>(arena.size()) - 1};
        }
      }
    }
    lo = hi;
    hi = arena.size();
  }
  return {std::move(arena), -1};
}

}  // namespace

bool is_expansion(const Vertex& v, const Vertex& w, int gap_cap) {
  if (w.rank() < v.rank()) return false;
  return search_up(v, w, gap_cap).second >= 0;
}

Vertex common_expansion(const Vertex& v, const Vertex& w) {
  const Tree& tv = v.rep().f1.tree(0);
  const Tree& tw = w.rep().f1.tree(0);
  Refinement ref = common_refinement(tv, tw);
  int n = ref.refined.leaf_count();
  return Vertex(make_element(Forest::single(ref.refined), Permutation::identity(n),
                             std::vector<Klein>(n, Klein::E), Forest::trivial(n)));
}

std::vector<Vertex> factor_over(const Vertex& v, const Vertex& w, int gap_cap) {
  require(w.rank() >= v.rank(), Errc::not_an_expansion, "target has smaller rank");
  auto [arena, hit] = search_up(v, w, gap_cap);
  require(hit >= 0, Errc::not_an_expansion, "target is not an expansion of the source");
  std::vector<std::pair<int, bool>> path;  // (component, twisted), from v upward
  for (int at = hit; arena[at].parent >= 0; at = arena[at].parent)
    path.emplace_back(arena[at].comp, arena[at].twisted);
  std::reverse(path.begin(), path.end());

  int n = v.rank();
  std::vector<int> sizes(n, 1);
  std::vector<GroupoidElement> factors;
  factors.reserve(n);
  for (int i = 0; i < n; ++i) factors.push_back(identity_element(1));
  for (auto [comp, twisted] : path) {
    int i = 0, offset = 0;
    while (i + 1 < n && offset + sizes[i] <= comp) offset += sizes[i++];
    int local = comp - offset;
    factors[i] = multiply(from_generator(Generator::X, local, sizes[i]), factors[i]);
    if (twisted)
      factors[i] = multiply(from_generator(Generator::Sigma, local, sizes[i] + 1), factors[i]);
    sizes[i] += 1;
  }
  std::vector<Vertex> out;
  out.reserve(n);
  for (auto& f : factors) out.push_back(Vertex(std::move(f)));
  return out;
}

ElemCore elementary_core(const Vertex& v, const Vertex& w, int gap_cap) {
  std::vector<Vertex> factors = factor_over(v, w, gap_cap);
  Vertex one(identity_element(1));
  Vertex px(piece_element(ElemPiece::X));
  Vertex psx(piece_element(ElemPiece::SigmaX));
  Vertex pxx(piece_element(ElemPiece::XX));
  std::vector<ElemPiece> pieces;
  pieces.reserve(factors.size());
  for (const Vertex& g : factors) {
    bool below_x = is_expansion(px, g, gap_cap);
    bool below_sx = is_expansion(psx, g, gap_cap);
    ElemPiece p = ElemPiece::One;
    if ((below_x && below_sx) || is_expansion(pxx, g, gap_cap)) p = ElemPiece::XX;
    else if (below_x) p = ElemPiece::X;
    else if (below_sx) p = ElemPiece::SigmaX;
    pieces.push_back(p);
  }
  Vertex core = apply_pieces(v, pieces);
  return ElemCore{std::move(pieces), std::move(core)};
}

std::vector<GroupoidElement> stabilizer_elements(const Vertex& v) {
  int n = v.rank();
  require(n <= 5, Errc::rank_too_large, "stabilizer enumeration is capped at rank 5");
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::vector<GroupoidElement> out;
  GroupoidElement inv_rep = invert(v.rep());
  do {
    std::vector<Klein> labels(n, Klein::E);
    while (true) {
      GroupoidElement kappa = make_element(Forest::trivial(n), Permutation(images), labels,
                                           Forest::trivial(n));
      out.push_back(multiply(inv_rep, multiply(kappa, v.rep())));
      int i = n - 1;
      while (i >= 0 && labels[i] == Klein::D) {
        labels[i] = Klein::E;
        --i;
      }
      if (i < 0) break;
      labels[i] = static_cast<Klein>(static_cast<uint8_t>(labels[i]) + 1);
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

BasicPolysimplex basic_polysimplex(const Vertex& v,
                                   const std::vector<std::vector<ElemPiece>>& sets) {
  int n = v.rank();
  require(static_cast<int>(sets.size()) == n, Errc::arity_mismatch, "one piece set per component");
  static const std::vector<std::vector<ElemPiece>> admissible = {
      {ElemPiece::One},
      {ElemPiece::One, ElemPiece::X},
      {ElemPiece::One, ElemPiece::SigmaX},
      {ElemPiece::One, ElemPiece::XX},
      {ElemPiece::One, ElemPiece::X, ElemPiece::XX},
      {ElemPiece::One, ElemPiece::SigmaX, ElemPiece::XX},
  };
  BasicPolysimplex out;
  std::vector<std::vector<ElemPiece>> norm;
  norm.reserve(n);
  for (const auto& s : sets) {
    std::vector<ElemPiece> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    bool ok = false;
    for (const auto& adm : admissible) {
      if (sorted == adm) {
        ok = true;
        break;
      }
    }
    require(ok, Errc::illegal_set, "piece set is not admissible");
    out.shape.push_back(static_cast<int>(sorted.size()) - 1);
    norm.push_back(std::move(sorted));
  }
  std::vector<size_t> idx(n, 0);
  std::unordered_set<std::string> seen;
  while (true) {
    std::vector<ElemPiece> pieces(n);
    for (int i = 0; i < n; ++i) pieces[i] = norm[i][idx[i]];
    Vertex u = apply_pieces(v, pieces);
    if (!seen.insert(u.key()).second) out.degenerate = true;
    out.vertices.push_back(std::move(u));
    int i = n - 1;
    while (i >= 0 && idx[i] + 1 >= norm[i].size()) {
      idx[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++idx[i];
  }
  return out;
}

}  // namespace rover
