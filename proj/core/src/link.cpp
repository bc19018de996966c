#include <algorithm>
#include <map>
#include <unordered_map>

#include "rover/errors.hpp"
#include "rover/poset.hpp"

namespace rover {

namespace {

// Permutation bringing the listed components to the front, the rest keeping
// their relative order.
Permutation to_front(int n, const std::vector<int>& picks) {
  std::vector<int> images(n, -1);
  for (int t = 0; t < static_cast<int>(picks.size()); ++t) images[picks[t]] = t;
  int next = static_cast<int>(picks.size());
  for (int i = 0; i < n; ++i) {
    if (images[i] < 0) images[i] = next++;
  }
  return Permutation(std::move(images));
}

GroupoidElement decorate(int n, const std::vector<int>& picks, const std::vector<Klein>& labels) {
  std::vector<Klein> all(n, Klein::E);
  for (size_t t = 0; t < picks.size(); ++t) all[picks[t]] = labels[t];
  return make_element(Forest::trivial(n), Permutation::identity(n), std::move(all),
                      Forest::trivial(n));
}

// (kind, indices, labels) as a comparable description.
std::vector<int> describe(ContractionKind kind, const std::vector<int>& indices,
                          const std::vector<Klein>& labels) {
  std::vector<int> d;
  d.push_back(static_cast<int>(kind));
  for (int i : indices) d.push_back(i);
  for (Klein k : labels) d.push_back(static_cast<int>(k));
  return d;
}

struct Collector {
  std::vector<ContractionRecord> records;
  std::vector<std::vector<int>> descriptions;
  std::unordered_map<std::string, int> by_key;

  void add(ContractionKind kind, std::vector<int> indices, std::vector<Klein> labels,
           Vertex vertex) {
    std::vector<int> support = indices;
    std::sort(support.begin(), support.end());
    std::vector<int> desc = describe(kind, indices, labels);
    auto [it, fresh] = by_key.try_emplace(vertex.key(), static_cast<int>(records.size()));
    if (fresh) {
      records.push_back(ContractionRecord{kind, std::move(indices), std::move(labels),
                                          std::move(support), std::move(vertex)});
      descriptions.push_back(std::move(desc));
      return;
    }
    int at = it->second;
    if (desc < descriptions[at]) {
      records[at] = ContractionRecord{kind, std::move(indices), std::move(labels),
                                      std::move(support), std::move(vertex)};
      descriptions[at] = std::move(desc);
    }
  }
};

}  // namespace

std::vector<ContractionRecord> contractions(const Vertex& v, bool all_labels) {
  int n = v.rank();
  require(n >= 2, Errc::rank_too_small, "contractions need rank at least 2");
  Collector out;
  std::vector<Klein> kleins{Klein::E};
  if (all_labels) kleins = {Klein::E, Klein::B, Klein::C, Klein::D};

  GroupoidElement merge2 = invert(from_generator(Generator::X, 0, n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      GroupoidElement head = multiply(merge2, perm_element(to_front(n, {i, j})));
      GroupoidElement twisted = multiply(head, from_generator(Generator::Sigma, i, n));
      for (Klein ki : kleins) {
        for (Klein kj : kleins) {
          GroupoidElement dec = multiply(decorate(n, {i, j}, {ki, kj}), v.rep());
          out.add(ContractionKind::Pair, {i, j}, {ki, kj}, Vertex(multiply(head, dec)));
          out.add(ContractionKind::PairSigma, {i, j}, {ki, kj},
                  Vertex(multiply(twisted, dec)));
        }
      }
    }
  }

  if (n >= 3) {
    GroupoidElement merge3 =
        multiply(invert(from_generator(Generator::X, 0, n - 2)), invert(from_generator(Generator::X, 0, n - 1)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          if (i == j || i == k || j == k) continue;
          GroupoidElement head = multiply(merge3, perm_element(to_front(n, {i, j, k})));
          for (Klein ki : kleins) {
            for (Klein kj : kleins) {
              for (Klein kk : kleins) {
                GroupoidElement dec = multiply(decorate(n, {i, j, k}, {ki, kj, kk}), v.rep());
                out.add(ContractionKind::Triple, {i, j, k}, {ki, kj, kk},
                        Vertex(multiply(head, dec)));
              }
            }
          }
        }
      }
    }
  }

  std::vector<int> order(out.records.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return out.descriptions[a] < out.descriptions[b]; });
  std::vector<ContractionRecord> sorted;
  sorted.reserve(order.size());
  for (int i : order) sorted.push_back(std::move(out.records[i]));
  return sorted;
}

FlagGraph DescendingLink::graph() const {
  return FlagGraph(static_cast<int>(records.size()), edges);
}

DescendingLink descending_link(const Vertex& v, bool all_labels) {
  DescendingLink link;
  link.records = contractions(v, all_labels);
  int m = static_cast<int>(link.records.size());

  // A pair record is a face of a triple record when splitting the merged
  // component of the triple, plainly or twisted, recovers the pair's vertex.
  std::vector<std::pair<std::string, std::string>> reopen(m);
  for (int r = 0; r < m; ++r) {
    if (link.records[r].kind != ContractionKind::Triple) continue;
    const GroupoidElement& g = link.records[r].vertex.rep();
    int rank = link.records[r].vertex.rank();
    GroupoidElement plain = multiply(from_generator(Generator::X, 0, rank), g);
    Vertex tw(multiply(from_generator(Generator::Sigma, 0, rank + 1), plain));
    reopen[r] = {Vertex(std::move(plain)).key(), tw.key()};
  }

  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const auto& sa = link.records[a].support;
      const auto& sb = link.records[b].support;
      bool disjoint = true;
      for (int x : sa) {
        if (std::binary_search(sb.begin(), sb.end(), x)) {
          disjoint = false;
          break;
        }
      }
      if (disjoint) {
        link.edges.emplace_back(a, b);
        continue;
      }
      const ContractionRecord* pair = nullptr;
      const ContractionRecord* triple = nullptr;
      int tr = -1;
      if (sa.size() == 2 && sb.size() == 3) {
        pair = &link.records[a];
        triple = &link.records[b];
        tr = b;
      } else if (sa.size() == 3 && sb.size() == 2) {
        pair = &link.records[b];
        triple = &link.records[a];
        tr = a;
      } else {
        continue;
      }
      bool nested = std::includes(triple->support.begin(), triple->support.end(),
                                  pair->support.begin(), pair->support.end());
      if (!nested) continue;
      const std::string& key = pair->vertex.key();
      if (key == reopen[tr].first || key == reopen[tr].second) link.edges.emplace_back(a, b);
    }
  }
  return link;
}

std::vector<ContractionRecord> ground_simplex(const Vertex& v, int k) {
  require(k >= 1, Errc::index_out_of_range, "k must be positive");
  int n = v.rank();
  require(n >= 6 * k + 2, Errc::rank_too_small, "ground simplex needs rank at least 6k+2");
  std::vector<ContractionRecord> out;
  GroupoidElement merge2 = invert(from_generator(Generator::X, 0, n - 1));
  for (int s = 0; s <= 3 * k; ++s) {
    int i = 2 * s, j = 2 * s + 1;
    GroupoidElement head = multiply(merge2, perm_element(to_front(n, {i, j})));
    Vertex vx(multiply(head, v.rep()));
    out.push_back(ContractionRecord{ContractionKind::Pair,
                                    {i, j},
                                    {Klein::E, Klein::E},
                                    {i, j},
                                    std::move(vx)});
  }
  return out;
}

std::vector<int> locate_ground(const DescendingLink& link, const Vertex& v, int k) {
  std::vector<ContractionRecord> ground = ground_simplex(v, k);
  std::vector<int> where;
  where.reserve(ground.size());
  for (const auto& g : ground) {
    int found = -1;
    for (int r = 0; r < static_cast<int>(link.records.size()); ++r) {
      if (link.records[r].vertex.key() == g.vertex.key()) {
        found = r;
        break;
      }
    }
    require(found >= 0, Errc::illegal_set, "ground member missing from the link");
    where.push_back(found);
  }
  return where;
}

}  // namespace rover
