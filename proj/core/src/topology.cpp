#include "rover/topology.hpp"

#include <algorithm>
#include <random>

#include "rover/errors.hpp"

namespace rover {

FlagGraph::FlagGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  require(n >= 0, Errc::index_out_of_range, "vertex count must be nonnegative");
  adj_.assign(n, std::vector<char>(n, 0));
  for (auto& [a, b] : edges) {
    require(a >= 0 && a < n && b >= 0 && b < n, Errc::index_out_of_range,
            "edge endpoint out of range");
    require(a != b, Errc::index_out_of_range, "loops are not allowed");
    if (a > b) std::swap(a, b);
    if (!adj_[a][b]) {
      adj_[a][b] = adj_[b][a] = 1;
      edges_.emplace_back(a, b);
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

bool FlagGraph::adjacent(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) return false;
  return adj_[i][j] != 0;
}

int FlagGraph::degree(int i) const {
  int d = 0;
  for (int j = 0; j < n_; ++j) d += adj_[i][j];
  return d;
}

long long SimplicialComplex::size() const {
  long long total = 0;
  for (const auto& level : simplices) total += static_cast<long long>(level.size());
  return total;
}

SimplicialComplex flag_complex(const FlagGraph& g, int max_dim, long long size_cap) {
  require(max_dim >= 0, Errc::index_out_of_range, "dimension must be nonnegative");
  SimplicialComplex k;
  long long total = 0;
  std::vector<std::vector<int>> level;
  for (int v = 0; v < g.size(); ++v) level.push_back({v});
  for (int d = 0; d <= max_dim && !level.empty(); ++d) {
    total += static_cast<long long>(level.size());
    require(total <= size_cap, Errc::size_cap_exceeded, "flag complex exceeds the size cap");
    k.simplices.push_back(level);
    std::vector<std::vector<int>> next;
    for (const auto& s : level) {
      for (int v = s.back() + 1; v < g.size(); ++v) {
        bool ok = true;
        for (int u : s) {
          if (!g.adjacent(u, v)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          std::vector<int> t = s;
          t.push_back(v);
          next.push_back(std::move(t));
        }
      }
    }
    level = std::move(next);
  }
  return k;
}

bool is_k_ground(const FlagGraph& g, const std::vector<int>& ground, int k) {
  require(!ground.empty(), Errc::not_a_clique, "ground must be nonempty");
  for (size_t a = 0; a < ground.size(); ++a) {
    int u = ground[a];
    require(u >= 0 && u < g.size(), Errc::index_out_of_range, "ground vertex out of range");
    for (size_t b = a + 1; b < ground.size(); ++b) {
      require(u != ground[b] && g.adjacent(u, ground[b]), Errc::not_a_clique,
              "ground is not a clique");
    }
  }
  for (int v = 0; v < g.size(); ++v) {
    int missed = 0;
    for (int u : ground) {
      if (u != v && !g.adjacent(u, v)) ++missed;
    }
    if (missed > k) return false;
  }
  return true;
}

bool BettiProfile::vanishes_through(int d) const {
  if (betti_minus1 != 0) return false;
  for (int i = 0; i <= d && i < static_cast<int>(betti.size()); ++i) {
    if (betti[i] != 0) return false;
    if (coeffs == Coeffs::Z && i < static_cast<int>(torsion.size()) && !torsion[i].empty())
      return false;
  }
  return true;
}

namespace {

// Greedy clique growth from a seed, preferring high-degree candidates.
std::vector<int> grow_clique(const FlagGraph& g, int seed, int want,
                             const std::vector<int>& order) {
  std::vector<int> clique{seed};
  while (static_cast<int>(clique.size()) < want) {
    int pick = -1;
    for (int v : order) {
      bool ok = true;
      for (int u : clique) {
        if (u == v || !g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    clique.push_back(pick);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace

GroundedReport grounded_connectivity_check(const FlagGraph& g, int m, int k,
                                           const std::vector<int>& ground_override,
                                           long long size_cap) {
  require(m >= 1 && k >= 1, Errc::index_out_of_range, "m and k must be positive");
  GroundedReport report;
  int want = m * k + 1;
  if (!ground_override.empty()) {
    require(static_cast<int>(ground_override.size()) == want, Errc::arity_mismatch,
            "supplied ground must have mk+1 vertices");
    if (is_k_ground(g, ground_override, k)) {
      report.hypothesis_holds = true;
      report.ground = ground_override;
      std::sort(report.ground.begin(), report.ground.end());
    }
  } else {
    std::vector<int> order(g.size());
    for (int i = 0; i < g.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int seed : order) {
      std::vector<int> clique = grow_clique(g, seed, want, order);
      if (static_cast<int>(clique.size()) != want) continue;
      if (is_k_ground(g, clique, k)) {
        report.hypothesis_holds = true;
        report.ground = std::move(clique);
        break;
      }
    }
  }
  SimplicialComplex complex = flag_complex(g, m, size_cap);
  report.profile = reduced_betti(complex, m - 1, Coeffs::Z);
  report.conclusion_holds = report.profile.vanishes_through(m - 1);
  return report;
}

FlagGraph random_grounded_complex(uint64_t seed, int n_extra, int m, int k) {
  require(m >= 1 && k >= 1 && n_extra >= 0, Errc::index_out_of_range,
          "m, k must be positive and n_extra nonnegative");
  std::mt19937_64 rng(seed);
  int ground = m * k + 1;
  int n = ground + n_extra;
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < ground; ++a) {
    for (int b = a + 1; b < ground; ++b) edges.emplace_back(a, b);
  }
  std::vector<int> idx(ground);
  for (int v = ground; v < n; ++v) {
    // Every vertex misses at most k ground members, so the hypothesis holds
    // by construction.
    int miss = static_cast<int>(rng() % static_cast<uint64_t>(k + 1));
    for (int i = 0; i < ground; ++i) idx[i] = i;
    for (int i = ground - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
      std::swap(idx[i], idx[j]);
    }
    for (int i = 0; i < ground - miss; ++i) edges.emplace_back(idx[i], v);
  }
  for (int a = ground; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng() % 5 < 2) edges.emplace_back(a, b);
    }
  }
  return FlagGraph(n, std::move(edges));
}

std::string graph_to_dot(const FlagGraph& g, const std::vector<std::string>& labels) {
  std::string out = "graph complex {\n";
  for (int v = 0; v < g.size(); ++v) {
    out += "  n" + std::to_string(v);
    if (v < static_cast<int>(labels.size())) out += " [label=\"" + labels[v] + "\"]";
    out += ";\n";
  }
  for (const auto& [a, b] : g.edges())
    out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace rover
