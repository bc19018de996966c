#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rover {

class FlagGraph {
 public:
  FlagGraph() = default;
  // Edges are deduplicated; loops are rejected.
  FlagGraph(int n, std::vector<std::pair<int, int>> edges);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int i, int j) const;
  int degree(int i) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // i < j, sorted
  std::vector<std::vector<char>> adj_;
};

struct SimplicialComplex {
  // simplices[d] lists the d-simplices as sorted vertex tuples, in
  // lexicographic order.  simplices[0] is the vertex list.
  std::vector<std::vector<std::vector<int>>> simplices;

  int dim() const { return static_cast<int>(simplices.size()) - 1; }
  long long size() const;
};

// All cliques of the graph up to max_dim (inclusive).  Throws
// SizeCapExceeded if the total number of simplices would pass size_cap.
SimplicialComplex flag_complex(const FlagGraph& g, int max_dim, long long size_cap = 200000);

enum class Coeffs { Z, GF2, Q };

struct BettiProfile {
  Coeffs coeffs = Coeffs::Z;
  bool exact = true;  // false when a rank-only fallback replaced integer SNF
  int betti_minus1 = 0;  // reduced: 1 for the empty complex, else 0
  std::vector<long long> betti;                // reduced Betti numbers, dims 0..max_dim
  std::vector<std::vector<long long>> torsion;  // invariant factors > 1 per dim (Z only)

  bool vanishes_through(int d) const;
};

// Reduced Betti numbers through max_dim.  Needs the complex built through
// dimension max_dim+1 to be correct at the top degree.  Over Z an integer
// Smith normal form runs while the complex has at most snf_cap simplices;
// larger complexes fall back to rational ranks with exact=false.
BettiProfile reduced_betti(const SimplicialComplex& k, int max_dim, Coeffs coeffs = Coeffs::Z,
                           long long snf_cap = 5000);

// ground must be a clique (else NotAClique).  True iff every vertex of the
// graph is adjacent to all but at most k members of the ground (membership
// counts as adjacency).
bool is_k_ground(const FlagGraph& g, const std::vector<int>& ground, int k);

struct GroundedReport {
  bool hypothesis_holds = false;   // an (mk)-simplex that is a k-ground was exhibited
  std::vector<int> ground;         // the witness clique, if any
  bool conclusion_holds = false;   // reduced homology vanishes through dim m-1
  BettiProfile profile;
};

// Checks the grounding criterion: if some (mk)-simplex is a k-ground then
// the complex is (m-1)-connected.  The ground is searched greedily unless
// supplied; a failed search only reports hypothesis_holds=false, it never
// claims absence.  Homology runs over Z.
GroundedReport grounded_connectivity_check(const FlagGraph& g, int m, int k,
                                           const std::vector<int>& ground_override = {},
                                           long long size_cap = 200000);

// Random graph with a designated (mk+1)-vertex ground clique such that the
// grounding hypothesis holds by construction.  Deterministic in the seed.
FlagGraph random_grounded_complex(uint64_t seed, int n_extra, int m, int k);

std::string graph_to_dot(const FlagGraph& g, const std::vector<std::string>& labels = {});

}  // namespace rover
