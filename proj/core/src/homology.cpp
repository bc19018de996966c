#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rover/errors.hpp"
#include "rover/topology.hpp"

namespace rover {

namespace {

using boost::multiprecision::cpp_int;

struct Overflow {};

// Arithmetic wrappers: the int64 fast path throws Overflow and the caller
// retries with arbitrary precision.
inline long long mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline long long sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline cpp_int mul(const cpp_int& a, const cpp_int& b) { return a * b; }
inline cpp_int sub(const cpp_int& a, const cpp_int& b) { return a - b; }

template <class I>
struct SmithResult {
  long long rank = 0;
  std::vector<long long> factors;  // invariant factors, in divisibility order
};

template <class I>
I abs_of(const I& v) {
  return v < 0 ? I(-v) : v;
}

// Smith normal form by pivoting on a minimal-magnitude entry.  The pivot is
// forced to divide the remaining submatrix before it is accepted, so the
// diagonal comes out in divisibility order.
template <class I>
SmithResult<I> smith(std::vector<std::vector<I>> m) {
  SmithResult<I> out;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int t = 0;
  while (t < rows && t < cols) {
    int pr = -1, pc = -1;
    I best = 0;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        I a = abs_of(m[i][j]);
        if (pr < 0 || a < best) {
          best = a;
          pr = i;
          pc = j;
          if (best == 1) break;
        }
      }
      if (best == 1) break;
    }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
    bool settled = false;
    while (!settled) {
      settled = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        I q = m[i][t] / m[t][t];
        if (q != 0) {
          for (int j = t; j < cols; ++j) m[i][j] = sub(m[i][j], mul(q, m[t][j]));
        }
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          settled = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        I q = m[t][j] / m[t][t];
        if (q != 0) {
          for (int i = t; i < rows; ++i) m[i][j] = sub(m[i][j], mul(q, m[i][t]));
        }
        if (m[t][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          settled = false;
        }
      }
      if (settled) {
        // The pivot must divide everything that remains.
        for (int i = t + 1; i < rows && settled; ++i) {
          for (int j = t + 1; j < cols; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              for (int c = t; c < cols; ++c) m[t][c] = sub(m[t][c], mul(I(-1), m[i][c]));
              settled = false;
              break;
            }
          }
        }
      }
    }
    I d = abs_of(m[t][t]);
    out.factors.push_back(static_cast<long long>(d));
    ++out.rank;
    ++t;
  }
  return out;
}

long long rank_gf2(const std::vector<std::vector<int>>& dense, int cols) {
  int words = (cols + 63) / 64;
  std::vector<std::vector<uint64_t>> rows;
  rows.reserve(dense.size());
  for (const auto& r : dense) {
    std::vector<uint64_t> bits(words, 0);
    for (int j = 0; j < cols; ++j) {
      if (r[j] & 1) bits[j / 64] |= uint64_t(1) << (j % 64);
    }
    rows.push_back(std::move(bits));
  }
  long long rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = row; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col / 64] >> (col % 64) & 1) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[row], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != row && (rows[i][col / 64] >> (col % 64) & 1)) {
        for (int w = 0; w < words; ++w) rows[i][w] ^= rows[row][w];
      }
    }
    ++rank;
    ++row;
  }
  return rank;
}

template <class I>
std::vector<std::vector<I>> to_matrix(const std::vector<std::vector<int>>& dense) {
  std::vector<std::vector<I>> m;
  m.reserve(dense.size());
  for (const auto& r : dense) m.emplace_back(r.begin(), r.end());
  return m;
}

SmithResult<long long> smith_auto(const std::vector<std::vector<int>>& dense) {
  try {
    auto r = smith(to_matrix<long long>(dense));
    return {r.rank, std::move(r.factors)};
  } catch (const Overflow&) {
    auto r = smith(to_matrix<cpp_int>(dense));
    return {r.rank, std::move(r.factors)};
  }
}

// Boundary matrix from (d-1)-simplices (rows) to d-simplices (columns).
std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& k, int d) {
  if (d < 1 || d > k.dim()) return {};
  const auto& lower = k.simplices[d - 1];
  const auto& upper = k.simplices[d];
  if (lower.empty() || upper.empty()) return {};
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(lower.size()); ++i) index[lower[i]] = i;
  std::vector<std::vector<int>> m(lower.size(), std::vector<int>(upper.size(), 0));
  for (int j = 0; j < static_cast<int>(upper.size()); ++j) {
    const auto& s = upper[j];
    int sign = 1;
    for (size_t p = 0; p < s.size(); ++p) {
      std::vector<int> face;
      face.reserve(s.size() - 1);
      for (size_t q = 0; q < s.size(); ++q) {
        if (q != p) face.push_back(s[q]);
      }
      auto it = index.find(face);
      require(it != index.end(), Errc::illegal_set, "complex is not closed under faces");
      m[it->second][j] = sign;
      sign = -sign;
    }
  }
  return m;
}

}  // namespace

BettiProfile reduced_betti(const SimplicialComplex& k, int max_dim, Coeffs coeffs,
                           long long snf_cap) {
  require(max_dim >= 0, Errc::index_out_of_range, "dimension must be nonnegative");
  BettiProfile out;
  out.coeffs = coeffs;
  long long n0 = k.dim() >= 0 ? static_cast<long long>(k.simplices[0].size()) : 0;
  bool want_snf = coeffs == Coeffs::Z && k.size() <= snf_cap;
  if (coeffs == Coeffs::Z && !want_snf) out.exact = false;

  // rank and invariant factors of each boundary map through max_dim+1
  std::vector<long long> rank(max_dim + 2, 0);
  std::vector<std::vector<long long>> tors(max_dim + 2);
  rank[0] = n0 > 0 ? 1 : 0;  // augmentation
  for (int d = 1; d <= max_dim + 1; ++d) {
    auto dense = boundary_matrix(k, d);
    if (dense.empty()) continue;
    if (coeffs == Coeffs::GF2) {
      long long bits = static_cast<long long>(dense.size()) *
                       static_cast<long long>(dense[0].size());
      require(bits <= (1LL << 34), Errc::size_cap_exceeded, "matrix too large for gf2 rank");
      rank[d] = rank_gf2(dense, static_cast<int>(dense[0].size()));
    } else if (want_snf) {
      auto r = smith_auto(dense);
      rank[d] = r.rank;
      for (long long f : r.factors) {
        if (f > 1) tors[d].push_back(f);
      }
    } else {
      // ranks over the rationals, no torsion bookkeeping
      auto r = smith_auto(dense);
      rank[d] = r.rank;
    }
  }

  out.betti_minus1 = static_cast<int>(1 - rank[0]);
  out.betti.assign(max_dim + 1, 0);
  out.torsion.assign(max_dim + 1, {});
  for (int d = 0; d <= max_dim; ++d) {
    long long nd = d <= k.dim() ? static_cast<long long>(k.simplices[d].size()) : 0;
    out.betti[d] = nd - rank[d] - rank[d + 1];
    if (coeffs == Coeffs::Z && want_snf) out.torsion[d] = tors[d + 1];
  }
  return out;
}

}  // namespace rover
