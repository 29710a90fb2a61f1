#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <functional>
#include <optional>
#include <vector>

#include "lsc/rootdata.hpp"

namespace lsc::testing {

// Exact convex-hull membership by exhaustive simplex search: x lies in
// conv(verts) iff some affinely independent subset of at most rank+1
// vertices carries x with nonnegative barycentric coordinates.
inline bool caratheodory_member(const RootDatum& g, const std::vector<Weight>& verts,
                                const Weight& x) {
  const int n = g.rank();
  const int rows = n + 1;

  // Solves sum c_j v_j = x with sum c_j = 1; nullopt when inconsistent or
  // when the chosen vertices are affinely dependent.
  auto solve = [&](const std::vector<int>& pick) -> std::optional<std::vector<Rat>> {
    const int k = static_cast<int>(pick.size());
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(k + 1));
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < n; ++i) m[i][j] = verts[pick[j]][i];
      m[n][j] = Rat(1);
    }
    for (int i = 0; i < n; ++i) m[i][k] = x[i];
    m[n][k] = Rat(1);

    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < k && row < rows; ++col) {
      int piv = -1;
      for (int r = row; r < rows; ++r)
        if (!m[r][col].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return std::nullopt;  // affinely dependent pick
      std::swap(m[piv], m[row]);
      for (int r = 0; r < rows; ++r) {
        if (r == row || m[r][col].is_zero()) continue;
        Rat f = m[r][col] / m[row][col];
        for (int c = col; c <= k; ++c) m[r][c] -= f * m[row][c];
      }
      pivot_col_of_row.push_back(col);
      ++row;
    }
    if (row < k) return std::nullopt;
    for (int r = row; r < rows; ++r)
      if (!m[r][k].is_zero()) return std::nullopt;  // inconsistent
    std::vector<Rat> sol(k);
    for (int r = 0; r < k; ++r) sol[pivot_col_of_row[r]] = m[r][k] / m[r][pivot_col_of_row[r]];
    return sol;
  };

  const int v = static_cast<int>(verts.size());
  std::vector<int> pick;
  std::function<bool(int, int)> search = [&](int start, int want) -> bool {
    if (want == 0) {
      auto sol = solve(pick);
      if (!sol) return false;
      for (const Rat& c : *sol)
        if (c < Rat(0)) return false;
      return true;
    }
    for (int j = start; j + want <= v; ++j) {
      pick.push_back(j);
      if (search(j + 1, want - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= n + 1; ++size)
    if (search(0, size)) return true;
  return false;
}

}  // namespace lsc::testing
