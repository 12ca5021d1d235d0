#pragma once

#include <cstdint>
#include <stdexcept>

namespace dncrystal {

// Rank n of the type-D root system.  Combinatorial pieces (patterns,
// triangles) make sense for n >= 2; the crystal itself needs n >= 3.
using Rank = int;

// One doubly-indexed variable c_i^(j) (multiplicative side) or x_i^(j)
// (tropical side).  row = i in [1,n], col = j in [1,n-1].  Columns 0 and n
// occur transiently as images under the bar involution; they are carried
// through polynomial arithmetic and rejected at tropicalization.
struct VarIndex {
  int row = 0;
  int col = 0;

  bool in_range(Rank n) const {
    return 1 <= row && row <= n && 1 <= col && col <= n - 1;
  }

  // Linear position along the cyclic word (1 2 ... n)^(n-1), 1-based.
  int position(Rank n) const { return (col - 1) * n + row; }

  friend bool operator==(const VarIndex& a, const VarIndex& b) {
    return a.row == b.row && a.col == b.col;
  }
  friend bool operator!=(const VarIndex& a, const VarIndex& b) { return !(a == b); }
  // Canonical column-major order: by (col, row).
  friend bool operator<(const VarIndex& a, const VarIndex& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row < b.row;
  }
};

inline int num_positions(Rank n) { return n * (n - 1); }

// Letter of the reduced word at 1-based position m: 1, 2, ..., n, 1, 2, ...
inline int letter_at(Rank n, int m) { return (m - 1) % n + 1; }

inline VarIndex var_at_position(Rank n, int m) {
  return VarIndex{(m - 1) % n + 1, (m - 1) / n + 1};
}

inline void require_rank(Rank n, Rank min_rank) {
  if (n < min_rank) throw std::invalid_argument("rank out of range");
}

}  // namespace dncrystal
