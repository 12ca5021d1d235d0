#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dncrystal/indices.hpp"

namespace dncrystal {

// Dominant integral weight lambda = sum_k lambda_k L_k, entries >= 0.
struct DominantWeight {
  std::vector<long long> coeffs;  // coeffs[k-1] = lambda_k

  DominantWeight() = default;
  explicit DominantWeight(std::vector<long long> c) : coeffs(std::move(c)) {
    for (long long v : coeffs)
      if (v < 0) throw std::invalid_argument("weight coefficients must be nonnegative");
  }

  static DominantWeight zero(Rank n) {
    return DominantWeight(std::vector<long long>(n, 0));
  }
  static DominantWeight fundamental(Rank n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("fundamental weight index out of range");
    std::vector<long long> c(n, 0);
    c[k - 1] = 1;
    return DominantWeight(std::move(c));
  }

  Rank rank() const { return static_cast<Rank>(coeffs.size()); }
  long long at(int k) const { return coeffs.at(k - 1); }
  long long total() const {
    long long s = 0;
    for (long long v : coeffs) s += v;
    return s;
  }

  friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
    return a.coeffs == b.coeffs;
  }
};

// Integer point of Z^N, N = n(n-1), in position order (col-major over
// VarIndex: position m = (col-1)*n + row).
struct LatticePoint {
  Rank n = 0;
  std::vector<long long> x;  // size n(n-1)

  LatticePoint() = default;
  LatticePoint(Rank rank, std::vector<long long> coords) : n(rank), x(std::move(coords)) {
    if (static_cast<int>(x.size()) != num_positions(n))
      throw std::invalid_argument("lattice point has wrong dimension");
  }

  static LatticePoint zero(Rank n) {
    return LatticePoint(n, std::vector<long long>(num_positions(n), 0));
  }

  long long at(VarIndex v) const { return x.at(v.position(n) - 1); }
  long long& at(VarIndex v) { return x.at(v.position(n) - 1); }
  long long at_position(int m) const { return x.at(m - 1); }
  long long& at_position(int m) { return x.at(m - 1); }

  bool is_zero() const {
    for (long long v : x)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.x == b.x; }
  friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return a.x != b.x; }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.x < b.x; }
};

}  // namespace dncrystal
