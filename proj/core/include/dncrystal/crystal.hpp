#pragma once

// The ultra-discretized crystal on Z^N: Cartan data, the weight and string
// statistics, the raising/lowering operators gated by the decoration, and
// breadth-first generation of the full highest-weight crystal graph.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dncrystal/lattice.hpp"
#include "dncrystal/minors.hpp"

namespace dncrystal {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t count)
      : std::runtime_error(what), partial_count(count) {}
  std::size_t partial_count;
};

// Type-D Cartan matrix entry a_{i,j}: the fork couples n-2 to both n-1 and n,
// which are mutually unlinked.
int cartan(Rank n, int i, int j);

std::vector<long long> weight(Rank n, const DominantWeight& lambda, const LatticePoint& x);
long long weight_i(Rank n, const DominantWeight& lambda, const LatticePoint& x, int i);
long long epsilon(Rank n, const LatticePoint& x, int i);
long long phi(Rank n, const DominantWeight& lambda, const LatticePoint& x, int i);

bool membership_decoration(Rank n, const DominantWeight& lambda, const LatticePoint& x);

// One lowering/raising step.  The caller supplies a member point; the result
// is null when the moved point leaves the decoration region (the crystal 0).
std::optional<LatticePoint> apply_f(Rank n, const DominantWeight& lambda,
                                    const LatticePoint& x, int i);
std::optional<LatticePoint> apply_e(Rank n, const DominantWeight& lambda,
                                    const LatticePoint& x, int i);

// Closed-form multi-step raising; agrees with `steps`-fold apply_e wherever
// both are defined.  steps = 0 is the identity.
std::optional<LatticePoint> apply_e_power(Rank n, const DominantWeight& lambda,
                                          const LatticePoint& x, int i, long long steps);

struct CrystalEdge {
  int from = 0;
  int to = 0;
  int i = 0;

  friend bool operator==(const CrystalEdge& a, const CrystalEdge& b) {
    return a.from == b.from && a.to == b.to && a.i == b.i;
  }
  friend bool operator<(const CrystalEdge& a, const CrystalEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.i < b.i;
  }
};

// Finite edge-labeled digraph of B(lambda).  Node ids are assigned by
// lexicographic order of the coordinate vectors, so id 0 is the highest
// weight node (the zero vector).
struct CrystalGraph {
  Rank n = 0;
  DominantWeight lambda;
  std::vector<LatticePoint> nodes;
  std::vector<std::vector<long long>> node_weights;
  std::vector<CrystalEdge> edges;
};

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

// BFS closure of the zero vector under apply_f.  Throws BudgetExceeded (with
// the partial node count) if the crystal outgrows the budget.
CrystalGraph generate(Rank n, const DominantWeight& lambda,
                      std::size_t node_budget = kDefaultNodeBudget);

// Byte-deterministic exports.
std::string to_json(const CrystalGraph& g);
std::string to_dot(const CrystalGraph& g);
std::string to_text(const CrystalGraph& g);

}  // namespace dncrystal
