#pragma once

// Independent verification: exhaustive box enumeration of both membership
// regions, comparison against the generated crystal and the Weyl dimension,
// and the symbolic monomial/linear-form identities behind the spin minors.

#include <cstddef>
#include <string>
#include <vector>

#include "dncrystal/crystal.hpp"
#include "dncrystal/lattice.hpp"
#include "dncrystal/patterns.hpp"

namespace dncrystal {

// All decoration members (resp. polyhedral members) with coordinates in
// [0, bound), ascending lexicographic.  The scan is a pruned depth-first
// search over the defining inequalities; `budget` caps visited assignments.
std::vector<LatticePoint> enumerate_members_decoration(Rank n, const DominantWeight& lambda,
                                                       long long bound,
                                                       std::size_t budget = 200'000'000);
std::vector<LatticePoint> enumerate_members_polyhedral(Rank n, const DominantWeight& lambda,
                                                       long long bound,
                                                       std::size_t budget = 200'000'000);

// Per-coordinate scan bound: 1 + (sum lambda_i) * (2n - 3), certified a
// posteriori against the generated nodes.
long long coincidence_box_bound(Rank n, const DominantWeight& lambda);

struct CoincidenceReport {
  Rank n = 0;
  DominantWeight lambda;
  long long box_bound = 0;
  std::size_t count_decoration = 0;
  std::size_t count_polyhedral = 0;
  std::size_t count_bfs = 0;
  unsigned long long weyl = 0;
  bool box_certified = false;              // every BFS node has all coords < bound
  std::vector<LatticePoint> witnesses;     // first mismatches, capped at 10

  bool success() const {
    return witnesses.empty() && box_certified && count_decoration == count_polyhedral &&
           count_decoration == count_bfs && count_bfs == weyl;
  }
};

CoincidenceReport check_coincidence(Rank n, const DominantWeight& lambda,
                                    std::size_t node_budget = kDefaultNodeBudget,
                                    std::size_t scan_budget = 200'000'000);

std::string to_json(const CoincidenceReport& r);

struct SpinIdentityReport {
  bool ok = true;
  std::vector<AdmissiblePattern> failures;
};

// For every pattern mu: the tropicalized bar-monomial of the triangle with
// label F(mu) equals phi'_mu, and the xi-twisted one equals phi_mu, as exact
// forms.
SpinIdentityReport check_spin_identities(Rank n);

}  // namespace dncrystal
