#pragma once

// Admissible patterns, the inequality systems of the polyhedral realization,
// the spin-node linear forms phi_mu / phi'_mu, and the pattern-to-label map F.

#include <string>
#include <vector>

#include "dncrystal/lattice.hpp"
#include "dncrystal/tropical.hpp"

namespace dncrystal {

// Strictly decreasing nonempty sequence in [1, n-1].
using AdmissiblePattern = std::vector<int>;

void validate_pattern(const AdmissiblePattern& mu, Rank n);

// Label s = (s_1, ..., s_{n-1}) of a triangle row-gap sequence, with the
// conventions s_0 = 1 and s_n = s_{n-2} + 1 applied where needed.
struct Label {
  std::vector<int> s;

  friend bool operator==(const Label& a, const Label& b) { return a.s == b.s; }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
  friend bool operator<(const Label& a, const Label& b) { return a.s < b.s; }
};

std::string to_string(const Label& l);

// All 2^(n-1) - 1 patterns, ordered by descending subset bitmask of [1,n-1].
std::vector<AdmissiblePattern> enumerate_patterns(Rank n);

// (K_n - U_{mu_1} - ... - U_{mu_l}) reversed, K_n = (n, n-1, ..., 2), U_m the
// left-aligned block of m ones.
Label map_F(const AdmissiblePattern& mu, Rank n);

// Spin linear forms.  phi_mu swaps rows n-1 <-> n in even columns, phi'_mu in
// odd columns; row index 0 drops out.
AffineForm phi_mu(const AdmissiblePattern& mu, Rank n);
AffineForm phi_prime_mu(const AdmissiblePattern& mu, Rank n);

// Inequality systems: membership requires f(x) >= 0 for f in xi_set(n,k) and
// lambda_k + g(x) >= 0 for g in xi_prime_set(n,k), k = 1..n.  Sets are
// materialized once per rank and cached; the returned references are stable.
const std::vector<AffineForm>& xi_set(Rank n, int k);
const std::vector<AffineForm>& xi_prime_set(Rank n, int k);

bool membership_polyhedral(Rank n, const DominantWeight& lambda, const LatticePoint& x);

}  // namespace dncrystal
