#pragma once

// Generalized minors evaluated on the torus chart of the cyclic reduced word
// (1 2 ... n)^(n-1): the explicit upper/lower sums, the triangle-and-label
// combinatorics behind the two spin minors, and the assembled decoration.

#include <string>
#include <vector>

#include "dncrystal/laurent.hpp"
#include "dncrystal/patterns.hpp"
#include "dncrystal/tropical.hpp"

namespace dncrystal {

// Staircase array (j_k^(l))_{1<=k<=l<n} with 1 <= j_k^(l+1) <= j_k^(l) <
// j_{k+1}^(l+1) <= n.  rows[l-1] holds (j_1^(l), ..., j_l^(l)).
struct Triangle {
  std::vector<std::vector<int>> rows;

  Rank rank() const { return static_cast<Rank>(rows.size()) + 1; }

  friend bool operator==(const Triangle& a, const Triangle& b) { return a.rows == b.rows; }
  friend bool operator<(const Triangle& a, const Triangle& b) { return a.rows < b.rows; }
};

// Rows printed top to bottom, each in display order j_l^(l) ... j_1^(l),
// joined by '/'; e.g. "1/21/321/4321".
std::string to_string(const Triangle& t);

// All 2^(n-1) triangles, in depth-first order of the defining inequalities.
std::vector<Triangle> enumerate_triangles(Rank n);

// Per-row gap positions.  Throws std::domain_error on a row that is not of
// the one-gap shape.
Label label(const Triangle& t);

bool is_delta_high(const Triangle& t);  // all entries k+1, label (1,...,1)
bool is_delta_low(const Triangle& t);   // all entries k, label (2,3,...,n)

// Laurent monomial read off the label row types (I: positive, IV: inverse,
// II/III: none), with the spin-row parity rule at row n-1.
Monomial monomial(const Triangle& t, Rank n);
Monomial monomial_for_label(const Label& s, Rank n);

// Minor of the pair (w0 L_k, s_k L_k): the 2n-k chain/cross/tail sum for
// k <= n-2, a single spin variable for k = n-1, n.
LaurentPoly minor_upper(Rank n, int k);

// Minor of the pair (w0 s_k L_k, L_k) for k <= n-2: 1/c_1^(k) plus the
// k-1 column ratios.
LaurentPoly minor_lower_small(Rank n, int k);

// Spin cases k = n-1, n: sum of bar(m(delta)) (k = n) or bar(xi(m(delta)))
// (k = n-1) over all triangles except delta_low.  Every term must be
// in range; a violation is an integrity failure.
LaurentPoly minor_lower_spin(Rank n, int k);

LaurentPoly minor_lower(Rank n, int k);

// Tropicalized numerators of the decoration, indexed by i = 1..n (0-based
// storage).  Membership of (lambda, x) means every upper piece and every
// lambda_i-shifted lower piece is nonnegative.
struct DecorationPieces {
  Rank n = 0;
  std::vector<TropicalForm> upper;
  std::vector<TropicalForm> lower;
};

DecorationPieces make_decoration(Rank n);

// Cached per rank; the returned reference is stable and safe for concurrent
// readers.
const DecorationPieces& decoration(Rank n);

}  // namespace dncrystal
