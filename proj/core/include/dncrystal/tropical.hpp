#pragma once

// Min-plus side: integer-linear forms in the x_i^(j), optionally carrying
// multiples of the weight coordinates lambda_k, and tropical expressions
// (minima over finite sets of such forms).

#include <string>
#include <utility>
#include <vector>

#include "dncrystal/indices.hpp"
#include "dncrystal/lattice.hpp"
#include "dncrystal/laurent.hpp"

namespace dncrystal {

struct AffineForm {
  std::vector<long long> lambda;  // lambda[k-1] multiplies lambda_k; empty means 0
  std::vector<std::pair<VarIndex, long long>> terms;  // sorted by VarIndex, coeffs nonzero

  static AffineForm variable(VarIndex v) {
    AffineForm f;
    f.terms.push_back({v, 1});
    return f;
  }

  bool is_lambda_free() const { return lambda.empty(); }
  long long coeff(VarIndex v) const;

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.lambda == b.lambda && a.terms == b.terms;
  }
  friend bool operator!=(const AffineForm& a, const AffineForm& b) { return !(a == b); }
  friend bool operator<(const AffineForm& a, const AffineForm& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.terms < b.terms;
  }
};

// Accumulator used when assembling forms term by term; drops cancellations.
class FormBuilder {
 public:
  void add_var(VarIndex v, long long c);
  void add_lambda(int k, long long c, Rank n);
  AffineForm build() &&;

 private:
  std::vector<long long> lambda_;
  std::vector<std::pair<VarIndex, long long>> raw_;
};

// Minimum over a deduplicated, canonically sorted, nonempty set of forms.
struct TropicalForm {
  std::vector<AffineForm> pieces;

  friend bool operator==(const TropicalForm& a, const TropicalForm& b) {
    return a.pieces == b.pieces;
  }
};

TropicalForm make_tropical(std::vector<AffineForm> pieces);

// Ultra-discretization: one form per monomial, exponents become coefficients,
// numeric coefficients are dropped.  Throws std::domain_error if any variable
// lies outside [1,n] x [1,n-1].
AffineForm tropicalize(const Monomial& m, Rank n);
TropicalForm tropicalize(const LaurentPoly& p, Rank n);

long long evaluate(const AffineForm& f, const DominantWeight& lambda, const LatticePoint& x);
long long evaluate(const TropicalForm& t, const DominantWeight& lambda, const LatticePoint& x);

std::string to_string(const AffineForm& f);
std::string to_string(const TropicalForm& t);

}  // namespace dncrystal
