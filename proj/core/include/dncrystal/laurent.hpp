#pragma once

// Exact Laurent-polynomial arithmetic over the variables c_i^(j).  All
// coefficients are strictly positive unbounded integers; this positivity is
// what makes ultra-discretization (products -> sums, sums -> min) well
// defined.  The zero polynomial is not representable.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dncrystal/indices.hpp"

namespace dncrystal {

using Coefficient = boost::multiprecision::cpp_int;

// Sparse exponent map, canonically ordered by (col, row).  The empty map is
// the monomial 1.
class Monomial {
 public:
  using Entry = std::pair<VarIndex, int>;

  Monomial() = default;

  static Monomial var(VarIndex v, int exp = 1) {
    Monomial m;
    if (exp != 0) m.entries_.push_back({v, exp});
    return m;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_unit() const { return entries_.empty(); }
  int exponent(VarIndex v) const;
  bool in_range(Rank n) const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Coefficient>;

  explicit LaurentPoly(const Monomial& m, Coefficient c = 1);
  static LaurentPoly one() { return LaurentPoly(Monomial()); }
  // Merges like terms; throws if the list is empty or any coefficient is <= 0.
  static LaurentPoly from_terms(const std::vector<std::pair<Monomial, Coefficient>>& terms);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool in_range(Rank n) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  LaurentPoly() = default;
  TermMap terms_;
};

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

// Row swap n-1 <-> n in every exponent entry.
Monomial involution_xi(const Monomial& m, Rank n);
LaurentPoly involution_xi(const LaurentPoly& p, Rank n);

// c_i^(j) -> (c_i^(n-j))^(-1).  May produce the extended columns 0 and n.
Monomial involution_bar(const Monomial& m, Rank n);
LaurentPoly involution_bar(const LaurentPoly& p, Rank n);

std::string to_string(const Monomial& m);
std::string to_string(const LaurentPoly& p);

}  // namespace dncrystal
