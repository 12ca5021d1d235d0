#include "dncrystal/tropical.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dncrystal {

long long AffineForm::coeff(VarIndex v) const {
  for (const auto& [w, c] : terms)
    if (w == v) return c;
  return 0;
}

void FormBuilder::add_var(VarIndex v, long long c) {
  if (c != 0) raw_.push_back({v, c});
}

void FormBuilder::add_lambda(int k, long long c, Rank n) {
  if (c == 0) return;
  if (lambda_.empty()) lambda_.assign(n, 0);
  lambda_.at(k - 1) += c;
}

AffineForm FormBuilder::build() && {
  std::sort(raw_.begin(), raw_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  AffineForm f;
  for (const auto& [v, c] : raw_) {
    if (!f.terms.empty() && f.terms.back().first == v)
      f.terms.back().second += c;
    else
      f.terms.push_back({v, c});
  }
  f.terms.erase(std::remove_if(f.terms.begin(), f.terms.end(),
                               [](const auto& t) { return t.second == 0; }),
                f.terms.end());
  bool all_zero = std::all_of(lambda_.begin(), lambda_.end(), [](long long c) { return c == 0; });
  if (!all_zero) f.lambda = std::move(lambda_);
  return f;
}

TropicalForm make_tropical(std::vector<AffineForm> pieces) {
  if (pieces.empty()) throw std::invalid_argument("a tropical form needs at least one piece");
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
  return TropicalForm{std::move(pieces)};
}

AffineForm tropicalize(const Monomial& m, Rank n) {
  AffineForm f;
  for (const auto& [v, e] : m.entries()) {
    if (!v.in_range(n)) {
      throw std::domain_error("cannot tropicalize: variable c_" + std::to_string(v.row) + "^(" +
                              std::to_string(v.col) + ") is out of range");
    }
    f.terms.push_back({v, e});
  }
  return f;
}

TropicalForm tropicalize(const LaurentPoly& p, Rank n) {
  std::vector<AffineForm> pieces;
  pieces.reserve(p.size());
  for (const auto& [m, c] : p.terms()) pieces.push_back(tropicalize(m, n));
  return make_tropical(std::move(pieces));
}

long long evaluate(const AffineForm& f, const DominantWeight& lambda, const LatticePoint& x) {
  long long v = 0;
  for (std::size_t k = 0; k < f.lambda.size(); ++k) v += f.lambda[k] * lambda.coeffs.at(k);
  for (const auto& [var, c] : f.terms) v += c * x.at(var);
  return v;
}

long long evaluate(const TropicalForm& t, const DominantWeight& lambda, const LatticePoint& x) {
  long long best = std::numeric_limits<long long>::max();
  for (const AffineForm& f : t.pieces) best = std::min(best, evaluate(f, lambda, x));
  return best;
}

namespace {

void append_term(std::ostringstream& os, bool& first, long long c, const std::string& name) {
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  long long a = c < 0 ? -c : c;
  if (a != 1) os << a << "*";
  os << name;
  first = false;
}

}  // namespace

std::string to_string(const AffineForm& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < f.lambda.size(); ++k) {
    if (f.lambda[k] == 0) continue;
    append_term(os, first, f.lambda[k], "l_" + std::to_string(k + 1));
  }
  for (const auto& [v, c] : f.terms) {
    std::ostringstream name;
    name << "x_" << v.row << "^(" << v.col << ")";
    append_term(os, first, c, name.str());
  }
  if (first) return "0";
  return os.str();
}

std::string to_string(const TropicalForm& t) {
  if (t.pieces.size() == 1) return to_string(t.pieces.front());
  std::ostringstream os;
  os << "min(";
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    if (i > 0) os << ", ";
    os << to_string(t.pieces[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace dncrystal
