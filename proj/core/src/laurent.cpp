#include "dncrystal/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dncrystal {

namespace {

std::vector<Monomial::Entry> normalize(std::vector<Monomial::Entry> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Monomial::Entry& a, const Monomial::Entry& b) { return a.first < b.first; });
  std::vector<Monomial::Entry> out;
  for (const auto& [v, e] : raw) {
    if (!out.empty() && out.back().first == v)
      out.back().second += e;
    else
      out.push_back({v, e});
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Monomial::Entry& en) { return en.second == 0; }),
            out.end());
  return out;
}

Monomial from_entries(std::vector<Monomial::Entry> raw) {
  Monomial m;
  for (const auto& [v, e] : normalize(std::move(raw))) m = m * Monomial::var(v, e);
  return m;
}

}  // namespace

int Monomial::exponent(VarIndex v) const {
  for (const auto& [w, e] : entries_)
    if (w == v) return e;
  return 0;
}

bool Monomial::in_range(Rank n) const {
  for (const auto& [v, e] : entries_)
    if (!v.in_range(n)) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.entries_.push_back({a->first, e});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out;
  out.entries_ = entries_;
  for (auto& [v, e] : out.entries_) e = -e;
  return out;
}

LaurentPoly::LaurentPoly(const Monomial& m, Coefficient c) {
  if (c <= 0) throw std::invalid_argument("Laurent coefficients must be positive");
  terms_[m] = std::move(c);
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<Monomial, Coefficient>>& terms) {
  LaurentPoly p;
  for (const auto& [m, c] : terms) {
    if (c <= 0) throw std::invalid_argument("Laurent coefficients must be positive");
    p.terms_[m] += c;
  }
  if (p.terms_.empty()) throw std::invalid_argument("the zero Laurent polynomial is not representable");
  return p;
}

bool LaurentPoly::in_range(Rank n) const {
  for (const auto& [m, c] : terms_)
    if (!m.in_range(n)) return false;
  return true;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  std::vector<std::pair<Monomial, Coefficient>> all(p.terms().begin(), p.terms().end());
  all.insert(all.end(), q.terms().begin(), q.terms().end());
  return LaurentPoly::from_terms(all);
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  std::vector<std::pair<Monomial, Coefficient>> all;
  all.reserve(p.size() * q.size());
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) all.push_back({mp * mq, cp * cq});
  return LaurentPoly::from_terms(all);
}

Monomial involution_xi(const Monomial& m, Rank n) {
  std::vector<Monomial::Entry> raw = m.entries();
  for (auto& [v, e] : raw) {
    if (v.row == n - 1)
      v.row = n;
    else if (v.row == n)
      v.row = n - 1;
  }
  return from_entries(std::move(raw));
}

Monomial involution_bar(const Monomial& m, Rank n) {
  std::vector<Monomial::Entry> raw = m.entries();
  for (auto& [v, e] : raw) {
    v.col = n - v.col;
    e = -e;
  }
  return from_entries(std::move(raw));
}

namespace {

LaurentPoly map_monomials(const LaurentPoly& p, Monomial (*f)(const Monomial&, Rank), Rank n) {
  std::vector<std::pair<Monomial, Coefficient>> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) out.push_back({f(m, n), c});
  return LaurentPoly::from_terms(out);
}

}  // namespace

LaurentPoly involution_xi(const LaurentPoly& p, Rank n) {
  return map_monomials(p, &involution_xi, n);
}

LaurentPoly involution_bar(const LaurentPoly& p, Rank n) {
  return map_monomials(p, &involution_bar, n);
}

namespace {

std::string var_string(VarIndex v, int exp_abs) {
  std::ostringstream os;
  os << "c_" << v.row << "^(" << v.col << ")";
  if (exp_abs > 1) os << "^" << exp_abs;
  return os.str();
}

std::string term_string(const Monomial& m, const Coefficient& c) {
  std::vector<std::string> num, den;
  for (const auto& [v, e] : m.entries()) {
    if (e > 0)
      num.push_back(var_string(v, e));
    else
      den.push_back(var_string(v, -e));
  }
  std::ostringstream os;
  if (c != 1 || num.empty()) os << c;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (i > 0 || c != 1) os << "*";
    os << num[i];
  }
  if (!den.empty()) {
    os << "/";
    if (den.size() > 1) os << "(";
    for (std::size_t i = 0; i < den.size(); ++i) {
      if (i > 0) os << "*";
      os << den[i];
    }
    if (den.size() > 1) os << ")";
  }
  return os.str();
}

}  // namespace

std::string to_string(const Monomial& m) { return term_string(m, 1); }

std::string to_string(const LaurentPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    os << term_string(m, c);
    first = false;
  }
  return os.str();
}

}  // namespace dncrystal
