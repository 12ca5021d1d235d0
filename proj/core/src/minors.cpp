#include "dncrystal/minors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dncrystal {

std::string to_string(const Triangle& t) {
  Rank n = t.rank();
  std::ostringstream os;
  for (std::size_t l = 0; l < t.rows.size(); ++l) {
    if (l > 0) os << "/";
    const auto& row = t.rows[l];
    for (std::size_t k = row.size(); k-- > 0;) {
      os << row[k];
      if (n > 9 && k > 0) os << ",";
    }
  }
  return os.str();
}

namespace {

void extend_triangle(Triangle& t, int l, Rank n, std::vector<Triangle>& out) {
  if (l == n) {
    out.push_back(t);
    return;
  }
  // Row l entry by entry: j_k^(l) <= j_k^(l-1) and j_{k-1}^(l-1) < j_k^(l).
  const std::vector<int>* prev = l >= 2 ? &t.rows[l - 2] : nullptr;
  std::vector<int>& row = t.rows[l - 1];
  row.assign(l, 0);
  auto fill = [&](auto&& self, int k) -> void {
    if (k > l) {
      extend_triangle(t, l + 1, n, out);
      return;
    }
    int lo = k == 1 ? 1 : (*prev)[k - 2] + 1;
    int hi = k <= l - 1 ? (*prev)[k - 1] : n;
    for (int v = lo; v <= hi; ++v) {
      row[k - 1] = v;
      self(self, k + 1);
    }
  };
  fill(fill, 1);
  row.clear();
}

}  // namespace

std::vector<Triangle> enumerate_triangles(Rank n) {
  require_rank(n, 2);
  std::vector<Triangle> out;
  Triangle t;
  t.rows.assign(n - 1, {});
  extend_triangle(t, 1, n, out);
  return out;
}

Label label(const Triangle& t) {
  Rank n = t.rank();
  Label out;
  out.s.reserve(n - 1);
  for (int k = 1; k <= n - 1; ++k) {
    const auto& row = t.rows[k - 1];
    if (static_cast<int>(row.size()) != k) throw std::domain_error("triangle row has wrong length");
    int gap = k + 1;
    for (int m = 1; m <= k; ++m) {
      if (row[m - 1] == m + 1) {
        gap = m;
        break;
      }
    }
    for (int m = 1; m <= k; ++m) {
      int expect = m < gap ? m : m + 1;
      if (row[m - 1] != expect)
        throw std::domain_error("triangle row is not of the one-gap shape");
    }
    out.s.push_back(gap);
  }
  return out;
}

bool is_delta_high(const Triangle& t) {
  for (const auto& row : t.rows)
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] != static_cast<int>(k) + 2) return false;
  return true;
}

bool is_delta_low(const Triangle& t) {
  for (const auto& row : t.rows)
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] != static_cast<int>(k) + 1) return false;
  return true;
}

Monomial monomial_for_label(const Label& s, Rank n) {
  require_rank(n, 2);
  if (static_cast<int>(s.s.size()) != n - 1) throw std::invalid_argument("label has wrong length");
  auto sv = [&](int k) -> int {
    if (k == 0) return 1;
    if (k == n) return (n >= 3 ? s.s[n - 3] : 1) + 1;  // s_n = s_{n-2} + 1
    return s.s[k - 1];
  };
  Monomial m;
  for (int i = 1; i <= n - 1; ++i) {
    bool raised = sv(i) == sv(i - 1) + 1;
    bool raises = sv(i + 1) == sv(i) + 1;
    if (!raised && sv(i) != sv(i - 1)) throw std::domain_error("label steps must be 0 or 1");
    if (!raises && sv(i + 1) != sv(i)) throw std::domain_error("label steps must be 0 or 1");
    if (raises && !raised) {  // type I
      int row = i <= n - 2 ? i : ((n + sv(i)) % 2 == 0 ? n - 1 : n);
      m = m * Monomial::var({row, sv(i)}, +1);
    } else if (!raises && raised) {  // type IV
      int row = i <= n - 2 ? i : ((n + sv(i)) % 2 == 0 ? n : n - 1);
      m = m * Monomial::var({row, sv(i)}, -1);
    }
    // types II and III contribute 1
  }
  return m;
}

Monomial monomial(const Triangle& t, Rank n) {
  if (t.rank() != n) throw std::invalid_argument("triangle rank mismatch");
  return monomial_for_label(label(t), n);
}

LaurentPoly minor_upper(Rank n, int k) {
  require_rank(n, 3);
  if (k < 1 || k > n) throw std::invalid_argument("minor index out of range");
  if (k == n - 1) return LaurentPoly(Monomial::var({n - 1, n - 1}));
  if (k == n) return LaurentPoly(Monomial::var({n, n - 1}));
  std::vector<std::pair<Monomial, Coefficient>> terms;
  auto ratio = [](std::initializer_list<std::pair<VarIndex, int>> vars) {
    Monomial m;
    for (const auto& [v, e] : vars)
      if (v.row >= 1) m = m * Monomial::var(v, e);
    return m;
  };
  for (int i = 1; i <= n - 2; ++i)
    terms.push_back({ratio({{{i, k}, 1}, {{i - 1, k + 1}, -1}}), 1});
  terms.push_back({ratio({{{n - 1, k}, 1}, {{n, k}, 1}, {{n - 2, k + 1}, -1}}), 1});
  terms.push_back({ratio({{{n - 2, k + 1}, 1}, {{n - 1, k + 1}, -1}, {{n, k + 1}, -1}}), 1});
  terms.push_back({ratio({{{n, k}, 1}, {{n - 1, k + 1}, -1}}), 1});
  terms.push_back({ratio({{{n - 1, k}, 1}, {{n, k + 1}, -1}}), 1});
  for (int j = k + 2; j <= n - 1; ++j)
    terms.push_back({ratio({{{n + k - j - 1, j}, 1}, {{n + k - j, j}, -1}}), 1});
  return LaurentPoly::from_terms(terms);
}

LaurentPoly minor_lower_small(Rank n, int k) {
  require_rank(n, 3);
  if (k < 1 || k > n - 2) throw std::invalid_argument("minor index out of range");
  std::vector<std::pair<Monomial, Coefficient>> terms;
  terms.push_back({Monomial::var({1, k}, -1), 1});
  for (int j = 1; j <= k - 1; ++j)
    terms.push_back({Monomial::var({k - j, j}) * Monomial::var({k - j + 1, j}, -1), 1});
  return LaurentPoly::from_terms(terms);
}

LaurentPoly minor_lower_spin(Rank n, int k) {
  require_rank(n, 3);
  if (k != n - 1 && k != n) throw std::invalid_argument("spin minor index must be n-1 or n");
  std::vector<std::pair<Monomial, Coefficient>> terms;
  for (const Triangle& d : enumerate_triangles(n)) {
    if (is_delta_low(d)) continue;
    Monomial m = monomial(d, n);
    if (k == n - 1) m = involution_xi(m, n);
    m = involution_bar(m, n);
    if (!m.in_range(n))
      throw std::domain_error("spin minor term out of range for triangle " + to_string(d));
    terms.push_back({m, 1});
  }
  return LaurentPoly::from_terms(terms);
}

LaurentPoly minor_lower(Rank n, int k) {
  if (k == n - 1 || k == n) return minor_lower_spin(n, k);
  return minor_lower_small(n, k);
}

DecorationPieces make_decoration(Rank n) {
  require_rank(n, 3);
  DecorationPieces d;
  d.n = n;
  for (int i = 1; i <= n; ++i) {
    d.upper.push_back(tropicalize(minor_upper(n, i), n));
    d.lower.push_back(tropicalize(minor_lower(n, i), n));
  }
  return d;
}

const DecorationPieces& decoration(Rank n) {
  static std::mutex mu;
  static std::map<Rank, std::unique_ptr<DecorationPieces>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<DecorationPieces>(make_decoration(n))).first;
  return *it->second;
}

}  // namespace dncrystal
