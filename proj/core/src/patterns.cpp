#include "dncrystal/patterns.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dncrystal {

void validate_pattern(const AdmissiblePattern& mu, Rank n) {
  require_rank(n, 2);
  if (mu.empty()) throw std::invalid_argument("pattern must be nonempty");
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 1 || mu[i] > n - 1) throw std::invalid_argument("pattern entry out of range");
    if (i > 0 && mu[i] >= mu[i - 1])
      throw std::invalid_argument("pattern must be strictly decreasing");
  }
}

std::string to_string(const Label& l) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < l.s.size(); ++i) {
    if (i > 0) os << ",";
    os << l.s[i];
  }
  os << ")";
  return os.str();
}

std::vector<AdmissiblePattern> enumerate_patterns(Rank n) {
  require_rank(n, 2);
  if (n > 31) throw std::invalid_argument("rank too large for pattern enumeration");
  std::vector<AdmissiblePattern> out;
  unsigned full = (1u << (n - 1)) - 1;
  out.reserve(full);
  for (unsigned mask = full; mask >= 1; --mask) {
    AdmissiblePattern mu;
    for (int v = n - 1; v >= 1; --v)
      if (mask & (1u << (v - 1))) mu.push_back(v);
    out.push_back(std::move(mu));
  }
  return out;
}

Label map_F(const AdmissiblePattern& mu, Rank n) {
  validate_pattern(mu, n);
  std::vector<int> k(n - 1);
  for (int t = 0; t < n - 1; ++t) k[t] = n - t;  // K_n = (n, n-1, ..., 2)
  for (int m : mu)
    for (int t = 0; t < m; ++t) --k[t];          // U_m: ones left-aligned
  std::reverse(k.begin(), k.end());
  Label out{std::move(k)};
  // Image must be a label of a triangle other than delta_low.
  for (int t = 0; t < n - 1; ++t) {
    int prev = t == 0 ? 1 : out.s[t - 1];
    if (out.s[t] < 1 || out.s[t] > t + 2 || (out.s[t] != prev && out.s[t] != prev + 1))
      throw std::logic_error("map_F produced an invalid label");
  }
  if (out.s[n - 2] >= n) throw std::logic_error("map_F produced the excluded label");
  return out;
}

namespace {

// phi swaps the spin rows in even columns, phi' in odd columns.
AffineForm phi_impl(const AdmissiblePattern& mu, Rank n, bool prime) {
  validate_pattern(mu, n);
  FormBuilder b;
  auto add = [&](int row, int col, long long c) {
    if (row == 0) return;  // x_0^(j) = 0
    bool swap_parity = prime ? (col % 2 == 1) : (col % 2 == 0);
    if (swap_parity) {
      if (row == n - 1)
        row = n;
      else if (row == n)
        row = n - 1;
    }
    b.add_var(VarIndex{row, col}, c);
  };
  int l = static_cast<int>(mu.size());
  for (int k = 1; k <= l; ++k) {
    int col = mu[k - 1] + k - 1;
    add(n - mu[k - 1] - 1, col, +1);
    add(n - mu[k - 1], col, -1);
  }
  if (mu[l - 1] >= 2) add(n, l, +1);
  return std::move(b).build();
}

std::vector<AffineForm> canonical_set(std::vector<AffineForm> forms) {
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

std::vector<AffineForm> build_xi(Rank n, int k) {
  if (k == n - 1) return {AffineForm::variable({n - 1, n - 1})};
  if (k == n) return {AffineForm::variable({n, n - 1})};
  std::vector<AffineForm> out;
  auto form = [&](std::initializer_list<std::pair<VarIndex, long long>> ts) {
    FormBuilder b;
    for (const auto& [v, c] : ts)
      if (v.row >= 1 && v.row <= n) b.add_var(v, c);
    out.push_back(std::move(b).build());
  };
  for (int i = 1; i <= n - 2; ++i)
    form({{{i, k}, 1}, {{i - 1, k + 1}, -1}});
  form({{{n - 1, k}, 1}, {{n, k}, 1}, {{n - 2, k + 1}, -1}});
  form({{{n - 2, k + 1}, 1}, {{n - 1, k + 1}, -1}, {{n, k + 1}, -1}});
  form({{{n, k}, 1}, {{n - 1, k + 1}, -1}});
  form({{{n - 1, k}, 1}, {{n, k + 1}, -1}});
  for (int j = k + 2; j <= n - 1; ++j)
    form({{{n + k - j - 1, j}, 1}, {{n + k - j, j}, -1}});
  return canonical_set(std::move(out));
}

std::vector<AffineForm> build_xi_prime(Rank n, int k) {
  if (k <= n - 2) {
    std::vector<AffineForm> out;
    for (int j = 1; j <= k; ++j) {
      FormBuilder b;
      if (k - j >= 1) b.add_var({k - j, j}, 1);
      b.add_var({k - j + 1, j}, -1);
      out.push_back(std::move(b).build());
    }
    return canonical_set(std::move(out));
  }
  std::vector<AffineForm> out;
  for (const AdmissiblePattern& mu : enumerate_patterns(n))
    out.push_back(k == n - 1 ? phi_mu(mu, n) : phi_prime_mu(mu, n));
  return canonical_set(std::move(out));
}

struct FormSystem {
  std::vector<std::vector<AffineForm>> xi;        // index k-1
  std::vector<std::vector<AffineForm>> xi_prime;  // gated by lambda_k
};

const FormSystem& forms(Rank n) {
  static std::mutex mu;
  static std::map<Rank, std::unique_ptr<FormSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto sys = std::make_unique<FormSystem>();
    for (int k = 1; k <= n; ++k) {
      sys->xi.push_back(build_xi(n, k));
      sys->xi_prime.push_back(build_xi_prime(n, k));
    }
    it = cache.emplace(n, std::move(sys)).first;
  }
  return *it->second;
}

}  // namespace

AffineForm phi_mu(const AdmissiblePattern& mu, Rank n) { return phi_impl(mu, n, false); }

AffineForm phi_prime_mu(const AdmissiblePattern& mu, Rank n) { return phi_impl(mu, n, true); }

const std::vector<AffineForm>& xi_set(Rank n, int k) {
  require_rank(n, 3);
  if (k < 1 || k > n) throw std::invalid_argument("xi index out of range");
  return forms(n).xi[k - 1];
}

const std::vector<AffineForm>& xi_prime_set(Rank n, int k) {
  require_rank(n, 3);
  if (k < 1 || k > n) throw std::invalid_argument("xi index out of range");
  return forms(n).xi_prime[k - 1];
}

bool membership_polyhedral(Rank n, const DominantWeight& lambda, const LatticePoint& x) {
  for (int k = 1; k <= n; ++k) {
    for (const AffineForm& f : xi_set(n, k))
      if (evaluate(f, lambda, x) < 0) return false;
    long long gate = lambda.at(k);
    for (const AffineForm& g : xi_prime_set(n, k))
      if (gate + evaluate(g, lambda, x) < 0) return false;
  }
  return true;
}

}  // namespace dncrystal
