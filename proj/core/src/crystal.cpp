#include "dncrystal/crystal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dncrystal {

int cartan(Rank n, int i, int j) {
  require_rank(n, 2);
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("Cartan index out of range");
  if (i == j) return 2;
  if ((i == n - 1 && j == n) || (i == n && j == n - 1)) return 0;
  if (i - j == 1 || j - i == 1) return -1;
  if ((i == n - 2 && j == n) || (i == n && j == n - 2)) return -1;
  return 0;
}

long long weight_i(Rank n, const DominantWeight& lambda, const LatticePoint& x, int i) {
  long long s = 0;
  int N = num_positions(n);
  for (int m = 1; m <= N; ++m) s += cartan(n, letter_at(n, m), i) * x.at_position(m);
  return lambda.at(i) - s;
}

std::vector<long long> weight(Rank n, const DominantWeight& lambda, const LatticePoint& x) {
  std::vector<long long> wt(n);
  for (int i = 1; i <= n; ++i) wt[i - 1] = weight_i(n, lambda, x, i);
  return wt;
}

long long epsilon(Rank n, const LatticePoint& x, int i) {
  // max over positions m with letter i of (x_m + sum_{k>m} a_{i_k,i} x_k)
  long long best = std::numeric_limits<long long>::min();
  long long tail = 0;
  for (int m = num_positions(n); m >= 1; --m) {
    if (letter_at(n, m) == i) best = std::max(best, x.at_position(m) + tail);
    tail += cartan(n, letter_at(n, m), i) * x.at_position(m);
  }
  return best;
}

long long phi(Rank n, const DominantWeight& lambda, const LatticePoint& x, int i) {
  return weight_i(n, lambda, x, i) + epsilon(n, x, i);
}

bool membership_decoration(Rank n, const DominantWeight& lambda, const LatticePoint& x) {
  const DecorationPieces& d = decoration(n);
  for (int i = 1; i <= n; ++i) {
    for (const AffineForm& f : d.upper[i - 1].pieces)
      if (evaluate(f, lambda, x) < 0) return false;
    long long gate = lambda.at(i);
    for (const AffineForm& f : d.lower[i - 1].pieces)
      if (gate + evaluate(f, lambda, x) < 0) return false;
  }
  return true;
}

namespace {

// Signature values X_m = x_m + sum_{k<m} a_{i_k,i} x_k over the positions
// carrying letter i.  apply_e moves the last minimizer down, apply_f moves
// the first minimizer up; equivalently the raising step acts at the largest
// maximizer of the string statistic, the lowering step at the smallest.
struct Signature {
  std::vector<int> positions;
  std::vector<long long> values;
  int argmin_first = -1;
  int argmin_last = -1;
};

Signature signature(Rank n, const LatticePoint& x, int i) {
  Signature sig;
  long long prefix = 0;
  long long best = std::numeric_limits<long long>::max();
  for (int m = 1; m <= num_positions(n); ++m) {
    if (letter_at(n, m) == i) {
      long long v = x.at_position(m) + prefix;
      sig.positions.push_back(m);
      sig.values.push_back(v);
      if (v < best) {
        best = v;
        sig.argmin_first = m;
      }
      if (v <= best) sig.argmin_last = m;
    }
    prefix += cartan(n, letter_at(n, m), i) * x.at_position(m);
  }
  return sig;
}

std::optional<LatticePoint> gated(Rank n, const DominantWeight& lambda, LatticePoint y) {
  if (!membership_decoration(n, lambda, y)) return std::nullopt;
  return y;
}

}  // namespace

std::optional<LatticePoint> apply_f(Rank n, const DominantWeight& lambda, const LatticePoint& x,
                                    int i) {
  if (i < 1 || i > n) throw std::invalid_argument("operator index out of range");
  LatticePoint y = x;
  y.at_position(signature(n, x, i).argmin_first) += 1;
  return gated(n, lambda, std::move(y));
}

std::optional<LatticePoint> apply_e(Rank n, const DominantWeight& lambda, const LatticePoint& x,
                                    int i) {
  if (i < 1 || i > n) throw std::invalid_argument("operator index out of range");
  LatticePoint y = x;
  y.at_position(signature(n, x, i).argmin_last) -= 1;
  return gated(n, lambda, std::move(y));
}

std::optional<LatticePoint> apply_e_power(Rank n, const DominantWeight& lambda,
                                          const LatticePoint& x, int i, long long steps) {
  if (i < 1 || i > n) throw std::invalid_argument("operator index out of range");
  if (steps < 0) throw std::invalid_argument("step count must be nonnegative");
  if (steps == 0) return x;
  Signature sig = signature(n, x, i);
  int r = static_cast<int>(sig.positions.size());
  const long long inf = std::numeric_limits<long long>::max() / 4;
  // prefix_min[t] = min over u < t of (steps + X_u); suffix_min[t] = min over u >= t of X_u
  std::vector<long long> prefix_min(r + 1, inf), suffix_min(r + 1, inf);
  for (int t = 0; t < r; ++t)
    prefix_min[t + 1] = std::min(prefix_min[t], steps + sig.values[t]);
  for (int t = r - 1; t >= 0; --t)
    suffix_min[t] = std::min(suffix_min[t + 1], sig.values[t]);
  LatticePoint y = x;
  for (int t = 0; t < r; ++t) {
    long long before = std::min(prefix_min[t], suffix_min[t]);
    long long after = std::min(prefix_min[t + 1], suffix_min[t + 1]);
    y.at_position(sig.positions[t]) += before - after;
  }
  return gated(n, lambda, std::move(y));
}

CrystalGraph generate(Rank n, const DominantWeight& lambda, std::size_t node_budget) {
  require_rank(n, 3);
  if (lambda.rank() != n) throw std::invalid_argument("weight rank mismatch");

  LatticePoint origin = LatticePoint::zero(n);
  if (!membership_decoration(n, lambda, origin))
    throw std::logic_error("highest weight point rejected by the decoration");

  std::map<LatticePoint, int> ids;
  std::deque<const LatticePoint*> frontier;
  std::vector<CrystalEdge> edges;
  auto intern = [&](LatticePoint p) -> int {
    auto [it, inserted] = ids.emplace(std::move(p), static_cast<int>(ids.size()));
    if (inserted) {
      if (ids.size() > node_budget)
        throw BudgetExceeded("crystal node budget exceeded", ids.size());
      frontier.push_back(&it->first);
    }
    return it->second;
  };

  intern(origin);
  while (!frontier.empty()) {
    const LatticePoint* x = frontier.front();
    frontier.pop_front();
    int from = ids.at(*x);
    for (int i = 1; i <= n; ++i) {
      if (auto y = apply_f(n, lambda, *x, i)) {
        int to = intern(std::move(*y));
        edges.push_back({from, to, i});
      }
    }
  }

  // Renumber by lexicographic coordinate order (std::map iterates in order).
  CrystalGraph g;
  g.n = n;
  g.lambda = lambda;
  std::vector<int> remap(ids.size());
  int next = 0;
  for (const auto& [p, old_id] : ids) {
    remap[old_id] = next++;
    g.nodes.push_back(p);
    g.node_weights.push_back(weight(n, lambda, p));
  }
  for (CrystalEdge& e : edges) {
    e.from = remap[e.from];
    e.to = remap[e.to];
  }
  std::sort(edges.begin(), edges.end());
  g.edges = std::move(edges);
  return g;
}

namespace {

void append_int_array(std::ostringstream& os, const std::vector<long long>& v) {
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ",";
    os << v[i];
  }
  os << "]";
}

}  // namespace

std::string to_json(const CrystalGraph& g) {
  std::ostringstream os;
  os << "{\"edges\":[";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const CrystalEdge& e = g.edges[i];
    if (i > 0) os << ",";
    os << "{\"from\":" << e.from << ",\"i\":" << e.i << ",\"to\":" << e.to << "}";
  }
  os << "],\"lambda\":";
  append_int_array(os, g.lambda.coeffs);
  os << ",\"n\":" << g.n << ",\"nodes\":[";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (i > 0) os << ",";
    os << "{\"id\":" << i << ",\"wt\":";
    append_int_array(os, g.node_weights[i]);
    os << ",\"x\":";
    append_int_array(os, g.nodes[i].x);
    os << "}";
  }
  os << "]}";
  return os.str();
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) os << "  " << i << ";\n";
  for (const CrystalEdge& e : g.edges)
    os << "  " << e.from << " -> " << e.to << " [label=\"" << e.i << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_text(const CrystalGraph& g) {
  std::ostringstream os;
  os << "n=" << g.n << " lambda=";
  append_int_array(os, g.lambda.coeffs);
  os << " nodes=" << g.nodes.size() << " edges=" << g.edges.size() << "\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << i << ": x=";
    append_int_array(os, g.nodes[i].x);
    os << " wt=";
    append_int_array(os, g.node_weights[i]);
    os << "\n";
  }
  for (const CrystalEdge& e : g.edges)
    os << e.from << " -" << e.i << "-> " << e.to << "\n";
  return os.str();
}

}  // namespace dncrystal
