#include "dncrystal/coincidence.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dncrystal/minors.hpp"
#include "dncrystal/weyl.hpp"

namespace dncrystal {

namespace {

// One inequality gate + f(x) >= 0 compiled to linear positions.
struct Constraint {
  long long gate = 0;
  std::vector<std::pair<int, long long>> terms;  // (position, coeff), position ascending
  int last_position = 0;
};

std::vector<Constraint> compile_constraints(
    Rank n, const std::vector<std::pair<const AffineForm*, long long>>& gated) {
  std::vector<Constraint> out;
  out.reserve(gated.size());
  for (const auto& [form, gate] : gated) {
    Constraint c;
    c.gate = gate;
    for (const auto& [v, coeff] : form->terms) c.terms.push_back({v.position(n), coeff});
    std::sort(c.terms.begin(), c.terms.end());
    c.last_position = c.terms.empty() ? 0 : c.terms.back().first;
    out.push_back(std::move(c));
  }
  return out;
}

// Depth-first scan of [0, bound)^N.  A branch dies as soon as a fully
// assigned constraint is negative or a partially assigned one cannot reach 0
// with its remaining positive capacity.
class BoxScanner {
 public:
  BoxScanner(Rank n, long long bound, std::vector<Constraint> cons, std::size_t budget)
      : n_(n), bound_(bound), cons_(std::move(cons)), budget_(budget) {
    int N = num_positions(n);
    touched_.assign(N + 1, {});
    completes_.assign(N + 1, {});
    for (std::size_t ci = 0; ci < cons_.size(); ++ci) {
      const Constraint& c = cons_[ci];
      for (const auto& [pos, coeff] : c.terms) touched_[pos].push_back({ci, coeff});
      if (c.last_position > 0) completes_[c.last_position].push_back(ci);
    }
    partial_.assign(cons_.size(), 0);
    capacity_.assign(cons_.size(), 0);
    for (std::size_t ci = 0; ci < cons_.size(); ++ci) {
      for (const auto& [pos, coeff] : cons_[ci].terms)
        if (coeff > 0) capacity_[ci] += coeff * (bound_ - 1);
      // Constraints with empty support must hold outright.
      if (cons_[ci].terms.empty() && cons_[ci].gate < 0)
        infeasible_ = true;
    }
  }

  std::vector<LatticePoint> run() {
    std::vector<LatticePoint> out;
    if (infeasible_) return out;
    point_ = LatticePoint::zero(n_);
    descend(1, out);
    return out;
  }

 private:
  void descend(int m, std::vector<LatticePoint>& out) {
    if (m > num_positions(n_)) {
      out.push_back(point_);
      return;
    }
    // Value window allowed by the constraints completed at this position.
    long long lo = 0, hi = bound_ - 1;
    for (std::size_t ci : completes_[m]) {
      long long coeff = 0;
      for (const auto& [pos, c] : cons_[ci].terms)
        if (pos == m) coeff = c;
      long long rest = cons_[ci].gate + partial_[ci];
      if (coeff > 0) {
        long long need = -rest;  // coeff * v >= need
        long long q = need <= 0 ? 0 : (need + coeff - 1) / coeff;
        lo = std::max(lo, q);
      } else if (coeff < 0) {
        if (rest < 0) return;  // cannot recover regardless of v
        hi = std::min(hi, rest / (-coeff));
      }
    }
    for (long long v = lo; v <= hi; ++v) {
      if (++visited_ > budget_) throw BudgetExceeded("box scan budget exceeded", visited_);
      bool ok = true;
      std::size_t applied = 0;
      for (; applied < touched_[m].size(); ++applied) {
        auto [ci, coeff] = touched_[m][applied];
        partial_[ci] += coeff * v;
        if (coeff > 0) capacity_[ci] -= coeff * (bound_ - 1);
        long long slack = cons_[ci].gate + partial_[ci] +
                          (cons_[ci].last_position <= m ? 0 : capacity_[ci]);
        if (slack < 0) {
          ++applied;
          ok = false;
          break;
        }
      }
      if (ok) {
        point_.at_position(m) = v;
        descend(m + 1, out);
        point_.at_position(m) = 0;
      }
      for (std::size_t u = 0; u < applied; ++u) {
        auto [ci, coeff] = touched_[m][u];
        partial_[ci] -= coeff * v;
        if (coeff > 0) capacity_[ci] += coeff * (bound_ - 1);
      }
    }
  }

  Rank n_;
  long long bound_;
  std::vector<Constraint> cons_;
  std::size_t budget_;
  std::size_t visited_ = 0;
  bool infeasible_ = false;
  std::vector<std::vector<std::pair<std::size_t, long long>>> touched_;
  std::vector<std::vector<std::size_t>> completes_;
  std::vector<long long> partial_;
  std::vector<long long> capacity_;
  LatticePoint point_;
};

std::vector<LatticePoint> scan(Rank n, long long bound, std::size_t budget,
                               const std::vector<std::pair<const AffineForm*, long long>>& gated) {
  if (bound < 1) throw std::invalid_argument("box bound must be positive");
  return BoxScanner(n, bound, compile_constraints(n, gated), budget).run();
}

}  // namespace

std::vector<LatticePoint> enumerate_members_decoration(Rank n, const DominantWeight& lambda,
                                                       long long bound, std::size_t budget) {
  const DecorationPieces& d = decoration(n);
  std::vector<std::pair<const AffineForm*, long long>> gated;
  for (int i = 1; i <= n; ++i) {
    for (const AffineForm& f : d.upper[i - 1].pieces) gated.push_back({&f, 0});
    for (const AffineForm& f : d.lower[i - 1].pieces) gated.push_back({&f, lambda.at(i)});
  }
  return scan(n, bound, budget, gated);
}

std::vector<LatticePoint> enumerate_members_polyhedral(Rank n, const DominantWeight& lambda,
                                                       long long bound, std::size_t budget) {
  std::vector<std::pair<const AffineForm*, long long>> gated;
  for (int k = 1; k <= n; ++k) {
    for (const AffineForm& f : xi_set(n, k)) gated.push_back({&f, 0});
    for (const AffineForm& f : xi_prime_set(n, k)) gated.push_back({&f, lambda.at(k)});
  }
  return scan(n, bound, budget, gated);
}

long long coincidence_box_bound(Rank n, const DominantWeight& lambda) {
  return 1 + lambda.total() * (2 * n - 3);
}

CoincidenceReport check_coincidence(Rank n, const DominantWeight& lambda,
                                    std::size_t node_budget, std::size_t scan_budget) {
  require_rank(n, 3);
  CoincidenceReport rep;
  rep.n = n;
  rep.lambda = lambda;
  rep.box_bound = coincidence_box_bound(n, lambda);

  std::vector<LatticePoint> dec =
      enumerate_members_decoration(n, lambda, rep.box_bound, scan_budget);
  std::vector<LatticePoint> poly =
      enumerate_members_polyhedral(n, lambda, rep.box_bound, scan_budget);
  CrystalGraph graph = generate(n, lambda, node_budget);
  std::vector<LatticePoint> bfs = graph.nodes;  // already lexicographically sorted

  rep.count_decoration = dec.size();
  rep.count_polyhedral = poly.size();
  rep.count_bfs = bfs.size();
  rep.weyl = weyl_dim(n, lambda);

  rep.box_certified = true;
  for (const LatticePoint& p : bfs)
    for (long long v : p.x)
      if (v < 0 || v >= rep.box_bound) rep.box_certified = false;

  auto collect_diff = [&rep](const std::vector<LatticePoint>& a,
                             const std::vector<LatticePoint>& b) {
    std::vector<LatticePoint> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    for (const LatticePoint& p : diff) {
      if (rep.witnesses.size() >= 10) break;
      if (std::find(rep.witnesses.begin(), rep.witnesses.end(), p) == rep.witnesses.end())
        rep.witnesses.push_back(p);
    }
  };
  collect_diff(dec, poly);
  collect_diff(dec, bfs);
  return rep;
}

std::string to_json(const CoincidenceReport& r) {
  std::ostringstream os;
  auto arr = [&os](const std::vector<long long>& v) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) os << ",";
      os << v[i];
    }
    os << "]";
  };
  os << "{\"box_bound\":" << r.box_bound << ",\"box_certified\":"
     << (r.box_certified ? "true" : "false") << ",\"count_bfs\":" << r.count_bfs
     << ",\"count_decoration\":" << r.count_decoration
     << ",\"count_polyhedral\":" << r.count_polyhedral << ",\"lambda\":";
  arr(r.lambda.coeffs);
  os << ",\"n\":" << r.n << ",\"success\":" << (r.success() ? "true" : "false")
     << ",\"weyl_dim\":" << r.weyl << ",\"witnesses\":[";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    if (i > 0) os << ",";
    arr(r.witnesses[i].x);
  }
  os << "]}";
  return os.str();
}

SpinIdentityReport check_spin_identities(Rank n) {
  require_rank(n, 3);
  std::map<Label, Triangle> by_label;
  for (const Triangle& t : enumerate_triangles(n)) by_label.emplace(label(t), t);

  SpinIdentityReport rep;
  for (const AdmissiblePattern& mu : enumerate_patterns(n)) {
    auto it = by_label.find(map_F(mu, n));
    bool good = it != by_label.end();
    if (good) {
      Monomial m = monomial(it->second, n);
      good = tropicalize(involution_bar(m, n), n) == phi_prime_mu(mu, n) &&
             tropicalize(involution_bar(involution_xi(m, n), n), n) == phi_mu(mu, n);
    }
    if (!good) {
      rep.ok = false;
      rep.failures.push_back(mu);
    }
  }
  return rep;
}

}  // namespace dncrystal
