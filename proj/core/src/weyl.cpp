#include "dncrystal/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace dncrystal {

using boost::multiprecision::cpp_int;

unsigned long long weyl_dim(Rank n, const DominantWeight& lambda) {
  require_rank(n, 2);
  if (lambda.rank() != n) throw std::invalid_argument("weight rank mismatch");

  // Doubled epsilon-coordinates of lambda + rho and of rho, so the half
  // integers of the spin weights stay integral.  rho = (n-1, ..., 1, 0).
  std::vector<long long> d(n + 1, 0), r(n + 1, 0);
  for (int a = 1; a <= n; ++a) {
    long long v = 0;
    if (a <= n - 1) {
      for (int k = std::max(a, 1); k <= n - 2; ++k) v += 2 * lambda.at(k);
      v += lambda.at(n - 1) + lambda.at(n);
    } else {
      v = lambda.at(n) - lambda.at(n - 1);
    }
    r[a] = 2 * (n - a);
    d[a] = v + r[a];
  }

  cpp_int num = 1, den = 1;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      num *= cpp_int(d[a] - d[b]) * cpp_int(d[a] + d[b]);
      den *= cpp_int(r[a] - r[b]) * cpp_int(r[a] + r[b]);
    }
  }
  cpp_int q, rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  if (rem != 0) throw std::logic_error("Weyl dimension product is not integral");
  if (q <= 0 || q > cpp_int(std::numeric_limits<unsigned long long>::max()))
    throw std::overflow_error("Weyl dimension out of 64-bit range");
  return static_cast<unsigned long long>(q);
}

}  // namespace dncrystal
