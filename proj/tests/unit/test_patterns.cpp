#include <doctest.h>

#include <set>

#include "dncrystal/patterns.hpp"

using namespace dncrystal;

namespace {

AffineForm form_of(std::initializer_list<std::pair<VarIndex, long long>> terms) {
  FormBuilder b;
  for (const auto& [v, c] : terms) b.add_var(v, c);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("pattern counts and the rank-4 list") {
  for (int n = 2; n <= 10; ++n)
    CHECK(enumerate_patterns(n).size() == (1u << (n - 1)) - 1);

  std::vector<AdmissiblePattern> expected = {{3, 2, 1}, {3, 2}, {3, 1}, {3}, {2, 1}, {2}, {1}};
  CHECK(enumerate_patterns(4) == expected);
  CHECK(enumerate_patterns(2) == std::vector<AdmissiblePattern>{{1}});
  CHECK_THROWS_AS(enumerate_patterns(1), std::invalid_argument);
}

TEST_CASE("map_F reproduces the worked images") {
  CHECK(map_F({4, 3, 1}, 5) == Label{{1, 1, 2, 2}});
  CHECK(map_F({3, 2}, 5) == Label{{2, 2, 2, 3}});
  CHECK(map_F({3, 2, 1}, 4) == Label{{1, 1, 1}});
  CHECK(to_string(map_F({3, 2}, 5)) == "(2,2,2,3)");
}

TEST_CASE("spin forms at rank 4") {
  // Odd-column swap for phi', none for phi in column 1.
  CHECK(phi_prime_mu({1}, 4) == form_of({{{2, 1}, 1}, {{4, 1}, -1}}));
  CHECK(phi_mu({1}, 4) == form_of({{{2, 1}, 1}, {{3, 1}, -1}}));
  // The extra tail term appears exactly when mu_l >= 2.
  CHECK(phi_prime_mu({3}, 4) == form_of({{{3, 1}, 1}, {{1, 3}, -1}}));
  CHECK(phi_prime_mu({3}, 4).coeff({3, 1}) == 1);
  CHECK(phi_mu({3}, 4) == form_of({{{4, 1}, 1}, {{1, 3}, -1}}));
  // Telescoping of adjacent steps.
  CHECK(phi_mu({2, 1}, 4) == form_of({{{1, 2}, 1}, {{4, 2}, -1}}));
  CHECK(phi_mu({3, 2, 1}, 4) == form_of({{{3, 3}, -1}}));
  CHECK(phi_prime_mu({3, 2, 1}, 4) == form_of({{{4, 3}, -1}}));
}

TEST_CASE("spin form coefficients stay within the unit box") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& mu : enumerate_patterns(n)) {
      for (const AffineForm& f : {phi_mu(mu, n), phi_prime_mu(mu, n)}) {
        CHECK(f.is_lambda_free());
        for (const auto& [v, c] : f.terms) {
          CHECK(v.in_range(n));
          CHECK((c == 1 || c == -1));
        }
      }
    }
  }
}

TEST_CASE("inequality systems at rank 4") {
  CHECK(xi_set(4, 3) == std::vector<AffineForm>{AffineForm::variable({3, 3})});
  CHECK(xi_set(4, 4) == std::vector<AffineForm>{AffineForm::variable({4, 3})});
  CHECK(xi_prime_set(4, 1) == std::vector<AffineForm>{form_of({{{1, 1}, -1}})});
  CHECK(xi_set(4, 1).size() == 7);
  CHECK(xi_set(4, 2).size() == 6);

  std::set<AffineForm> expected_xi1 = {
      form_of({{{1, 1}, 1}}),
      form_of({{{2, 1}, 1}, {{1, 2}, -1}}),
      form_of({{{3, 1}, 1}, {{4, 1}, 1}, {{2, 2}, -1}}),
      form_of({{{2, 2}, 1}, {{3, 2}, -1}, {{4, 2}, -1}}),
      form_of({{{4, 1}, 1}, {{3, 2}, -1}}),
      form_of({{{3, 1}, 1}, {{4, 2}, -1}}),
      form_of({{{1, 3}, 1}, {{2, 3}, -1}}),
  };
  std::set<AffineForm> got(xi_set(4, 1).begin(), xi_set(4, 1).end());
  CHECK(got == expected_xi1);

  // |Xi_k| = 2n - k for the generic range.
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k <= n - 2; ++k)
      CHECK(xi_set(n, k).size() == static_cast<std::size_t>(2 * n - k));

  CHECK_THROWS_AS(xi_set(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(xi_set(4, 5), std::invalid_argument);
}

TEST_CASE("every inequality coefficient lies in {-1,0,1}") {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& set : {xi_set(n, k), xi_prime_set(n, k)}) {
        for (const AffineForm& f : set)
          for (const auto& [v, c] : f.terms) CHECK((c == 1 || c == -1));
      }
    }
  }
}

TEST_CASE("polyhedral membership at rank 4") {
  int n = 4;
  LatticePoint zero = LatticePoint::zero(n);
  CHECK(membership_polyhedral(n, DominantWeight::zero(n), zero));
  CHECK(membership_polyhedral(n, DominantWeight({2, 0, 1, 0}), zero));

  LatticePoint e11 = zero;
  e11.at({1, 1}) = 1;
  CHECK_FALSE(membership_polyhedral(n, DominantWeight::zero(n), e11));
  CHECK(membership_polyhedral(n, DominantWeight::fundamental(n, 1), e11));
}
