#include <doctest.h>

#include <set>

#include "dncrystal/coincidence.hpp"
#include "dncrystal/minors.hpp"

using namespace dncrystal;

TEST_CASE("spin monomials tropicalize to the spin linear forms") {
  for (int n = 3; n <= 6; ++n) {
    SpinIdentityReport rep = check_spin_identities(n);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
  }
}

TEST_CASE("coincidence for the trivial and vector weights at rank 4") {
  CoincidenceReport r0 = check_coincidence(4, DominantWeight::zero(4));
  CHECK(r0.success());
  CHECK(r0.count_bfs == 1);
  CHECK(r0.box_bound == 1);

  CoincidenceReport r1 = check_coincidence(4, DominantWeight::fundamental(4, 1));
  CHECK(r1.success());
  CHECK(r1.count_decoration == 8);
  CHECK(r1.count_polyhedral == 8);
  CHECK(r1.count_bfs == 8);
  CHECK(r1.weyl == 8);
  CHECK(r1.witnesses.empty());
}

TEST_CASE("report serialization is stable") {
  CoincidenceReport r = check_coincidence(4, DominantWeight::zero(4));
  CHECK(to_json(r) ==
        "{\"box_bound\":1,\"box_certified\":true,\"count_bfs\":1,\"count_decoration\":1,"
        "\"count_polyhedral\":1,\"lambda\":[0,0,0,0],\"n\":4,\"success\":true,"
        "\"weyl_dim\":1,\"witnesses\":[]}");
}

TEST_CASE("scan budget overruns are reported") {
  CHECK_THROWS_AS(
      enumerate_members_polyhedral(4, DominantWeight({2, 2, 2, 2}), 9, 50),
      BudgetExceeded);
}

TEST_CASE("the trivial weight keeps only the origin in any box") {
  auto members = enumerate_members_polyhedral(4, DominantWeight::zero(4), 4);
  REQUIRE(members.size() == 1);
  CHECK(members[0].is_zero());
}

TEST_CASE("map_F is a bijection onto the retained labels") {
  for (int n = 3; n <= 9; ++n) {
    std::set<Label> images;
    for (const auto& mu : enumerate_patterns(n)) images.insert(map_F(mu, n));
    CHECK(images.size() == enumerate_patterns(n).size());  // injective

    std::set<Label> targets;
    for (const Triangle& t : enumerate_triangles(n))
      if (!is_delta_low(t)) targets.insert(label(t));
    CHECK(images == targets);
  }
}
