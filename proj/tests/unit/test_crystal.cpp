#include <doctest.h>

#include "dncrystal/coincidence.hpp"
#include "dncrystal/crystal.hpp"
#include "dncrystal/weyl.hpp"
#include "support/crystal_axioms.hpp"

using namespace dncrystal;

TEST_CASE("Cartan matrix of the fork") {
  CHECK(cartan(4, 3, 4) == 0);
  CHECK(cartan(4, 2, 4) == -1);
  CHECK(cartan(4, 4, 2) == -1);
  for (int i = 1; i <= 4; ++i) CHECK(cartan(4, i, i) == 2);
  std::vector<int> row1;
  for (int j = 1; j <= 4; ++j) row1.push_back(cartan(4, 1, j));
  CHECK(row1 == std::vector<int>{2, -1, 0, 0});
  // D_3 is the three-node chain centered at node 1.
  CHECK(cartan(3, 1, 2) == -1);
  CHECK(cartan(3, 1, 3) == -1);
  CHECK(cartan(3, 2, 3) == 0);
  CHECK_THROWS_AS(cartan(4, 0, 1), std::invalid_argument);
}

TEST_CASE("positions and letters along the reduced word") {
  for (int n : {3, 5, 8}) {
    for (int m = 1; m <= num_positions(n); ++m) {
      VarIndex v = var_at_position(n, m);
      CHECK(v.in_range(n));
      CHECK(v.position(n) == m);
      CHECK(letter_at(n, m) == v.row);
    }
  }
}

TEST_CASE("weight and string statistics at simple points") {
  int n = 4;
  LatticePoint zero = LatticePoint::zero(n);
  DominantWeight lm = DominantWeight::fundamental(n, 1);
  CHECK(weight(n, lm, zero) == lm.coeffs);
  for (int i = 1; i <= n; ++i) {
    CHECK(weight_i(n, lm, zero, i) == lm.at(i));
    CHECK(epsilon(n, zero, i) == 0);
  }
  LatticePoint e11 = zero;
  e11.at({1, 1}) = 1;
  CHECK(weight_i(n, lm, e11, 1) == -1);
  CHECK(epsilon(n, e11, 1) == 1);
  CHECK(phi(n, lm, e11, 1) == 0);
}

TEST_CASE("single lowering steps from the highest weight point") {
  int n = 4;
  DominantWeight lm = DominantWeight::fundamental(n, 1);
  LatticePoint zero = LatticePoint::zero(n);

  auto down = apply_f(n, lm, zero, 1);
  REQUIRE(down.has_value());
  LatticePoint e11 = LatticePoint::zero(n);
  e11.at({1, 1}) = 1;
  CHECK(*down == e11);

  CHECK_FALSE(apply_f(n, lm, zero, 2).has_value());
  for (int i = 1; i <= n; ++i) {
    CHECK_FALSE(apply_e(n, lm, zero, i).has_value());
    CHECK_FALSE(apply_e(n, DominantWeight({1, 0, 2, 1}), zero, i).has_value());
  }
}

TEST_CASE("multi-step raising agrees with iterated raising") {
  int n = 4;
  DominantWeight lm = DominantWeight({2, 0, 0, 0});
  LatticePoint zero = LatticePoint::zero(n);
  auto one = apply_f(n, lm, zero, 1);
  REQUIRE(one.has_value());
  auto two = apply_f(n, lm, *one, 1);
  REQUIRE(two.has_value());
  auto back = apply_e_power(n, lm, *two, 1, 2);
  REQUIRE(back.has_value());
  CHECK(back->is_zero());
  CHECK(apply_e_power(n, lm, *two, 1, 0) == *two);

  // steps = 1 specializes to the single-step operator on every node of a
  // generated crystal.
  CrystalGraph g = generate(4, DominantWeight({0, 2, 0, 0}));
  std::size_t compared = 0;
  for (const LatticePoint& x : g.nodes) {
    for (int i = 1; i <= 4; ++i) {
      CHECK(apply_e_power(4, g.lambda, x, i, 1) == apply_e(4, g.lambda, x, i));
      ++compared;
    }
  }
  CHECK(compared >= 200);
}

TEST_CASE("decoration membership matches the polyhedral system on a box") {
  int n = 4;
  CHECK(membership_decoration(n, DominantWeight::zero(n), LatticePoint::zero(n)));
  CHECK(membership_decoration(n, DominantWeight({1, 2, 0, 1}), LatticePoint::zero(n)));

  // Only the origin survives for the trivial weight.
  auto members = enumerate_members_decoration(n, DominantWeight::zero(n), 4);
  REQUIRE(members.size() == 1);
  CHECK(members[0].is_zero());

  for (int k = 1; k <= n; ++k) {
    DominantWeight lm = DominantWeight::fundamental(n, k);
    CHECK(enumerate_members_decoration(n, lm, 4) == enumerate_members_polyhedral(n, lm, 4));
  }
}

TEST_CASE("generation counts against the dimension oracle") {
  CHECK(generate(4, DominantWeight::zero(4)).nodes.size() == 1);
  CHECK(generate(4, DominantWeight::zero(4)).edges.empty());
  CHECK(generate(4, DominantWeight::fundamental(4, 1)).nodes.size() == weyl_dim(4, DominantWeight::fundamental(4, 1)));
  CHECK(generate(4, DominantWeight::fundamental(4, 4)).nodes.size() == weyl_dim(4, DominantWeight::fundamental(4, 4)));
}

TEST_CASE("node budget overruns carry the partial count") {
  try {
    generate(4, DominantWeight::fundamental(4, 2), 5);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.partial_count == 6);
  }
}

TEST_CASE("crystal axioms on small graphs") {
  for (int k : {1, 3}) {
    CrystalGraph g = generate(4, DominantWeight::fundamental(4, k));
    auto rep = testing::check_axioms(g);
    INFO(rep.first_failure);
    CHECK(rep.ok());
  }
}

TEST_CASE("BFS closure equals the membership set inside the box") {
  DominantWeight lm = DominantWeight::fundamental(4, 3);
  CrystalGraph g = generate(4, lm);
  long long bound = coincidence_box_bound(4, lm);
  CHECK(g.nodes == enumerate_members_decoration(4, lm, bound));
}

TEST_CASE("graph exports are deterministic") {
  CrystalGraph g0 = generate(4, DominantWeight::zero(4));
  CHECK(to_json(g0) ==
        "{\"edges\":[],\"lambda\":[0,0,0,0],\"n\":4,\"nodes\":[{\"id\":0,\"wt\":[0,0,0,0],"
        "\"x\":[0,0,0,0,0,0,0,0,0,0,0,0]}]}");
  CHECK(to_dot(g0) == "digraph crystal {\n  rankdir=TB;\n  0;\n}\n");

  DominantWeight lm = DominantWeight::fundamental(4, 1);
  CHECK(to_json(generate(4, lm)) == to_json(generate(4, lm)));

  CrystalGraph g = generate(4, lm);
  std::string text = to_text(g);
  CHECK(text.find("nodes=8") != std::string::npos);
  std::string dot = to_dot(g);
  CHECK(dot.find("[label=\"1\"]") != std::string::npos);
}
