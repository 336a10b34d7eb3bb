#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "thetaconf/error.hpp"
#include "thetaconf/theta.hpp"
#include "thetaconf/verify.hpp"

using namespace thetaconf;

namespace {
PlanarLevelTree P(const char* s, int n) { return parse_symbol(s, n); }

ThetaMorphism level1(int s, int t, std::vector<int> v) {
  ThetaMorphism f;
  f.level = 1;
  f.delta = make_delta(s, t, std::move(v));
  return f;
}
}  // namespace

TEST_CASE("assembly of objects") {
  CHECK(assemble_object(P("[0]", 2), 2).empty());
  CHECK(assemble_object(P("[4]([2],[3],[0],[1])", 2), 2).size() == 6);
  CHECK(assemble_object(P("[3]", 1), 1).size() == 3);
}

TEST_CASE("assembly of level-one morphisms is the Segal functor") {
  const auto f = level1(1, 2, {0, 2});
  CHECK(assemble_morphism(f, P("[1]", 1), P("[2]", 1), 1) == GammaMorphism(1, 2, {{0, 1}}));
  CHECK(theta_is_active(f, P("[1]", 1), P("[2]", 1), 1));
  const auto g = level1(1, 2, {0, 1});
  CHECK(assemble_morphism(g, P("[1]", 1), P("[2]", 1), 1) == GammaMorphism(1, 2, {{0}}));
  CHECK_FALSE(theta_is_active(g, P("[1]", 1), P("[2]", 1), 1));
}

TEST_CASE("identity assembles to identity") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_trees_up_to(6, n)) {
      const auto id = identity_morphism(s, n);
      CHECK_NOTHROW(validate_morphism(id, s, s, n));
      CHECK(assemble_morphism(id, s, s, n) ==
            GammaMorphism::identity(count_level_n_leaves(s, n)));
    }
}

TEST_CASE("validation rejects mismatched morphisms") {
  const auto f = level1(1, 2, {0, 2});
  CHECK_THROWS_AS(validate_morphism(f, P("[2]", 1), P("[2]", 1), 1), Error);
  CHECK_THROWS_AS(validate_morphism(f, P("[1]([1])", 2), P("[2]([1],[1])", 2), 2), Error);
}

TEST_CASE("hom counts agree with the wreath product formula") {
  for (int n = 1; n <= 3; ++n) {
    const auto trees = enumerate_trees_up_to(n == 1 ? 6 : 4, n);
    for (const auto& s : trees)
      for (const auto& t : trees)
        CHECK(enumerate_hom_bruteforce(s, t, n, false).size() == oracle::hom_count(s, t, n));
  }
  CHECK(enumerate_hom_bruteforce(P("[0]", 1), P("[0]", 1), 1, false).size() == 1);
  CHECK(enumerate_hom_bruteforce(P("[1]", 1), P("[1]", 1), 1, false).size() == 3);
  CHECK(enumerate_hom_bruteforce(P("[1]", 1), P("[1]", 1), 1, true).size() == 1);
}

TEST_CASE("active level-one morphisms fix both endpoints") {
  for (int s = 1; s <= 5; ++s)
    for (int t = 0; t <= 5; ++t) {
      const auto active = enumerate_hom_bruteforce(PlanarLevelTree::corolla(s),
                                                   PlanarLevelTree::corolla(t), 1, true);
      CHECK(active.size() == oracle::binomial(t + s - 1, s - 1));
      for (const auto& f : active) {
        CHECK(f.delta(0) == 0);
        CHECK(f.delta(s) == t);
      }
    }
}

TEST_CASE("the morphism U -> T") {
  // U = [1]([2]) with leaves a, b; T = [2]([1],[1]) with leaves b, a.
  const auto u = P("[1]([2])", 2);
  const auto t = P("[2]([1],[1])", 2);
  const GammaMorphism swap(2, 2, {{1}, {0}});
  const GammaMorphism keep = GammaMorphism::identity(2);
  CHECK(branching_condition_holds(u, t, 2, swap));
  CHECK(branching_condition_holds(u, t, 2, keep));
  const auto f = lift_active(u, t, 2, swap);
  CHECK(f.delta == make_delta(1, 2, {0, 2}));
  CHECK(assemble_morphism(f, u, t, 2) == swap);
  // V = U with the labels swapped has the same shape, so U -> V means
  // sending a, b to the second and first leaves of U, which reverses the
  // order at equal branching level.
  CHECK_FALSE(branching_condition_holds(u, u, 2, swap));
  CHECK_THROWS_AS(lift_active(u, u, 2, swap), LiftError);
  std::size_t hits = 0;
  for (const auto& g : enumerate_hom_bruteforce(u, t, 2, true))
    if (assemble_morphism(g, u, t, 2) == swap) ++hits;
  CHECK(hits == 1);
}

TEST_CASE("lift at level one inverts Segal") {
  const auto f = lift_active(P("[1]", 1), P("[2]", 1), 1, GammaMorphism(1, 2, {{0, 1}}));
  CHECK(f.delta == make_delta(1, 2, {0, 2}));
  CHECK(lift_active(P("[2]", 1), P("[2]", 1), 1, GammaMorphism::identity(2)) ==
        identity_morphism(P("[2]", 1), 1));
}

TEST_CASE("lift reports why it fails") {
  const auto u = P("[1]([2])", 2);
  try {
    lift_active(u, P("[3]", 2), 2, GammaMorphism(2, 0, {{}, {}}));
    FAIL("expected LiftError");
  } catch (const LiftError& e) {
    CHECK(e.reason() == LiftFailure::UnhealthyTarget);
  }
  try {
    lift_active(u, P("[1]([3])", 2), 2, GammaMorphism(2, 3, {{0}, {1}}));
    FAIL("expected LiftError");
  } catch (const LiftError& e) {
    CHECK(e.reason() == LiftFailure::Inactive);
  }
  try {
    lift_active(u, u, 2, GammaMorphism(2, 2, {{1}, {0}}));
    FAIL("expected LiftError");
  } catch (const LiftError& e) {
    CHECK(e.reason() == LiftFailure::BranchingCondition);
  }
}

TEST_CASE("identity on healthy trees lifts to identity") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_trees_up_to(6, n)) {
      if (!is_healthy(s, n)) continue;
      const auto id = GammaMorphism::identity(count_level_n_leaves(s, n));
      CHECK(branching_condition_holds(s, s, n, id));
      CHECK(lift_active(s, s, n, id) == identity_morphism(s, n));
    }
}

TEST_CASE("composition laws and functoriality of assembly") {
  for (int n = 1; n <= 3; ++n) {
    const auto trees = enumerate_trees_up_to(3, n);
    for (const auto& a : trees)
      for (const auto& b : trees)
        for (const auto& c : trees)
          for (const auto& f : enumerate_hom_bruteforce(a, b, n, false))
            for (const auto& g : enumerate_hom_bruteforce(b, c, n, false)) {
              const auto gf = theta_compose(g, f);
              CHECK_NOTHROW(validate_morphism(gf, a, c, n));
              CHECK(assemble_morphism(gf, a, c, n) ==
                    gamma_compose(assemble_morphism(g, b, c, n), assemble_morphism(f, a, b, n)));
            }
  }
  const auto u = P("[1]([2])", 2);
  const auto t = P("[2]([1],[1])", 2);
  const auto f = lift_active(u, t, 2, GammaMorphism(2, 2, {{1}, {0}}));
  CHECK(theta_compose(identity_morphism(t, 2), f) == f);
  CHECK(theta_compose(f, identity_morphism(u, 2)) == f);
}

TEST_CASE("active bijection on all small pairs") {
  for (int n = 1; n <= 3; ++n) {
    const auto trees = enumerate_trees_up_to(4, n);
    for (const auto& s : trees)
      for (const auto& t : trees) {
        if (!is_healthy(t, n)) continue;
        const auto st = check_active_bijection(s, t, n, kDefaultMorphismCap);
        CHECK_MESSAGE(st.failure.empty(), st.failure);
        CHECK(st.active == st.branching_maps);
      }
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_hom_bruteforce(P("[6]", 1), P("[6]", 1), 1, false, 10), Error);
}
