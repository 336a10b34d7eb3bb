#include <doctest.h>

#include "thetaconf/error.hpp"
#include "thetaconf/json_io.hpp"

using namespace thetaconf;
using thetaconf::json::json;

TEST_CASE("trees as JSON") {
  const auto t = parse_symbol("[2]([1],[0])", 2);
  CHECK(json::tree_to_json(t).dump() == "[[[]],[]]");
  CHECK(json::tree_from_json(json::json::parse("[[[]],[]]"), 2) == t);
  CHECK(json::parse_tree_any("[[[]],[]]", 2) == t);
  CHECK(json::parse_tree_any(" [ ]", 2) == parse_symbol("[0]", 2));
  CHECK(json::parse_tree_any("[2]([1],[0])", 2) == t);
  CHECK_THROWS_AS(json::parse_tree_any("[[[[]]]]", 2), Error);
  try {
    json::parse_tree_any("[[", 2);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  CHECK_THROWS_AS(json::tree_from_json(json::json::parse("[1]"), 2), Error);
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : enumerate_trees_up_to(5, n))
      CHECK(json::tree_from_json(json::tree_to_json(x), n) == x);
}

TEST_CASE("morphisms as JSON") {
  const auto d = make_delta(1, 2, {0, 2});
  CHECK(json::delta_from_json(json::to_json(d)) == d);
  const GammaMorphism g(2, 3, {{0, 2}, {}});
  CHECK(json::gamma_from_json(json::to_json(g)) == g);
  const auto named = json::to_json(g, {"a", "b"}, {"x", "y", "z"});
  CHECK(named["map"]["a"] == std::vector<std::string>{"x", "z"});
  CHECK(json::gamma_from_json(named) == g);
  const auto u = parse_symbol("[1]([2])", 2);
  const auto t = parse_symbol("[2]([1],[1])", 2);
  for (const auto& f : enumerate_hom_bruteforce(u, t, 2, false)) {
    const auto j = json::to_json(f);
    CHECK(j["n"] == 2);
    CHECK(j.contains("parts"));
    CHECK(json::theta_from_json(j) == f);
  }
  CHECK_THROWS_AS(json::delta_from_json(json::json::parse(R"({"s":1,"t":1,"values":[1,0]})")), Error);
  CHECK_THROWS_AS(json::gamma_from_json(json::json::parse(R"({"oops":1})")), Error);
}

TEST_CASE("orderings and labelled objects as JSON") {
  const auto s = parse_nordering("a 1 b 0 c", 2);
  const auto j = json::to_json(s);
  CHECK(j["labels"] == std::vector<std::string>{"a", "b", "c"});
  CHECK(j["word"] == std::vector<int>{1, 0});
  CHECK(j["n"] == 2);
  CHECK(json::nordering_from_json(j) == s);
  const auto obj = make_labelled(parse_symbol("[2]([0],[2])", 2), 2, {"p", "q"});
  CHECK(json::labelled_from_json(json::to_json(obj)) == obj);
}

TEST_CASE("homology and configurations as JSON") {
  HomologyResult h;
  h.betti = {1, 0};
  h.torsion = {{}, {BigInt(2), BigInt(1) << 80}};
  h.simplex_counts = {4, 4};
  h.euler = 0;
  const auto j = json::to_json(h);
  CHECK(j["betti"] == std::vector<int>{1, 0});
  CHECK(j["torsion"][1][0] == 2);
  CHECK(j["torsion"][1][1].is_string());
  CHECK(j["euler"] == 0);
  const auto phi = make_configuration(2, {"a"}, {{Rational(1, 3), Rational(2)}});
  const auto c = json::to_json(phi);
  CHECK(c["n"] == 2);
  CHECK(c["points"]["a"][0] == "1/3");
  CHECK(c["points"]["a"][1] == "2");
}
