#include <doctest.h>

#include <random>

#include "thetaconf/error.hpp"
#include "thetaconf/fox_neuwirth.hpp"
#include "thetaconf/nord.hpp"

using namespace thetaconf;

namespace {

NOrdering N(const char* text, int n) { return parse_nordering(text, n); }

Configuration C(int n, std::vector<std::string> labels, std::vector<std::vector<long long>> pts) {
  std::vector<Point> points;
  for (const auto& p : pts) {
    Point q;
    for (auto x : p) q.emplace_back(x);
    points.push_back(q);
  }
  return make_configuration(n, std::move(labels), std::move(points));
}

// Closed-cell membership read off the tree: for leaves x before y in S with
// branching level k, the first k coordinates agree and the next one of x is
// at most that of y.
bool in_cell_by_tree(const Configuration& phi, const NOrdering& s) {
  const auto tree = to_tree(s);
  const auto leaves = level_n_leaves(tree, s.n);
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const auto k = static_cast<std::size_t>(branching_level(tree, s.n, leaves[i], leaves[j]));
      const Point& x = phi.point(s.labels[i]);
      const Point& y = phi.point(s.labels[j]);
      for (std::size_t c = 0; c < k; ++c)
        if (x[c] != y[c]) return false;
      if (x[k] > y[k]) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("cell membership") {
  const auto phi = C(2, {"a", "b"}, {{0, 0}, {1, 5}});
  CHECK(in_cell(phi, N("a 0 b", 2)));
  const auto psi = C(2, {"a", "b"}, {{0, 0}, {0, 1}});
  CHECK(in_cell(psi, N("a 1 b", 2)));
  CHECK_FALSE(in_cell(psi, N("b 1 a", 2)));
  CHECK(in_cell(psi, N("a 0 b", 2)));
  CHECK(in_cell(C(2, {"a"}, {{3, 4}}), N("a", 2)));
  CHECK_THROWS_AS(in_cell(psi, N("a 0 b", 3)), Error);
}

TEST_CASE("classification") {
  CHECK(to_text(cell_of(C(2, {"a", "b"}, {{0, 0}, {0, 1}}))) == "a 1 b");
  CHECK(to_text(cell_of(C(2, {"a", "b"}, {{1, 0}, {0, 7}}))) == "b 0 a");
  CHECK(to_text(cell_of(C(2, {"a", "b", "c"}, {{5, 0}, {-1, 9}, {2, 2}}))) == "b 0 c 0 a");
  CHECK(to_text(cell_of(C(3, {"a", "b", "c"}, {{0, 1, 2}, {0, 1, 3}, {0, 0, 9}}))) ==
        "c 1 a 2 b");
  CHECK(to_text(cell_of(C(1, {"x"}, {{4}}))) == "x");
  CHECK(cell_of(C(2, {}, {})).size() == 0);
  CHECK_THROWS_AS(C(2, {"a", "b"}, {{1, 1}, {1, 1}}), Error);
}

TEST_CASE("point files") {
  const auto phi = parse_point_file("# two points\na 0 0\n\nb 0 1\n", 2);
  CHECK(to_text(cell_of(phi)) == "a 1 b");
  const auto exact = parse_point_file("a 1/3 0.5\nb -2/6 0.25\n", 2);
  CHECK(exact.point("a")[0] == Rational(1, 3));
  CHECK(exact.point("a")[1] == Rational(1, 2));
  CHECK(exact.point("b")[0] == Rational(-1, 3));
  CHECK(exact_rational(0.1) != Rational(1, 10));
  CHECK(exact_rational(0.1) == Rational(0.1));
  CHECK_THROWS_AS(parse_point_file("a 0 0\na 0 1\n", 2), Error);
  CHECK_THROWS_AS(parse_point_file("a 0 0\nb 0 0\n", 2), Error);
  CHECK_THROWS_AS(parse_point_file("a 0\n", 2), Error);
  CHECK_THROWS_AS(parse_point_file("a 1/0 0\n", 2), Error);
  CHECK_THROWS_AS(parse_point_file("a x 0\n", 2), ParseError);
  try {
    parse_point_file("a 0 0\nb zz 1\n", 2);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("witnesses") {
  const auto w = witness(N("a 0 b", 2));
  CHECK(cell_of(w) == N("a 0 b", 2));
  CHECK(w.point("a") == Point{0, 0});
  CHECK(w.point("b") == Point{1, 0});
  const auto v = witness(N("a 1 b", 2));
  CHECK(v.point("a") == Point{0, 0});
  CHECK(v.point("b") == Point{0, 1});
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_nord({"a", "b", "c", "d"}, n)) CHECK(cell_of(witness(s)) == s);
}

TEST_CASE("universal property against the tree-based membership test") {
  for (int n = 1; n <= 3; ++n) {
    const LabelSet labels{"a", "b", "c"};
    const auto all = enumerate_nord(labels, n);
    std::mt19937_64 rng(5);
    std::vector<Configuration> pts;
    for (const auto& s : all) pts.push_back(witness(s));
    for (int k = 0; k < 300; ++k) pts.push_back(sample(labels, n, rng, k % 2 ? 1 : 1000));
    for (const auto& s : all)
      for (int k = 0; k < 5; ++k) pts.push_back(sample_in_cell(s, rng, false));
    for (const auto& phi : pts) {
      const auto c = cell_of(phi);
      std::vector<NOrdering> containing;
      for (const auto& s : all) {
        const bool inside = in_cell_by_tree(phi, s);
        CHECK(in_cell(phi, s) == inside);
        CHECK(leq(c, s) == inside);
        if (inside) containing.push_back(s);
      }
      // c is the least cell containing phi.
      for (const auto& s : containing) CHECK(leq(c, s));
    }
  }
}

TEST_CASE("sampling") {
  const auto a = sample({"a", "b", "c"}, 2, 42);
  const auto b = sample({"a", "b", "c"}, 2, 42);
  CHECK(a.points == b.points);
  CHECK(cell_of(a).size() == 3);
  CHECK(sample({}, 2, 1).points.empty());
  CHECK(cell_of(sample({}, 2, 1)).size() == 0);
  std::mt19937_64 rng(1);
  for (const auto& s : enumerate_nord({"a", "b", "c"}, 3)) {
    CHECK(cell_of(sample_in_cell(s, rng, true)) == s);
    CHECK(in_cell(sample_in_cell(s, rng, false), s));
  }
}

TEST_CASE("functoriality of cells") {
  const auto u = N("a 1 b", 2), t = N("b 0 a", 2);
  CHECK(functoriality_check(u, t, 100, 3));
  CHECK(functoriality_check(u, u, 10, 3));
  CHECK_THROWS_AS(functoriality_check(t, u, 10, 3), Error);
  const auto view = build_nord_poset({"a", "b", "c"}, 3);
  for (std::size_t i = 0; i < view.elements.size(); ++i) {
    std::vector<NOrdering> targets;
    for (auto j : view.order.above(i)) targets.push_back(view.elements[j]);
    CHECK(functoriality_check(view.elements[i], targets, 20, i) == targets.size());
  }
}

TEST_CASE("open cells are convex") {
  const auto s = N("a 1 b", 2);
  const auto w = witness(s);
  CHECK(midpoint(w, w).points == w.points);
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : enumerate_nord({"a", "b", "c"}, n)) CHECK(convexity_probe(x, 100, 9));
}

TEST_CASE("closed cells are star-shaped about open-cell points but not convex") {
  // Two boundary points of C(a 0 b) whose midpoint is not a configuration.
  const auto s = N("a 0 b", 2);
  const auto phi = C(2, {"a", "b"}, {{0, 1}, {0, 0}});
  const auto psi = C(2, {"a", "b"}, {{0, 0}, {0, 1}});
  CHECK(in_cell(phi, s));
  CHECK(in_cell(psi, s));
  CHECK_THROWS_AS(midpoint(phi, psi), Error);
  // Midpoints between an open-cell point and any point of the closed cell
  // land in the open cell.
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : enumerate_nord({"a", "b", "c"}, n))
      for (int k = 0; k < 20; ++k) {
        const auto inner = sample_in_cell(x, rng, true);
        const auto edge = sample_in_cell(x, rng, false);
        CHECK(cell_of(midpoint(inner, edge)) == x);
      }
}

TEST_CASE("partition of configuration space") {
  CHECK(partition_check({"a", "b"}, 2, 1000, 1));
  CHECK(partition_check({"a", "b", "c"}, 3, 500, 2));
  CHECK(partition_check({"a"}, 2, 10, 3));
}

TEST_CASE("relabelling") {
  const LabelPermutation swap{{"a", "b"}, {"b", "a"}};
  const auto phi = C(2, {"a", "b"}, {{0, 0}, {0, 1}});
  CHECK(cell_of(relabel(swap, phi)) == sigma_act(swap, cell_of(phi)));
}
