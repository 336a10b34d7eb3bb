#include "thetaconf/fox_neuwirth.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "thetaconf/error.hpp"
#include "thetaconf/homology.hpp"

namespace thetaconf {

const Point& Configuration::point(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return points[k];
  throw_invalid("configuration has no point labelled '" + label + "'");
}

Configuration make_configuration(int n, std::vector<std::string> labels,
                                 std::vector<Point> points) {
  if (n < 1) throw_invalid("dimension n must be at least 1");
  validate_labels(labels);
  if (labels.size() != points.size()) throw_invalid("one point per label required");
  for (const auto& p : points)
    if (p.size() != static_cast<std::size_t>(n))
      throw_invalid("point with " + std::to_string(p.size()) + " coordinates in R^" +
                    std::to_string(n));
  std::set<Point> seen;
  for (std::size_t k = 0; k < points.size(); ++k)
    if (!seen.insert(points[k]).second)
      throw_invalid("configuration is not injective: '" + labels[k] +
                    "' coincides with another point");
  return Configuration{n, std::move(labels), std::move(points)};
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw_invalid("coordinate is not finite");
  int exp = 0;
  const double mant = std::frexp(value, &exp);
  // mant * 2^53 is an integer for every double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  Rational q(scaled);
  exp -= 53;
  const BigInt two_pow = BigInt(1) << std::abs(exp);
  if (exp >= 0) return q * Rational(two_pow);
  return q / Rational(two_pow);
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Rational parse_integer(std::string_view tok, std::size_t line) {
  std::string_view digits = tok;
  bool neg = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    neg = digits[0] == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits))
    throw ParseError(line, "bad integer '" + std::string(tok) + "' on line");
  const BigInt v{std::string(digits)};
  return Rational(neg ? BigInt(-v) : v);
}

Rational parse_coordinate(const std::string& tok, std::size_t line) {
  if (auto slash = tok.find('/'); slash != std::string::npos) {
    const Rational p = parse_integer(std::string_view(tok).substr(0, slash), line);
    const Rational q = parse_integer(std::string_view(tok).substr(slash + 1), line);
    if (q == 0) throw ParseError(line, "zero denominator on line");
    return p / q;
  }
  const std::string_view body =
      tok.size() > 0 && (tok[0] == '-' || tok[0] == '+') ? std::string_view(tok).substr(1)
                                                         : std::string_view(tok);
  if (all_digits(body)) return parse_integer(tok, line);
  char* end = nullptr;
  const double d = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || tok.empty())
    throw ParseError(line, "bad coordinate '" + tok + "' on line");
  return exact_rational(d);
}

}  // namespace

Configuration parse_point_file(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> labels;
  std::vector<Point> points;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string label;
    if (!(ls >> label) || label[0] == '#') continue;
    Point p;
    for (std::string tok; ls >> tok;) p.push_back(parse_coordinate(tok, lineno));
    if (p.size() != static_cast<std::size_t>(n))
      throw ParseError(lineno, "expected " + std::to_string(n) + " coordinates on line");
    labels.push_back(label);
    points.push_back(std::move(p));
  }
  return make_configuration(n, std::move(labels), std::move(points));
}

namespace {

std::vector<std::size_t> positions_in(const Configuration& phi, const NOrdering& s) {
  if (phi.n != s.n) throw_invalid("configuration and ordering have different n");
  if (phi.labels.size() != s.labels.size()) throw_invalid("label sets differ");
  std::vector<std::size_t> idx;
  idx.reserve(s.size());
  for (const auto& l : s.labels) {
    auto it = std::find(phi.labels.begin(), phi.labels.end(), l);
    if (it == phi.labels.end()) throw_invalid("label sets differ");
    idx.push_back(static_cast<std::size_t>(it - phi.labels.begin()));
  }
  return idx;
}

std::size_t leading_agreement(const Point& a, const Point& b) {
  std::size_t k = 0;
  while (k < a.size() && a[k] == b[k]) ++k;
  return k;
}

// Emits the leaves of `t` at depth n; each sibling group gets values drawn by
// `draw(count)`, which must return them in weakly increasing order.
template <class Draw>
void assign_coordinates(const PlanarLevelTree& t, int depth, int n, Point& prefix,
                        std::vector<Point>& out, Draw& draw) {
  if (depth == n) {
    out.push_back(prefix);
    return;
  }
  const auto values = draw(t.child_count(), depth + 1 == n);
  for (std::size_t j = 0; j < t.child_count(); ++j) {
    prefix.push_back(values[j]);
    assign_coordinates(t.child(j), depth + 1, n, prefix, out, draw);
    prefix.pop_back();
  }
}

}  // namespace

bool in_cell(const Configuration& phi, const NOrdering& s) {
  const auto idx = positions_in(phi, s);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    int level = s.n;
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      level = std::min(level, s.word[j - 1]);
      const Point& a = phi.points[idx[i]];
      const Point& b = phi.points[idx[j]];
      const auto k = static_cast<std::size_t>(level);
      for (std::size_t c = 0; c < k; ++c)
        if (a[c] != b[c]) return false;
      if (a[k] > b[k]) return false;
    }
  }
  return true;
}

NOrdering cell_of(const Configuration& phi) {
  std::vector<std::size_t> order(phi.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return phi.points[x] < phi.points[y]; });
  std::vector<std::string> labels;
  std::vector<int> word;
  for (std::size_t k = 0; k < order.size(); ++k) {
    labels.push_back(phi.labels[order[k]]);
    if (k == 0) continue;
    const auto agree = leading_agreement(phi.points[order[k - 1]], phi.points[order[k]]);
    if (agree == static_cast<std::size_t>(phi.n))
      throw_invalid("configuration is not injective");
    word.push_back(static_cast<int>(agree));
  }
  return make_nordering(phi.n, std::move(labels), std::move(word));
}

Configuration witness(const NOrdering& s) {
  auto draw = [](std::size_t count, bool) {
    std::vector<Rational> v;
    for (std::size_t j = 0; j < count; ++j) v.emplace_back(static_cast<long long>(j));
    return v;
  };
  std::vector<Point> pts;
  Point prefix;
  assign_coordinates(to_tree(s), 0, s.n, prefix, pts, draw);
  return make_configuration(s.n, s.labels, std::move(pts));
}

Configuration sample(const LabelSet& labels, int n, std::mt19937_64& rng,
                     std::int64_t range) {
  validate_labels(labels);
  if (range < 1) throw_invalid("sample range must be positive");
  std::uniform_int_distribution<std::int64_t> coord(-range, range);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts(labels.size());
    std::set<Point> seen;
    bool injective = true;
    for (auto& p : pts) {
      for (int i = 0; i < n; ++i) p.emplace_back(coord(rng));
      injective = injective && seen.insert(p).second;
    }
    if (injective) return make_configuration(n, labels, std::move(pts));
  }
  throw_resource("could not sample an injective configuration");
}

Configuration sample(const LabelSet& labels, int n, std::uint64_t seed,
                     std::int64_t range) {
  std::mt19937_64 rng(seed);
  return sample(labels, n, rng, range);
}

Configuration sample_in_cell(const NOrdering& s, std::mt19937_64& rng, bool interior) {
  const PlanarLevelTree tree = to_tree(s);
  std::uniform_int_distribution<int> narrow(-2, 2);
  std::uniform_int_distribution<std::int64_t> wide(-1000, 1000);
  std::uniform_int_distribution<int> halves(0, 1);
  // Ties among sibling leaves would make points coincide, so the deepest
  // level is always drawn strictly increasing.
  auto draw = [&](std::size_t count, bool deepest) {
    std::vector<Rational> v;
    if (interior || deepest) {
      std::set<std::int64_t> distinct;
      while (distinct.size() < count) distinct.insert(wide(rng));
      for (auto x : distinct) v.emplace_back(Rational(x) / 2);
    } else {
      for (std::size_t j = 0; j < count; ++j)
        v.emplace_back(Rational(narrow(rng)) + Rational(halves(rng)) / 2);
      std::sort(v.begin(), v.end());
    }
    return v;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    Point prefix;
    assign_coordinates(tree, 0, s.n, prefix, pts, draw);
    if (std::set<Point>(pts.begin(), pts.end()).size() == pts.size())
      return make_configuration(s.n, s.labels, std::move(pts));
  }
  throw_resource("could not sample an injective point of the cell");
}

Configuration midpoint(const Configuration& phi, const Configuration& psi) {
  if (phi.n != psi.n || phi.labels.size() != psi.labels.size())
    throw_invalid("configurations are not comparable");
  std::vector<Point> pts;
  for (std::size_t k = 0; k < phi.labels.size(); ++k) {
    const Point& a = phi.points[k];
    const Point& b = psi.point(phi.labels[k]);
    Point m;
    for (std::size_t i = 0; i < a.size(); ++i) m.push_back((a[i] + b[i]) / 2);
    pts.push_back(std::move(m));
  }
  return make_configuration(phi.n, phi.labels, std::move(pts));
}

Configuration relabel(const LabelPermutation& g, const Configuration& phi) {
  Configuration out = phi;
  for (auto& l : out.labels) {
    auto it = g.find(l);
    if (it == g.end()) throw_invalid("permutation does not cover label '" + l + "'");
    l = it->second;
  }
  return make_configuration(out.n, std::move(out.labels), std::move(out.points));
}

bool functoriality_check(const NOrdering& s, const NOrdering& t, std::size_t samples,
                         std::uint64_t seed) {
  return functoriality_check(s, std::vector<NOrdering>{t}, samples, seed) == 1;
}

std::size_t functoriality_check(const NOrdering& s, const std::vector<NOrdering>& targets,
                                std::size_t samples, std::uint64_t seed) {
  for (const auto& t : targets)
    if (!leq(s, t)) throw_precondition("functoriality check requires S <= T");
  std::mt19937_64 rng(seed);
  std::vector<Configuration> points{witness(s)};
  for (std::size_t k = 0; k < samples; ++k) points.push_back(sample_in_cell(s, rng, k % 2 == 0));
  for (const auto& phi : points)
    if (!in_cell(phi, s)) return SIZE_MAX;
  for (std::size_t j = 0; j < targets.size(); ++j)
    for (const auto& phi : points)
      if (!in_cell(phi, targets[j])) return j;
  return targets.size();
}

bool convexity_probe(const NOrdering& s, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Configuration w = witness(s);
  if (cell_of(midpoint(w, w)) != s) return false;
  for (std::size_t k = 0; k < samples; ++k) {
    const Configuration phi = sample_in_cell(s, rng, true);
    const Configuration psi = sample_in_cell(s, rng, true);
    Configuration mid;
    try {
      mid = midpoint(phi, psi);
    } catch (const Error&) {
      return false;  // left the configuration space
    }
    if (!in_cell(mid, s) || cell_of(mid) != s) return false;
  }
  return true;
}

bool partition_check(const LabelSet& labels, int n, std::size_t samples,
                     std::uint64_t seed) {
  const auto all = enumerate_nord(labels, n);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    // Alternate wide and narrow coordinate ranges; narrow ones produce the
    // coordinate ties that put points on lower-dimensional cells.
    const Configuration phi = sample(labels, n, rng, k % 2 == 0 ? 1'000'000 : 2);
    const NOrdering c = cell_of(phi);
    if (!in_cell(phi, c)) return false;
    for (const auto& s : all)
      if (in_cell(phi, s) != leq(c, s)) return false;
  }
  return true;
}

std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

}  // namespace thetaconf
