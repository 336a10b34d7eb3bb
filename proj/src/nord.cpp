#include "thetaconf/nord.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "thetaconf/error.hpp"

namespace thetaconf {

void validate_labels(const LabelSet& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw_invalid("empty label");
    for (unsigned char ch : l)
      if (std::isspace(ch) || ch == ',')
        throw_invalid("label '" + l + "' contains whitespace or a comma");
    if (!seen.insert(l).second) throw_invalid("duplicate label '" + l + "'");
  }
}

NOrdering make_nordering(int n, std::vector<std::string> labels, std::vector<int> word) {
  if (n < 1) throw_invalid("height parameter n must be at least 1");
  validate_labels(labels);
  const std::size_t expected = labels.empty() ? 0 : labels.size() - 1;
  if (word.size() != expected)
    throw_invalid("branching word must have " + std::to_string(expected) + " entries");
  for (int b : word)
    if (b < 0 || b > n - 1)
      throw_invalid("branching level " + std::to_string(b) + " outside [0, " +
                    std::to_string(n - 1) + "]");
  return NOrdering{n, std::move(labels), std::move(word)};
}

std::string to_text(const NOrdering& s) {
  std::string out;
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    if (i) out += ' ' + std::to_string(s.word[i - 1]) + ' ';
    out += s.labels[i];
  }
  return out;
}

NOrdering parse_nordering(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (!tokens.empty() && tokens.size() % 2 == 0)
    throw ParseError(text.size(), "ordering text must alternate label and level");
  std::vector<std::string> labels;
  std::vector<int> word;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (k % 2 == 0) {
      labels.push_back(tokens[k]);
      continue;
    }
    const auto& t = tokens[k];
    if (t.empty() || !std::all_of(t.begin(), t.end(),
                                  [](unsigned char c) { return std::isdigit(c); }) ||
        t.size() > 6)
      throw ParseError(text.find(t), "expected a branching level, found '" + t + "'");
    word.push_back(std::stoi(t));
  }
  return make_nordering(n, std::move(labels), std::move(word));
}

int branching_level(const NOrdering& s, std::size_t i, std::size_t j) {
  if (i == j || i >= s.size() || j >= s.size())
    throw_invalid("branching level needs two distinct leaf positions");
  if (i > j) std::swap(i, j);
  return *std::min_element(s.word.begin() + static_cast<std::ptrdiff_t>(i),
                           s.word.begin() + static_cast<std::ptrdiff_t>(j));
}

namespace {

PlanarLevelTree build_from_paths(const std::vector<std::vector<int>>& paths,
                                 std::size_t begin, std::size_t end,
                                 std::size_t depth, std::size_t n) {
  if (depth == n) return PlanarLevelTree{};
  std::vector<PlanarLevelTree> children;
  std::size_t k = begin;
  while (k < end) {
    std::size_t m = k;
    while (m < end && paths[m][depth] == paths[k][depth]) ++m;
    children.push_back(build_from_paths(paths, k, m, depth + 1, n));
    k = m;
  }
  return PlanarLevelTree(std::move(children));
}

// Position of each label of `s` in the sorted label order of `universe`.
std::vector<std::size_t> rank_in(const NOrdering& s,
                                 const std::map<std::string, std::size_t>& universe) {
  std::vector<std::size_t> pos(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto it = universe.find(s.labels[i]);
    if (it == universe.end()) throw_invalid("label sets differ");
    pos[it->second] = i;
  }
  return pos;
}

// pos[x] = planar position of label x; levels[i][j] = branching level between
// positions i and j.
struct Encoded {
  std::vector<std::size_t> pos;
  std::vector<int> levels;
  std::size_t r;
  int level(std::size_t i, std::size_t j) const { return levels[i * r + j]; }
};

Encoded encode(const NOrdering& s, const std::map<std::string, std::size_t>& universe) {
  Encoded e{rank_in(s, universe), {}, s.size()};
  e.levels.assign(e.r * e.r, s.n);
  for (std::size_t i = 0; i < e.r; ++i) {
    int m = s.n;
    for (std::size_t j = i + 1; j < e.r; ++j) {
      m = std::min(m, s.word[j - 1]);
      e.levels[i * e.r + j] = m;
      e.levels[j * e.r + i] = m;
    }
  }
  return e;
}

bool leq_encoded(const Encoded& s, const Encoded& t) {
  for (std::size_t x = 0; x < s.r; ++x)
    for (std::size_t y = x + 1; y < s.r; ++y) {
      const int bs = s.level(s.pos[x], s.pos[y]);
      const int bt = t.level(t.pos[x], t.pos[y]);
      if (bt > bs) return false;
      if (bt == bs && (s.pos[x] < s.pos[y]) != (t.pos[x] < t.pos[y])) return false;
    }
  return true;
}

std::map<std::string, std::size_t> universe_of(const NOrdering& s) {
  std::map<std::string, std::size_t> u;
  for (const auto& l : s.labels) u.emplace(l, 0);
  std::size_t k = 0;
  for (auto& [l, idx] : u) idx = k++;
  return u;
}

}  // namespace

PlanarLevelTree to_tree(const NOrdering& s) {
  const std::size_t r = s.size();
  const auto n = static_cast<std::size_t>(s.n);
  if (r == 0) return PlanarLevelTree{};
  std::vector<std::vector<int>> paths(r, std::vector<int>(n, 0));
  for (std::size_t k = 1; k < r; ++k) {
    const auto b = static_cast<std::size_t>(s.word[k - 1]);
    std::copy_n(paths[k - 1].begin(), b, paths[k].begin());
    paths[k][b] = paths[k - 1][b] + 1;
  }
  return build_from_paths(paths, 0, r, 0, n);
}

NOrdering from_tree(const PlanarLevelTree& tree, int n, std::vector<std::string> labels) {
  if (!is_healthy(tree, n)) throw_precondition("n-orderings live on healthy trees");
  const auto leaves = level_n_leaves(tree, n);
  if (leaves.size() != labels.size())
    throw_invalid("tree has " + std::to_string(leaves.size()) + " level-n leaves but " +
                  std::to_string(labels.size()) + " labels were given");
  std::vector<int> word;
  for (std::size_t k = 1; k < leaves.size(); ++k)
    word.push_back(branching_level(tree, n, leaves[k - 1], leaves[k]));
  return make_nordering(n, std::move(labels), std::move(word));
}

std::size_t nord_count(std::size_t r, int n) {
  std::size_t c = 1;
  for (std::size_t k = 2; k <= r; ++k) c *= k;
  for (std::size_t k = 1; k < r; ++k) c *= static_cast<std::size_t>(n);
  return c;
}

std::vector<NOrdering> enumerate_nord(const LabelSet& labels, int n, std::size_t cap) {
  if (n < 1) throw_invalid("height parameter n must be at least 1");
  validate_labels(labels);
  const std::size_t r = labels.size();
  if (r > 12 || nord_count(r, n) > cap)
    throw_resource("nOrd(A) with |A| = " + std::to_string(r) + ", n = " +
                   std::to_string(n) + " exceeds cap of " + std::to_string(cap));
  LabelSet sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<NOrdering> out;
  out.reserve(nord_count(r, n));
  const std::size_t wlen = r == 0 ? 0 : r - 1;
  do {
    std::vector<int> word(wlen, 0);
    while (true) {
      out.push_back(NOrdering{n, sorted, word});
      std::size_t k = wlen;
      while (k > 0 && word[k - 1] == n - 1) word[--k] = 0;
      if (k == 0) break;
      ++word[k - 1];
    }
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

bool leq(const NOrdering& s, const NOrdering& t) {
  if (s.n != t.n) throw_invalid("orderings of different heights");
  if (s.size() != t.size()) throw_invalid("label sets differ");
  const auto u = universe_of(s);
  return leq_encoded(encode(s, u), encode(t, u));
}

std::size_t degree(const NOrdering& s) {
  if (s.labels.empty()) return 0;
  std::size_t e = static_cast<std::size_t>(s.n);
  for (int b : s.word) e += static_cast<std::size_t>(s.n - b);
  return e;
}

NOrdering sigma_act(const LabelPermutation& g, const NOrdering& s) {
  std::set<std::string> domain, image;
  for (const auto& [from, to] : g) {
    domain.insert(from);
    image.insert(to);
  }
  const std::set<std::string> mine(s.labels.begin(), s.labels.end());
  if (domain != mine || image != mine)
    throw_invalid("permutation is not a bijection of the label set");
  NOrdering out = s;
  for (auto& l : out.labels) l = g.at(l);
  return out;
}

PosetView build_nord_poset(const LabelSet& labels, int n, std::size_t cap) {
  PosetView view;
  view.n = n;
  view.labels = labels;
  std::sort(view.labels.begin(), view.labels.end());
  view.elements = enumerate_nord(labels, n, cap);
  std::map<std::string, std::size_t> u;
  for (std::size_t k = 0; k < view.labels.size(); ++k) u.emplace(view.labels[k], k);
  std::vector<Encoded> enc;
  enc.reserve(view.elements.size());
  for (const auto& e : view.elements) enc.push_back(encode(e, u));
  view.order = FinitePoset(view.elements.size(), [&](std::size_t i, std::size_t j) {
    return leq_encoded(enc[i], enc[j]);
  });
  return view;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const PosetView& view) {
  return view.covers();
}

}  // namespace thetaconf
