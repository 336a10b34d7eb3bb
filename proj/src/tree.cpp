#include "thetaconf/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <utility>

#include "thetaconf/error.hpp"

namespace thetaconf {

PlanarLevelTree PlanarLevelTree::corolla(std::size_t count) {
  return PlanarLevelTree(std::vector<PlanarLevelTree>(count));
}

int PlanarLevelTree::height() const noexcept {
  int h = 0;
  for (const auto& c : children_) h = std::max(h, c.height() + 1);
  return h;
}

std::size_t PlanarLevelTree::edge_count() const noexcept {
  std::size_t e = children_.size();
  for (const auto& c : children_) e += c.edge_count();
  return e;
}

const PlanarLevelTree& PlanarLevelTree::at(const std::vector<int>& path) const {
  const PlanarLevelTree* v = this;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= v->child_count())
      throw_invalid("vertex path does not address a vertex of the tree");
    v = &v->children_[static_cast<std::size_t>(i)];
  }
  return *v;
}

std::string to_string(const LeafId& leaf) {
  std::string out = "(";
  for (std::size_t i = 0; i < leaf.path.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(leaf.path[i]);
  }
  return out + ")";
}

void require_height(const PlanarLevelTree& tree, int n) {
  if (n < 1) throw_invalid("height parameter n must be at least 1");
  if (tree.height() > n)
    throw_precondition("tree height " + std::to_string(tree.height()) +
                       " exceeds n = " + std::to_string(n));
}

namespace {

class SymbolParser {
 public:
  SymbolParser(std::string_view text, int n) : text_(text), n_(n) {}

  PlanarLevelTree parse() {
    PlanarLevelTree t = tree(0);
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing characters");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= text_.size())
        throw ParseError(pos_, std::string("unexpected end of input, expected '") +
                                   c + "'");
      throw ParseError(pos_, std::string("expected '") + c + "', found '" +
                                 text_[pos_] + "'");
    }
    ++pos_;
  }

  std::size_t natural() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > kMaxArity) throw ParseError(start, "arity too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected a natural number");
    return value;
  }

  // `level` is the level of the vertex being parsed.
  PlanarLevelTree tree(int level) {
    const std::size_t start = pos_;
    expect('[');
    const std::size_t s = natural();
    expect(']');
    if (s > 0 && level + 1 > n_)
      throw Error(ErrorCode::InvalidArgument,
                  "tree height exceeds n = " + std::to_string(n_) +
                      " (vertex at position " + std::to_string(start) + ")");
    if (!peek('(')) return PlanarLevelTree::corolla(s);
    const std::size_t list_pos = pos_;
    ++pos_;
    std::vector<PlanarLevelTree> children;
    children.push_back(tree(level + 1));
    while (peek(',')) {
      ++pos_;
      children.push_back(tree(level + 1));
    }
    expect(')');
    if (children.size() != s)
      throw ParseError(list_pos, "argument list has " +
                                     std::to_string(children.size()) +
                                     " entries but [" + std::to_string(s) +
                                     "] announces " + std::to_string(s));
    return PlanarLevelTree(std::move(children));
  }

  static constexpr std::size_t kMaxArity = 1'000'000;

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

void render_into(const PlanarLevelTree& t, std::string& out) {
  out += '[';
  out += std::to_string(t.child_count());
  out += ']';
  const bool corolla = std::all_of(t.children().begin(), t.children().end(),
                                   [](const auto& c) { return c.is_leaf(); });
  if (corolla) return;
  out += '(';
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    if (i) out += ',';
    render_into(t.child(i), out);
  }
  out += ')';
}

void collect_leaves(const PlanarLevelTree& t, int level, int n,
                    std::vector<int>& path, std::vector<LeafId>& out) {
  if (level == n) {
    out.push_back(LeafId{path});
    return;
  }
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_leaves(t.child(i), level + 1, n, path, out);
    path.pop_back();
  }
}

std::size_t count_leaves(const PlanarLevelTree& t, int level, int n) {
  if (level == n) return 1;
  std::size_t c = 0;
  for (const auto& ch : t.children()) c += count_leaves(ch, level + 1, n);
  return c;
}

bool healthy_from(const PlanarLevelTree& t, int level, int n) {
  if (level >= n) return true;
  if (level > 0 && t.is_leaf()) return false;
  return std::all_of(t.children().begin(), t.children().end(),
                     [&](const auto& c) { return healthy_from(c, level + 1, n); });
}

std::optional<PlanarLevelTree> prune(const PlanarLevelTree& t, int level, int n) {
  if (level == n) return PlanarLevelTree{};
  std::vector<PlanarLevelTree> kept;
  for (const auto& c : t.children())
    if (auto p = prune(c, level + 1, n)) kept.push_back(std::move(*p));
  if (kept.empty()) return std::nullopt;
  return PlanarLevelTree(std::move(kept));
}

using Memo = std::map<std::pair<std::size_t, int>, std::vector<PlanarLevelTree>>;

const std::vector<PlanarLevelTree>& trees_memo(std::size_t edges, int n, Memo& memo,
                                               Memo& forest_memo);

// Ordered forests of trees of height <= n whose total edge count, counting
// the edge to each forest root, is `edges`.
const std::vector<PlanarLevelTree>& forests_memo(std::size_t edges, int n,
                                                 Memo& memo, Memo& forest_memo) {
  auto key = std::make_pair(edges, n);
  if (auto it = forest_memo.find(key); it != forest_memo.end()) return it->second;
  std::vector<PlanarLevelTree> out;  // each forest stored as a tree's children
  if (edges == 0) {
    out.emplace_back();
  } else {
    for (std::size_t first = 0; first < edges; ++first) {
      const auto& heads = trees_memo(first, n, memo, forest_memo);
      const auto& tails = forests_memo(edges - 1 - first, n, memo, forest_memo);
      for (const auto& h : heads) {
        for (const auto& tail : tails) {
          std::vector<PlanarLevelTree> ch;
          ch.reserve(tail.child_count() + 1);
          ch.push_back(h);
          ch.insert(ch.end(), tail.children().begin(), tail.children().end());
          out.emplace_back(std::move(ch));
        }
      }
    }
  }
  return forest_memo.emplace(key, std::move(out)).first->second;
}

const std::vector<PlanarLevelTree>& trees_memo(std::size_t edges, int n, Memo& memo,
                                               Memo& forest_memo) {
  auto key = std::make_pair(edges, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<PlanarLevelTree> out;
  if (n <= 0) {
    if (edges == 0) out.emplace_back();
  } else {
    out = forests_memo(edges, n - 1, memo, forest_memo);
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

PlanarLevelTree parse_symbol(std::string_view text, int n) {
  if (n < 1) throw_invalid("height parameter n must be at least 1");
  return SymbolParser(text, n).parse();
}

std::string render_symbol(const PlanarLevelTree& tree, int n) {
  require_height(tree, n);
  std::string out;
  render_into(tree, out);
  return out;
}

std::vector<LeafId> level_n_leaves(const PlanarLevelTree& tree, int n) {
  require_height(tree, n);
  std::vector<LeafId> out;
  std::vector<int> path;
  collect_leaves(tree, 0, n, path, out);
  return out;
}

std::size_t count_level_n_leaves(const PlanarLevelTree& tree, int n) {
  require_height(tree, n);
  return count_leaves(tree, 0, n);
}

bool is_healthy(const PlanarLevelTree& tree, int n) {
  require_height(tree, n);
  return healthy_from(tree, 0, n);
}

int branching_level(const PlanarLevelTree& tree, int n, const LeafId& a,
                    const LeafId& b) {
  require_height(tree, n);
  if (a.level() != n || b.level() != n)
    throw_invalid("branching level is defined for level-n leaves only");
  if (a == b) throw_invalid("branching level of a leaf with itself");
  // Validates both paths.
  (void)tree.at(a.path);
  (void)tree.at(b.path);
  int k = 0;
  while (a.path[static_cast<std::size_t>(k)] == b.path[static_cast<std::size_t>(k)])
    ++k;
  return k;
}

PlanarLevelTree healthify(const PlanarLevelTree& tree, int n) {
  require_height(tree, n);
  auto p = prune(tree, 0, n);
  return p ? std::move(*p) : PlanarLevelTree{};
}

std::vector<PlanarLevelTree> enumerate_trees(std::size_t edges, int n) {
  if (n < 1) throw_invalid("height parameter n must be at least 1");
  Memo memo, forest_memo;
  return trees_memo(edges, n, memo, forest_memo);
}

std::vector<PlanarLevelTree> enumerate_trees_up_to(std::size_t max_edges, int n) {
  if (n < 1) throw_invalid("height parameter n must be at least 1");
  Memo memo, forest_memo;
  std::vector<PlanarLevelTree> out;
  for (std::size_t e = 0; e <= max_edges; ++e) {
    const auto& layer = trees_memo(e, n, memo, forest_memo);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace thetaconf
