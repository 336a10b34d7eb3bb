#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace thetaconf {

/// Rooted tree with ordered children. The root sits at level 0 and every
/// other vertex one level above its parent. The height bound `n` is not part
/// of the value: a tree of height n is also a tree of height n + k, so every
/// operation that depends on it takes n explicitly.
class PlanarLevelTree {
 public:
  PlanarLevelTree() = default;
  explicit PlanarLevelTree(std::vector<PlanarLevelTree> children)
      : children_(std::move(children)) {}

  /// Root with `count` childless children; the height-1 object "[count]".
  static PlanarLevelTree corolla(std::size_t count);

  const std::vector<PlanarLevelTree>& children() const noexcept {
    return children_;
  }
  const PlanarLevelTree& child(std::size_t i) const { return children_.at(i); }
  std::size_t child_count() const noexcept { return children_.size(); }
  bool is_leaf() const noexcept { return children_.empty(); }

  /// Maximum vertex level (0 for the root-only tree).
  int height() const noexcept;
  std::size_t edge_count() const noexcept;
  std::size_t vertex_count() const noexcept { return edge_count() + 1; }

  /// Vertex addressed by a root-to-vertex child-index path.
  const PlanarLevelTree& at(const std::vector<int>& path) const;

  friend bool operator==(const PlanarLevelTree&, const PlanarLevelTree&) = default;

 private:
  std::vector<PlanarLevelTree> children_;
};

/// Address of a vertex by its 0-based child-index path from the root. For
/// leaves at one common level, lexicographic order of paths is the planar
/// (left-to-right) order.
struct LeafId {
  std::vector<int> path;

  int level() const noexcept { return static_cast<int>(path.size()); }

  friend auto operator<=>(const LeafId&, const LeafId&) = default;
  friend bool operator==(const LeafId&, const LeafId&) = default;
};

std::string to_string(const LeafId& leaf);

/// Parses the bracket notation "[s](T_1,...,T_s)"; "[s]" alone stands for a
/// root with s childless children. Whitespace is ignored.
PlanarLevelTree parse_symbol(std::string_view text, int n);

/// Canonical bracket notation; parse_symbol inverts it.
std::string render_symbol(const PlanarLevelTree& tree, int n);

/// Leaves at level exactly n, in planar order.
std::vector<LeafId> level_n_leaves(const PlanarLevelTree& tree, int n);
std::size_t count_level_n_leaves(const PlanarLevelTree& tree, int n);

/// True iff no vertex at levels 1..n-1 is childless.
bool is_healthy(const PlanarLevelTree& tree, int n);

/// Level of the deepest common ancestor of two distinct level-n leaves.
int branching_level(const PlanarLevelTree& tree, int n, const LeafId& a,
                    const LeafId& b);

/// Subtree spanned by the root and the vertices with a level-n descendant.
PlanarLevelTree healthify(const PlanarLevelTree& tree, int n);

/// Every tree with exactly `edges` edges and height at most n, in a fixed
/// deterministic order.
std::vector<PlanarLevelTree> enumerate_trees(std::size_t edges, int n);

/// All trees with at most `max_edges` edges and height at most n.
std::vector<PlanarLevelTree> enumerate_trees_up_to(std::size_t max_edges, int n);

/// Throws unless n >= 1 and the tree fits in height n.
void require_height(const PlanarLevelTree& tree, int n);

}  // namespace thetaconf
