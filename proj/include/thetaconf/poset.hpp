#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace thetaconf {

/// Finite poset on {0, ..., size-1} stored as a dense relation matrix.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::size_t size,
              const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const noexcept { return size_; }
  bool leq(std::size_t i, std::size_t j) const { return rel_[i * size_ + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  /// Elements strictly above i, ascending by index.
  const std::vector<std::size_t>& above(std::size_t i) const { return above_.at(i); }

  /// Reflexive, antisymmetric, transitive.
  bool is_partial_order() const;

  /// Pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Same relation with elements renumbered: new index k is old element
  /// perm[k].
  FinitePoset permuted(const std::vector<std::size_t>& perm) const;

 private:
  std::size_t size_ = 0;
  std::vector<char> rel_;
  std::vector<std::vector<std::size_t>> above_;
};

}  // namespace thetaconf
