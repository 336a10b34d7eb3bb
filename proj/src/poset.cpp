#include "thetaconf/poset.hpp"

#include "thetaconf/error.hpp"

namespace thetaconf {

FinitePoset::FinitePoset(std::size_t size,
                         const std::function<bool(std::size_t, std::size_t)>& leq)
    : size_(size), rel_(size * size, 0), above_(size) {
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      rel_[i * size + j] = leq(i, j) ? 1 : 0;
      if (i != j && rel_[i * size + j]) above_[i].push_back(j);
    }
}

bool FinitePoset::is_partial_order() const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (!leq(i, i)) return false;
    for (std::size_t j : above_[i]) {
      if (leq(j, i)) return false;
      for (std::size_t k : above_[j])
        if (!leq(i, k)) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j : above_[i]) {
      bool cover = true;
      for (std::size_t k : above_[i])
        if (k != j && less(k, j)) {
          cover = false;
          break;
        }
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

FinitePoset FinitePoset::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != size_) throw_invalid("permutation size mismatch");
  return FinitePoset(size_, [&](std::size_t i, std::size_t j) {
    return leq(perm.at(i), perm.at(j));
  });
}

}  // namespace thetaconf
