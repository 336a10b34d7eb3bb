#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thetaconf/poset.hpp"
#include "thetaconf/tree.hpp"

namespace thetaconf {

/// Finite label set. Labels are non-empty, distinct and free of whitespace
/// and commas so that the text forms stay unambiguous.
using LabelSet = std::vector<std::string>;

void validate_labels(const LabelSet& labels);

/// An n-ordering: a healthy tree of height n whose level-n leaves carry the
/// labels, encoded as the leaf labels in planar order plus the branching
/// levels b_i = b_S(a_i, a_{i+1}) of consecutive leaves.
struct NOrdering {
  int n = 1;
  std::vector<std::string> labels;
  std::vector<int> word;

  std::size_t size() const noexcept { return labels.size(); }

  friend auto operator<=>(const NOrdering&, const NOrdering&) = default;
  friend bool operator==(const NOrdering&, const NOrdering&) = default;
};

/// Validating constructor.
NOrdering make_nordering(int n, std::vector<std::string> labels, std::vector<int> word);

/// Text form: labels interleaved with the word, e.g. "a 0 b".
std::string to_text(const NOrdering& s);
NOrdering parse_nordering(std::string_view text, int n);

/// Branching level of the leaves at planar positions i != j: the minimum of
/// the word entries between them.
int branching_level(const NOrdering& s, std::size_t i, std::size_t j);

/// Healthy tree of height n whose planar leaf order carries s.labels.
PlanarLevelTree to_tree(const NOrdering& s);

/// Inverse of to_tree; the tree must be healthy with one leaf per label.
NOrdering from_tree(const PlanarLevelTree& tree, int n,
                    std::vector<std::string> labels);

/// Every n-ordering of A: label permutations in lexicographic order (of the
/// sorted labels), then words in lexicographic order.
std::vector<NOrdering> enumerate_nord(const LabelSet& labels, int n,
                                      std::size_t cap = 1'000'000);

/// r! * n^(r-1), and 1 for r <= 1.
std::size_t nord_count(std::size_t r, int n);

/// Branching condition for S -> T.
bool leq(const NOrdering& s, const NOrdering& t);

/// Edge count of the tree.
std::size_t degree(const NOrdering& s);

/// Relabelling by a permutation g of the label set.
using LabelPermutation = std::map<std::string, std::string>;
NOrdering sigma_act(const LabelPermutation& g, const NOrdering& s);

/// nOrd(A): the enumerated elements and their order relation.
struct PosetView {
  int n = 1;
  LabelSet labels;
  std::vector<NOrdering> elements;
  FinitePoset order;

  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    return order.covers();
  }
};

PosetView build_nord_poset(const LabelSet& labels, int n, std::size_t cap = 1'000'000);

/// Cover relation of the view.
std::vector<std::pair<std::size_t, std::size_t>> hasse(const PosetView& view);

}  // namespace thetaconf
