#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace thetaconf {

inline constexpr std::size_t kDefaultMorphismCap = 1'000'000;

/// Weakly monotone map [source] -> [target] of finite ordinals, stored as its
/// value sequence f(0), ..., f(source).
struct DeltaMorphism {
  int source = 0;
  int target = 0;
  std::vector<int> values{0};

  static DeltaMorphism identity(int rank);

  int operator()(int i) const { return values.at(static_cast<std::size_t>(i)); }

  friend auto operator<=>(const DeltaMorphism&, const DeltaMorphism&) = default;
  friend bool operator==(const DeltaMorphism&, const DeltaMorphism&) = default;
};

/// Validating constructor.
DeltaMorphism make_delta(int source, int target, std::vector<int> values);

/// g after f.
DeltaMorphism delta_compose(const DeltaMorphism& g, const DeltaMorphism& f);

/// All monotone maps [s] -> [t] in lexicographic order of value sequences.
std::vector<DeltaMorphism> enumerate_delta(int s, int t,
                                           std::size_t cap = kDefaultMorphismCap);

/// Sorted subset of {0, ..., size-1}.
using ElementSet = std::vector<std::size_t>;

/// Morphism of Segal's category: every source element goes to a subset of
/// the target, images pairwise disjoint. Finite sets are ordered and their
/// elements addressed by 0-based position; the Segal set {1..t} corresponds
/// to positions 0..t-1.
class GammaMorphism {
 public:
  GammaMorphism() = default;
  /// Throws unless each image is a valid sorted subset and images are
  /// pairwise disjoint.
  GammaMorphism(std::size_t source_size, std::size_t target_size,
                std::vector<ElementSet> images);

  static GammaMorphism identity(std::size_t size);

  std::size_t source_size() const noexcept { return images_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }
  const ElementSet& image(std::size_t x) const { return images_.at(x); }
  const std::vector<ElementSet>& images() const noexcept { return images_; }

  friend auto operator<=>(const GammaMorphism&, const GammaMorphism&) = default;
  friend bool operator==(const GammaMorphism&, const GammaMorphism&) = default;

 private:
  std::size_t target_size_ = 0;
  std::vector<ElementSet> images_;
};

/// (phi . theta)(s) = union of phi(t) over t in theta(s).
GammaMorphism gamma_compose(const GammaMorphism& phi, const GammaMorphism& theta);

/// Images cover the whole target.
bool gamma_is_active(const GammaMorphism& theta);

/// Segal's functor: i -> { j : f(i-1) < j <= f(i) }.
GammaMorphism segal(const DeltaMorphism& f);

/// Every Gamma-morphism between sets of the given sizes (optionally only the
/// active ones), ordered lexicographically by the owner of each target
/// element.
std::vector<GammaMorphism> enumerate_gamma(std::size_t source_size,
                                           std::size_t target_size,
                                           bool active_only,
                                           std::size_t cap = kDefaultMorphismCap);

std::string to_string(const DeltaMorphism& f);
std::string to_string(const GammaMorphism& g);

}  // namespace thetaconf
