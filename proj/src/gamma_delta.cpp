#include "thetaconf/gamma_delta.hpp"

#include <algorithm>

#include "thetaconf/error.hpp"

namespace thetaconf {

DeltaMorphism DeltaMorphism::identity(int rank) {
  if (rank < 0) throw_invalid("ordinal rank must be non-negative");
  DeltaMorphism f;
  f.source = rank;
  f.target = rank;
  f.values.resize(static_cast<std::size_t>(rank) + 1);
  for (int i = 0; i <= rank; ++i) f.values[static_cast<std::size_t>(i)] = i;
  return f;
}

DeltaMorphism make_delta(int source, int target, std::vector<int> values) {
  if (source < 0 || target < 0) throw_invalid("ordinal rank must be non-negative");
  if (values.size() != static_cast<std::size_t>(source) + 1)
    throw_invalid("delta morphism needs source + 1 values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > target)
      throw_invalid("delta morphism value out of range");
    if (i > 0 && values[i - 1] > values[i])
      throw_invalid("delta morphism is not monotone");
  }
  DeltaMorphism f;
  f.source = source;
  f.target = target;
  f.values = std::move(values);
  return f;
}

DeltaMorphism delta_compose(const DeltaMorphism& g, const DeltaMorphism& f) {
  if (f.target != g.source)
    throw_invalid("delta morphisms are not composable");
  DeltaMorphism h;
  h.source = f.source;
  h.target = g.target;
  h.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) h.values[i] = g(f.values[i]);
  return h;
}

std::vector<DeltaMorphism> enumerate_delta(int s, int t, std::size_t cap) {
  if (s < 0 || t < 0) throw_invalid("ordinal rank must be non-negative");
  std::vector<DeltaMorphism> out;
  std::vector<int> v(static_cast<std::size_t>(s) + 1, 0);
  while (true) {
    if (out.size() >= cap)
      throw_resource("delta enumeration exceeds cap of " + std::to_string(cap));
    out.push_back(DeltaMorphism{s, t, v});
    // Next non-decreasing sequence in lexicographic order.
    int k = s;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == t) --k;
    if (k < 0) break;
    const int nv = v[static_cast<std::size_t>(k)] + 1;
    for (int i = k; i <= s; ++i) v[static_cast<std::size_t>(i)] = nv;
  }
  return out;
}

GammaMorphism::GammaMorphism(std::size_t source_size, std::size_t target_size,
                             std::vector<ElementSet> images)
    : target_size_(target_size), images_(std::move(images)) {
  if (images_.size() != source_size)
    throw_invalid("gamma morphism needs one image per source element");
  std::vector<char> used(target_size, 0);
  for (const auto& img : images_) {
    for (std::size_t k = 0; k < img.size(); ++k) {
      if (img[k] >= target_size) throw_invalid("gamma image element out of range");
      if (k > 0 && img[k - 1] >= img[k])
        throw_invalid("gamma image must be strictly increasing");
      if (used[img[k]])
        throw_invalid("gamma images of distinct elements must be disjoint");
      used[img[k]] = 1;
    }
  }
}

GammaMorphism GammaMorphism::identity(std::size_t size) {
  std::vector<ElementSet> images(size);
  for (std::size_t i = 0; i < size; ++i) images[i] = {i};
  return GammaMorphism(size, size, std::move(images));
}

GammaMorphism gamma_compose(const GammaMorphism& phi, const GammaMorphism& theta) {
  if (theta.target_size() != phi.source_size())
    throw_invalid("gamma morphisms are not composable");
  std::vector<ElementSet> images(theta.source_size());
  for (std::size_t s = 0; s < theta.source_size(); ++s) {
    auto& img = images[s];
    for (std::size_t t : theta.image(s))
      img.insert(img.end(), phi.image(t).begin(), phi.image(t).end());
    std::sort(img.begin(), img.end());
  }
  return GammaMorphism(theta.source_size(), phi.target_size(), std::move(images));
}

bool gamma_is_active(const GammaMorphism& theta) {
  std::size_t covered = 0;
  for (const auto& img : theta.images()) covered += img.size();
  // Images are disjoint subsets, so the union is everything iff the sizes add up.
  return covered == theta.target_size();
}

GammaMorphism segal(const DeltaMorphism& f) {
  std::vector<ElementSet> images(static_cast<std::size_t>(f.source));
  for (int i = 1; i <= f.source; ++i)
    for (int j = f(i - 1) + 1; j <= f(i); ++j)
      images[static_cast<std::size_t>(i - 1)].push_back(static_cast<std::size_t>(j - 1));
  return GammaMorphism(static_cast<std::size_t>(f.source),
                       static_cast<std::size_t>(f.target), std::move(images));
}

std::vector<GammaMorphism> enumerate_gamma(std::size_t source_size,
                                           std::size_t target_size,
                                           bool active_only, std::size_t cap) {
  // A gamma morphism is the same as assigning each target element to at most
  // one source element ("owner"); owner == source_size means uncovered.
  const std::size_t choices = active_only ? source_size : source_size + 1;
  std::vector<GammaMorphism> out;
  if (choices == 0 && target_size > 0) return out;
  std::vector<std::size_t> owner(target_size, 0);
  while (true) {
    if (out.size() >= cap)
      throw_resource("gamma enumeration exceeds cap of " + std::to_string(cap));
    std::vector<ElementSet> images(source_size);
    for (std::size_t y = 0; y < target_size; ++y)
      if (owner[y] < source_size) images[owner[y]].push_back(y);
    out.emplace_back(source_size, target_size, std::move(images));
    std::size_t k = target_size;
    while (k > 0 && owner[k - 1] + 1 == choices) owner[--k] = 0;
    if (k == 0) break;
    ++owner[k - 1];
  }
  return out;
}

std::string to_string(const DeltaMorphism& f) {
  std::string out = "[" + std::to_string(f.source) + "]->[" +
                    std::to_string(f.target) + "] (";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.values[i]);
  }
  return out + ")";
}

std::string to_string(const GammaMorphism& g) {
  std::string out;
  for (std::size_t x = 0; x < g.source_size(); ++x) {
    if (x) out += "; ";
    out += std::to_string(x) + "->{";
    for (std::size_t k = 0; k < g.image(x).size(); ++k) {
      if (k) out += ',';
      out += std::to_string(g.image(x)[k]);
    }
    out += '}';
  }
  return out + " (target size " + std::to_string(g.target_size()) + ")";
}

}  // namespace thetaconf
