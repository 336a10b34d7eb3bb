#include "thetaconf/theta_a.hpp"

#include <map>

#include "thetaconf/error.hpp"

namespace thetaconf {

LabelledThetaObject make_labelled(PlanarLevelTree tree, int n,
                                  std::vector<std::string> labels) {
  validate_labels(labels);
  const std::size_t leaves = count_level_n_leaves(tree, n);
  if (leaves != labels.size())
    throw_invalid("tree has " + std::to_string(leaves) + " level-n leaves but " +
                  std::to_string(labels.size()) + " labels were given");
  return LabelledThetaObject{std::move(tree), n, std::move(labels)};
}

GammaMorphism label_matching(const LabelledThetaObject& s, const LabelledThetaObject& t) {
  if (s.n != t.n) throw_invalid("objects of different heights");
  if (s.labels.size() != t.labels.size()) throw_invalid("label sets differ");
  std::map<std::string, std::size_t> where;
  for (std::size_t k = 0; k < t.labels.size(); ++k) where.emplace(t.labels[k], k);
  std::vector<ElementSet> images;
  images.reserve(s.labels.size());
  for (const auto& l : s.labels) {
    auto it = where.find(l);
    if (it == where.end()) throw_invalid("label sets differ");
    images.push_back({it->second});
  }
  return GammaMorphism(s.labels.size(), t.labels.size(), std::move(images));
}

bool hom_exists(const LabelledThetaObject& s, const LabelledThetaObject& t) {
  return branching_condition_holds(s.tree, t.tree, s.n, label_matching(s, t));
}

std::optional<ThetaMorphism> hom_morphism(const LabelledThetaObject& s,
                                          const LabelledThetaObject& t) {
  if (!hom_exists(s, t)) return std::nullopt;
  return lift_active(s.tree, t.tree, s.n, label_matching(s, t));
}

LabelledThetaObject embed(const NOrdering& s) {
  return LabelledThetaObject{to_tree(s), s.n, s.labels};
}

NOrdering retract(const LabelledThetaObject& s) {
  // Healthification keeps every level-n leaf in planar order, so the labels
  // carry over unchanged.
  return from_tree(healthify(s.tree, s.n), s.n, s.labels);
}

bool unit_exists(const LabelledThetaObject& s) { return hom_exists(s, embed(retract(s))); }

bool initiality_check(const LabelledThetaObject& s, std::size_t max_labels) {
  if (s.labels.size() > max_labels)
    throw_resource("initiality check over " + std::to_string(s.labels.size()) +
                   " labels exceeds bound " + std::to_string(max_labels));
  const NOrdering r = retract(s);
  for (const auto& t : enumerate_nord(s.labels, s.n))
    if (hom_exists(s, embed(t)) != leq(r, t)) return false;
  return true;
}

}  // namespace thetaconf
