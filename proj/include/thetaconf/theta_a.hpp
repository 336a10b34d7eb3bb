#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "thetaconf/nord.hpp"
#include "thetaconf/theta.hpp"
#include "thetaconf/tree.hpp"

namespace thetaconf {

/// Object of Theta_n(A): a tree of height n whose level-n leaves are labelled
/// bijectively by A. `labels[k]` labels the k-th level-n leaf in planar order.
struct LabelledThetaObject {
  PlanarLevelTree tree;
  int n = 1;
  std::vector<std::string> labels;

  friend bool operator==(const LabelledThetaObject&, const LabelledThetaObject&) = default;
};

/// Validating constructor.
LabelledThetaObject make_labelled(PlanarLevelTree tree, int n,
                                  std::vector<std::string> labels);

/// The Gamma bijection gamma_n(S) -> gamma_n(T) forced by the labellings.
GammaMorphism label_matching(const LabelledThetaObject& s, const LabelledThetaObject& t);

/// Whether a (necessarily unique) morphism S -> T exists; T must be healthy.
bool hom_exists(const LabelledThetaObject& s, const LabelledThetaObject& t);

/// The unique morphism S -> T, or nullopt when none exists.
std::optional<ThetaMorphism> hom_morphism(const LabelledThetaObject& s,
                                          const LabelledThetaObject& t);

/// Full embedding of nOrd(A) into Theta_n(A).
LabelledThetaObject embed(const NOrdering& s);

/// Healthification, keeping the labels.
NOrdering retract(const LabelledThetaObject& s);

/// The unit S -> embed(retract(S)) exists.
bool unit_exists(const LabelledThetaObject& s);

/// hom_exists(S, embed(T)) == leq(retract(S), T) for every T in nOrd(A).
/// Throws ResourceLimit when |A| exceeds `max_labels`.
bool initiality_check(const LabelledThetaObject& s, std::size_t max_labels);

}  // namespace thetaconf
