#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thetaconf/error.hpp"
#include "thetaconf/gamma_delta.hpp"
#include "thetaconf/tree.hpp"

namespace thetaconf {

/// Morphism of Theta_n between trees S = [s](S_1..S_s) and T = [t](T_1..T_t).
/// A level-1 morphism is just its Delta part. Above level 1 there is one
/// level-(n-1) part S_i -> T_j for each pair with delta(i-1) < j <= delta(i);
/// since those j are exactly delta(0)+1 .. delta(s), `parts[k]` is the part
/// with j = delta(0) + 1 + k (i is then determined by j).
///
/// The trees are not stored; a morphism is interpreted against an explicit
/// (S, T, n) triple.
struct ThetaMorphism {
  int level = 1;
  DeltaMorphism delta;
  std::vector<ThetaMorphism> parts;

  /// Part S_i -> T_j, 1-based, valid when delta(i-1) < j <= delta(i).
  const ThetaMorphism& part(int i, int j) const;

  friend bool operator==(const ThetaMorphism&, const ThetaMorphism&) = default;
};

std::string to_string(const ThetaMorphism& f);

ThetaMorphism identity_morphism(const PlanarLevelTree& s, int n);

/// Throws ErrorCode::Precondition unless f is a morphism S -> T in Theta_n.
void validate_morphism(const ThetaMorphism& f, const PlanarLevelTree& s,
                       const PlanarLevelTree& t, int n);

/// The level-n leaves of S in planar order; Gamma morphisms produced by
/// assemble_morphism index into this sequence.
std::vector<LeafId> assemble_object(const PlanarLevelTree& s, int n);

/// Image of f under the assembly functor, as a map between the planar-ordered
/// level-n leaf sets of S and T.
GammaMorphism assemble_morphism(const ThetaMorphism& f, const PlanarLevelTree& s,
                                const PlanarLevelTree& t, int n);

/// g after f. Only the morphisms are needed: composition is carried out in
/// Delta and, part by part, one level down.
ThetaMorphism theta_compose(const ThetaMorphism& g, const ThetaMorphism& f);

bool theta_is_active(const ThetaMorphism& f, const PlanarLevelTree& s,
                     const PlanarLevelTree& t, int n);

/// For all distinct a, b in gamma_n(S) and c in gbar(a), d in gbar(b):
/// b_T(c,d) <= b_S(a,b), with equality only when c, d are in the same order
/// as a, b. T must be healthy.
bool branching_condition_holds(const PlanarLevelTree& s, const PlanarLevelTree& t,
                               int n, const GammaMorphism& gbar);

enum class LiftFailure { UnhealthyTarget, Inactive, BranchingCondition };

const char* to_string(LiftFailure reason) noexcept;

class LiftError : public Error {
 public:
  LiftError(LiftFailure reason, const std::string& what)
      : Error(ErrorCode::Precondition, what), reason_(reason) {}
  LiftFailure reason() const noexcept { return reason_; }

 private:
  LiftFailure reason_;
};

/// The unique morphism S -> T whose assembly is gbar, for T healthy and gbar
/// active and satisfying the branching condition. Throws LiftError otherwise.
ThetaMorphism lift_active(const PlanarLevelTree& s, const PlanarLevelTree& t,
                          int n, const GammaMorphism& gbar);

/// Every morphism S -> T, built depth-first over the Delta part and then the
/// parts. Throws ErrorCode::ResourceLimit past `cap` morphisms.
std::vector<ThetaMorphism> enumerate_hom_bruteforce(
    const PlanarLevelTree& s, const PlanarLevelTree& t, int n, bool active_only,
    std::size_t cap = kDefaultMorphismCap);

}  // namespace thetaconf
