#include "thetaconf/theta.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace thetaconf {

namespace {

std::size_t leaf_count(const PlanarLevelTree& t, int level) {
  if (level == 0) return 1;
  std::size_t c = 0;
  for (const auto& ch : t.children()) c += leaf_count(ch, level - 1);
  return c;
}

// Offsets of each level-1 subtree's leaves within the tree's leaf sequence;
// one extra trailing entry holds the total.
std::vector<std::size_t> subtree_offsets(const PlanarLevelTree& t, int level) {
  std::vector<std::size_t> off{0};
  for (const auto& ch : t.children()) off.push_back(off.back() + leaf_count(ch, level - 1));
  return off;
}

[[noreturn]] void mismatch(const std::string& what) {
  throw_precondition("morphism does not match its trees: " + what);
}

void validate_at(const ThetaMorphism& f, const PlanarLevelTree& s,
                 const PlanarLevelTree& t, int level) {
  if (f.level != level) mismatch("level " + std::to_string(f.level) +
                                 " where " + std::to_string(level) + " expected");
  const auto& d = f.delta;
  if (d.source != static_cast<int>(s.child_count()) ||
      d.target != static_cast<int>(t.child_count()))
    mismatch("delta part " + to_string(d) + " against [" +
             std::to_string(s.child_count()) + "] -> [" +
             std::to_string(t.child_count()) + "]");
  (void)make_delta(d.source, d.target, d.values);
  if (level == 1) {
    if (!f.parts.empty()) mismatch("level-1 morphism with parts");
    return;
  }
  if (f.parts.size() != static_cast<std::size_t>(d(d.source) - d(0)))
    mismatch("wrong number of parts");
  for (int i = 1; i <= d.source; ++i)
    for (int j = d(i - 1) + 1; j <= d(i); ++j)
      validate_at(f.part(i, j), s.child(static_cast<std::size_t>(i - 1)),
                  t.child(static_cast<std::size_t>(j - 1)), level - 1);
}

GammaMorphism assemble_at(const ThetaMorphism& f, const PlanarLevelTree& s,
                          const PlanarLevelTree& t, int level) {
  if (level == 1) return segal(f.delta);
  const auto soff = subtree_offsets(s, level);
  const auto toff = subtree_offsets(t, level);
  std::vector<ElementSet> images(soff.back());
  const auto& d = f.delta;
  for (int i = 1; i <= d.source; ++i) {
    const auto si = static_cast<std::size_t>(i - 1);
    for (int j = d(i - 1) + 1; j <= d(i); ++j) {
      const auto tj = static_cast<std::size_t>(j - 1);
      const GammaMorphism sub =
          assemble_at(f.part(i, j), s.child(si), t.child(tj), level - 1);
      for (std::size_t a = 0; a < sub.source_size(); ++a) {
        auto& img = images[soff[si] + a];
        for (std::size_t y : sub.image(a)) img.push_back(toff[tj] + y);
      }
    }
  }
  return GammaMorphism(soff.back(), toff.back(), std::move(images));
}

// Length of the common prefix of two leaf paths, i.e. their branching level.
int common_prefix(const LeafId& a, const LeafId& b) {
  std::size_t k = 0;
  while (k < a.path.size() && k < b.path.size() && a.path[k] == b.path[k]) ++k;
  return static_cast<int>(k);
}

[[noreturn]] void lift_fail(LiftFailure reason, const std::string& what) {
  throw LiftError(reason, what);
}

ThetaMorphism lift_at(const PlanarLevelTree& s, const PlanarLevelTree& t, int level,
                      const GammaMorphism& g) {
  ThetaMorphism f;
  f.level = level;
  const int sr = static_cast<int>(s.child_count());
  const int tr = static_cast<int>(t.child_count());
  if (level == 1) {
    std::vector<int> values{0};
    for (std::size_t i = 0; i < g.source_size(); ++i) {
      const int lo = values.back();
      const auto& img = g.image(i);
      for (std::size_t k = 0; k < img.size(); ++k)
        if (img[k] != static_cast<std::size_t>(lo) + k)
          lift_fail(LiftFailure::BranchingCondition,
                    "image is not an order-preserving block decomposition");
      values.push_back(lo + static_cast<int>(img.size()));
    }
    if (values.back() != tr) lift_fail(LiftFailure::Inactive, "map is not active");
    f.delta = make_delta(sr, tr, std::move(values));
    return f;
  }
  if (tr == 0) {
    f.delta = make_delta(sr, 0, std::vector<int>(static_cast<std::size_t>(sr) + 1, 0));
    return f;
  }
  const auto soff = subtree_offsets(s, level);
  const auto toff = subtree_offsets(t, level);
  std::vector<std::size_t> block(toff.back());
  for (std::size_t j = 0; j + 1 < toff.size(); ++j)
    for (std::size_t y = toff[j]; y < toff[j + 1]; ++y) block[y] = j;

  // Cut points r_0 = 0 <= r_1 <= ... <= r_s = t: subtree S_i covers exactly
  // the blocks T_{r_{i-1}+1} .. T_{r_i}.
  std::vector<int> cuts{0};
  for (int i = 0; i < sr; ++i) {
    const auto si = static_cast<std::size_t>(i);
    int lo = -1, hi = -1;
    for (std::size_t a = soff[si]; a < soff[si + 1]; ++a)
      for (std::size_t y : g.image(a)) {
        const int b = static_cast<int>(block[y]);
        lo = lo < 0 ? b : std::min(lo, b);
        hi = std::max(hi, b);
      }
    if (lo < 0) {
      cuts.push_back(cuts.back());
      continue;
    }
    if (lo != cuts.back())
      lift_fail(LiftFailure::BranchingCondition,
                "subtree images do not form consecutive blocks");
    cuts.push_back(hi + 1);
  }
  if (cuts.back() != tr) lift_fail(LiftFailure::Inactive, "map is not active");
  f.delta = make_delta(sr, tr, cuts);

  for (int i = 1; i <= sr; ++i) {
    const auto si = static_cast<std::size_t>(i - 1);
    const std::size_t local = soff[si + 1] - soff[si];
    for (int j = cuts[si] + 1; j <= cuts[si + 1]; ++j) {
      const auto tj = static_cast<std::size_t>(j - 1);
      std::vector<ElementSet> images(local);
      for (std::size_t a = 0; a < local; ++a)
        for (std::size_t y : g.image(soff[si] + a))
          if (block[y] == tj) images[a].push_back(y - toff[tj]);
      GammaMorphism sub(local, toff[tj + 1] - toff[tj], std::move(images));
      f.parts.push_back(lift_at(s.child(si), t.child(tj), level - 1, sub));
    }
  }
  return f;
}

class HomEnumerator {
 public:
  HomEnumerator(std::size_t cap) : cap_(cap) {}

  const std::vector<ThetaMorphism>& all(const PlanarLevelTree& s,
                                        const PlanarLevelTree& t, int level) {
    auto key = std::make_tuple(&s, &t, level);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<ThetaMorphism> out;
    const int sr = static_cast<int>(s.child_count());
    const int tr = static_cast<int>(t.child_count());
    for (auto& d : enumerate_delta(sr, tr, cap_)) {
      if (level == 1) {
        charge(1);
        out.push_back(ThetaMorphism{1, std::move(d), {}});
        continue;
      }
      // Candidate parts for each j in delta(0)+1 .. delta(s).
      std::vector<const std::vector<ThetaMorphism>*> choices;
      bool empty = false;
      for (int i = 1; i <= sr; ++i)
        for (int j = d(i - 1) + 1; j <= d(i); ++j) {
          const auto& c = all(s.child(static_cast<std::size_t>(i - 1)),
                              t.child(static_cast<std::size_t>(j - 1)), level - 1);
          empty = empty || c.empty();
          choices.push_back(&c);
        }
      if (empty) continue;
      std::vector<std::size_t> idx(choices.size(), 0);
      while (true) {
        charge(1);
        ThetaMorphism f{level, d, {}};
        f.parts.reserve(choices.size());
        for (std::size_t k = 0; k < choices.size(); ++k)
          f.parts.push_back((*choices[k])[idx[k]]);
        out.push_back(std::move(f));
        std::size_t k = choices.size();
        while (k > 0 && idx[k - 1] + 1 == choices[k - 1]->size()) idx[--k] = 0;
        if (k == 0) break;
        ++idx[k - 1];
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  void charge(std::size_t k) {
    produced_ += k;
    if (produced_ > cap_)
      throw_resource("morphism enumeration exceeds cap of " + std::to_string(cap_));
  }

  std::size_t cap_;
  std::size_t produced_ = 0;
  std::map<std::tuple<const PlanarLevelTree*, const PlanarLevelTree*, int>,
           std::vector<ThetaMorphism>>
      memo_;
};

}  // namespace

const ThetaMorphism& ThetaMorphism::part(int i, int j) const {
  if (level <= 1 || i < 1 || i > delta.source || j <= delta(i - 1) || j > delta(i))
    throw_invalid("no part (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return parts.at(static_cast<std::size_t>(j - delta(0) - 1));
}

std::string to_string(const ThetaMorphism& f) {
  std::string out = "{" + to_string(f.delta);
  if (!f.parts.empty()) {
    out += " parts:";
    for (int i = 1; i <= f.delta.source; ++i)
      for (int j = f.delta(i - 1) + 1; j <= f.delta(i); ++j)
        out += " (" + std::to_string(i) + "," + std::to_string(j) + ")=" +
               to_string(f.part(i, j));
  }
  return out + "}";
}

ThetaMorphism identity_morphism(const PlanarLevelTree& s, int n) {
  require_height(s, n);
  ThetaMorphism f;
  f.level = n;
  f.delta = DeltaMorphism::identity(static_cast<int>(s.child_count()));
  if (n > 1)
    for (const auto& c : s.children()) f.parts.push_back(identity_morphism(c, n - 1));
  return f;
}

void validate_morphism(const ThetaMorphism& f, const PlanarLevelTree& s,
                       const PlanarLevelTree& t, int n) {
  require_height(s, n);
  require_height(t, n);
  validate_at(f, s, t, n);
}

std::vector<LeafId> assemble_object(const PlanarLevelTree& s, int n) {
  return level_n_leaves(s, n);
}

GammaMorphism assemble_morphism(const ThetaMorphism& f, const PlanarLevelTree& s,
                                const PlanarLevelTree& t, int n) {
  validate_morphism(f, s, t, n);
  return assemble_at(f, s, t, n);
}

ThetaMorphism theta_compose(const ThetaMorphism& g, const ThetaMorphism& f) {
  if (g.level != f.level) throw_invalid("theta morphisms of different levels");
  ThetaMorphism h;
  h.level = f.level;
  h.delta = delta_compose(g.delta, f.delta);
  if (f.level == 1) return h;
  const auto& fd = f.delta;
  const auto& gd = g.delta;
  if (f.parts.size() != static_cast<std::size_t>(fd(fd.source) - fd(0)) ||
      g.parts.size() != static_cast<std::size_t>(gd(gd.source) - gd(0)))
    throw_invalid("malformed theta morphism");
  // For each k in h(0)+1 .. h(s) there is exactly one j in f(0)+1 .. f(s) with
  // g(j-1) < k <= g(j); the composite part is g_{jk} after f_{ij}.
  int j = fd(0) + 1;
  for (int k = h.delta(0) + 1; k <= h.delta(h.delta.source); ++k) {
    while (gd(j) < k) ++j;
    h.parts.push_back(theta_compose(g.parts[static_cast<std::size_t>(k - gd(0) - 1)],
                                    f.parts[static_cast<std::size_t>(j - fd(0) - 1)]));
  }
  return h;
}

bool theta_is_active(const ThetaMorphism& f, const PlanarLevelTree& s,
                     const PlanarLevelTree& t, int n) {
  return gamma_is_active(assemble_morphism(f, s, t, n));
}

bool branching_condition_holds(const PlanarLevelTree& s, const PlanarLevelTree& t,
                               int n, const GammaMorphism& gbar) {
  if (!is_healthy(t, n))
    throw LiftError(LiftFailure::UnhealthyTarget,
                    "branching condition requires a healthy target");
  const auto sl = level_n_leaves(s, n);
  const auto tl = level_n_leaves(t, n);
  if (gbar.source_size() != sl.size() || gbar.target_size() != tl.size())
    throw_invalid("gamma morphism does not match the leaf sets of S and T");
  for (std::size_t a = 0; a < sl.size(); ++a)
    for (std::size_t b = a + 1; b < sl.size(); ++b) {
      const int bs = common_prefix(sl[a], sl[b]);
      for (std::size_t c : gbar.image(a))
        for (std::size_t d : gbar.image(b)) {
          const int bt = common_prefix(tl[c], tl[d]);
          // a <_S b here, so equality needs c <_T d.
          if (bt > bs || (bt == bs && c > d)) return false;
        }
    }
  return true;
}

const char* to_string(LiftFailure reason) noexcept {
  switch (reason) {
    case LiftFailure::UnhealthyTarget: return "unhealthy target";
    case LiftFailure::Inactive: return "inactive";
    case LiftFailure::BranchingCondition: return "branching condition fails";
  }
  return "unknown";
}

ThetaMorphism lift_active(const PlanarLevelTree& s, const PlanarLevelTree& t,
                          int n, const GammaMorphism& gbar) {
  require_height(s, n);
  require_height(t, n);
  if (!is_healthy(t, n))
    lift_fail(LiftFailure::UnhealthyTarget, "lift requires a healthy target");
  if (gbar.source_size() != count_level_n_leaves(s, n) ||
      gbar.target_size() != count_level_n_leaves(t, n))
    throw_invalid("gamma morphism does not match the leaf sets of S and T");
  if (!gamma_is_active(gbar)) lift_fail(LiftFailure::Inactive, "map is not active");
  if (!branching_condition_holds(s, t, n, gbar))
    lift_fail(LiftFailure::BranchingCondition, "branching condition fails");
  return lift_at(s, t, n, gbar);
}

std::vector<ThetaMorphism> enumerate_hom_bruteforce(const PlanarLevelTree& s,
                                                    const PlanarLevelTree& t, int n,
                                                    bool active_only,
                                                    std::size_t cap) {
  require_height(s, n);
  require_height(t, n);
  HomEnumerator e(cap);
  std::vector<ThetaMorphism> all = e.all(s, t, n);
  if (!active_only) return all;
  std::vector<ThetaMorphism> out;
  for (auto& f : all)
    if (gamma_is_active(assemble_at(f, s, t, n))) out.push_back(std::move(f));
  return out;
}

}  // namespace thetaconf
