#include "thetaconf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "thetaconf/error.hpp"
#include "thetaconf/fox_neuwirth.hpp"
#include "thetaconf/json_io.hpp"
#include "thetaconf/theta.hpp"
#include "thetaconf/theta_a.hpp"

namespace thetaconf {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("THETA_CONF_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::size_t> configuration_space_betti(int n, std::size_t r) {
  if (n < 1) throw_invalid("dimension n must be at least 1");
  const auto step = static_cast<std::size_t>(n - 1);
  std::vector<std::size_t> poly{1};
  for (std::size_t k = 1; k < r; ++k) {
    std::vector<std::size_t> next(poly.size() + step, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + step] += k * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

BijectionStats check_active_bijection(const PlanarLevelTree& s, const PlanarLevelTree& t,
                                      int n, std::size_t cap) {
  BijectionStats st;
  const auto all = enumerate_hom_bruteforce(s, t, n, false, cap);
  st.morphisms = all.size();
  std::map<GammaMorphism, const ThetaMorphism*> images;
  const std::string where = " for S=" + render_symbol(s, n) + " T=" + render_symbol(t, n);
  for (const auto& f : all) {
    const GammaMorphism g = assemble_morphism(f, s, t, n);
    if (!gamma_is_active(g)) continue;
    ++st.active;
    if (!images.emplace(g, &f).second) {
      st.failure = "assembly not injective on active morphisms" + where;
      return st;
    }
    if (!branching_condition_holds(s, t, n, g)) {
      st.failure = "active morphism violates the branching condition" + where;
      return st;
    }
    if (lift_active(s, t, n, g) != f) {
      st.failure = "lift does not invert assembly" + where;
      return st;
    }
  }
  const auto xs = count_level_n_leaves(s, n);
  const auto ys = count_level_n_leaves(t, n);
  for (const auto& g : enumerate_gamma(xs, ys, true, cap)) {
    if (!branching_condition_holds(s, t, n, g)) continue;
    ++st.branching_maps;
    if (!images.count(g)) {
      st.failure = "branching-condition map " + to_string(g) + " has no preimage" + where;
      return st;
    }
    if (assemble_morphism(lift_active(s, t, n, g), s, t, n) != g) {
      st.failure = "assembly does not invert lift" + where;
      return st;
    }
  }
  if (st.branching_maps != st.active)
    st.failure = "image of assembly differs from the branching-condition maps" + where;
  return st;
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs body(i) for i in [0, count) across workers; results land in their
// slots so the merge order is deterministic.
template <class Result, class Body>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Body body) {
  std::vector<Result> out(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = body(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::mutex err_mu;
  std::exception_ptr err;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

CheckResult check(std::string name) {
  CheckResult c;
  c.name = std::move(name);
  return c;
}

void fail(CheckResult& c, const std::string& detail) {
  if (c.passed) c.detail = detail;
  c.passed = false;
}

std::vector<LabelPermutation> all_permutations(const LabelSet& labels) {
  LabelSet sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<LabelPermutation> out;
  LabelSet image = sorted;
  do {
    LabelPermutation g;
    for (std::size_t k = 0; k < sorted.size(); ++k) g.emplace(sorted[k], image[k]);
    out.push_back(std::move(g));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// ---- morphisms -------------------------------------------------------------

VerifyReport suite_morphisms(const VerifyOptions& o) {
  VerifyReport rep;
  const auto trees = enumerate_trees_up_to(o.max_edges, o.n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < trees.size(); ++j)
    if (is_healthy(trees[j], o.n))
      for (std::size_t i = 0; i < trees.size(); ++i) pairs.emplace_back(i, j);

  CheckResult bij = check("active morphisms biject with branching-condition maps");
  const auto stats = parallel_map<BijectionStats>(
      pairs.size(), resolve_threads(o.threads), [&](std::size_t k) {
        return check_active_bijection(trees[pairs[k].first], trees[pairs[k].second], o.n,
                                      o.max_morphisms);
      });
  std::size_t morphisms = 0, active = 0;
  for (const auto& st : stats) {
    ++bij.checked;
    morphisms += st.morphisms;
    active += st.active;
    if (!st.failure.empty()) fail(bij, st.failure);
  }
  bij.detail = bij.passed ? std::to_string(morphisms) + " morphisms, " +
                                std::to_string(active) + " active"
                          : bij.detail;
  rep.checks.push_back(bij);

  // Composition laws and functoriality of assembly on smaller trees.
  const std::size_t small_edges = std::min<std::size_t>(o.max_edges, 3);
  const auto small = enumerate_trees_up_to(small_edges, o.n);
  CheckResult unit = check("composition is unital");
  CheckResult assoc = check("composition is associative");
  CheckResult functor = check("assembly is functorial");
  for (const auto& a : small)
    for (const auto& b : small) {
      const auto ab = enumerate_hom_bruteforce(a, b, o.n, false, o.max_morphisms);
      for (const auto& f : ab) {
        ++unit.checked;
        if (theta_compose(f, identity_morphism(a, o.n)) != f ||
            theta_compose(identity_morphism(b, o.n), f) != f)
          fail(unit, "unit law fails for " + to_string(f));
      }
      for (const auto& c : small) {
        const auto bc = enumerate_hom_bruteforce(b, c, o.n, false, o.max_morphisms);
        for (const auto& f : ab)
          for (const auto& g : bc) {
            ++functor.checked;
            const ThetaMorphism gf = theta_compose(g, f);
            validate_morphism(gf, a, c, o.n);
            if (assemble_morphism(gf, a, c, o.n) !=
                gamma_compose(assemble_morphism(g, b, c, o.n),
                              assemble_morphism(f, a, b, o.n)))
              fail(functor, "gamma(g.f) != gamma(g).gamma(f) for f=" + to_string(f) +
                                " g=" + to_string(g));
          }
        if (ab.empty() || bc.empty()) continue;
        // Associativity against one further hop, sampled on the first few.
        for (const auto& d : small) {
          const auto cd = enumerate_hom_bruteforce(c, d, o.n, false, o.max_morphisms);
          const std::size_t lim = 3;
          for (std::size_t x = 0; x < std::min(lim, ab.size()); ++x)
            for (std::size_t y = 0; y < std::min(lim, bc.size()); ++y)
              for (std::size_t z = 0; z < std::min(lim, cd.size()); ++z) {
                ++assoc.checked;
                if (theta_compose(cd[z], theta_compose(bc[y], ab[x])) !=
                    theta_compose(theta_compose(cd[z], bc[y]), ab[x]))
                  fail(assoc, "associativity fails");
              }
        }
      }
    }
  rep.checks.push_back(unit);
  rep.checks.push_back(assoc);
  rep.checks.push_back(functor);
  return rep;
}

// ---- poset -----------------------------------------------------------------

VerifyReport suite_poset(const VerifyOptions& o) {
  VerifyReport rep;
  const PosetView view = build_nord_poset(o.labels, o.n, o.max_morphisms);
  const std::size_t r = o.labels.size();
  const std::size_t size = view.elements.size();

  CheckResult count = check("element count matches labelled healthy trees");
  {
    std::size_t brute = 0;
    for (const auto& t : enumerate_trees_up_to(r * static_cast<std::size_t>(o.n), o.n))
      if (is_healthy(t, o.n) && count_level_n_leaves(t, o.n) == r) ++brute;
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= r; ++k) fact *= k;
    brute *= fact;
    count.checked = 1;
    if (brute != size || nord_count(r, o.n) != size)
      fail(count, "enumerated " + std::to_string(size) + ", brute force " +
                      std::to_string(brute) + ", formula " +
                      std::to_string(nord_count(r, o.n)));
  }
  rep.checks.push_back(count);

  CheckResult axioms = check("reflexive, antisymmetric, transitive");
  axioms.checked = size * size;
  if (!view.order.is_partial_order()) fail(axioms, "poset axioms fail");
  rep.checks.push_back(axioms);

  CheckResult trees = check("tree round trip and min rule");
  CheckResult deg = check("strict relations raise the degree");
  std::vector<std::size_t> degrees(size);
  for (std::size_t i = 0; i < size; ++i) {
    const NOrdering& s = view.elements[i];
    const PlanarLevelTree t = to_tree(s);
    ++trees.checked;
    degrees[i] = degree(s);
    if (!is_healthy(t, o.n) || from_tree(t, o.n, s.labels) != s ||
        t.edge_count() != degrees[i])
      fail(trees, "round trip fails for " + to_text(s));
    const auto leaves = level_n_leaves(t, o.n);
    for (std::size_t a = 0; a < leaves.size(); ++a)
      for (std::size_t b = a + 1; b < leaves.size(); ++b)
        if (branching_level(t, o.n, leaves[a], leaves[b]) != branching_level(s, a, b))
          fail(trees, "min rule fails for " + to_text(s));
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j : view.order.above(i)) {
      ++deg.checked;
      if (degrees[i] >= degrees[j])
        fail(deg, to_text(view.elements[i]) + " < " + to_text(view.elements[j]) +
                      " without raising the degree");
    }
  rep.checks.push_back(trees);
  rep.checks.push_back(deg);

  CheckResult action = check("symmetric group acts freely and order-equivariantly");
  std::map<NOrdering, std::size_t> index;
  for (std::size_t i = 0; i < size; ++i) index.emplace(view.elements[i], i);
  for (const auto& g : all_permutations(o.labels)) {
    const bool identity =
        std::all_of(g.begin(), g.end(), [](const auto& kv) { return kv.first == kv.second; });
    std::vector<std::size_t> moved(size);
    for (std::size_t i = 0; i < size; ++i) {
      moved[i] = index.at(sigma_act(g, view.elements[i]));
      if (!identity && moved[i] == i) fail(action, "non-identity permutation fixes " +
                                                       to_text(view.elements[i]));
    }
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        ++action.checked;
        if (view.order.leq(i, j) != view.order.leq(moved[i], moved[j]))
          fail(action, "action does not preserve the order");
      }
  }
  rep.checks.push_back(action);

  CheckResult hasse_check = check("Hasse diagram covers");
  const auto covers = view.covers();
  hasse_check.checked = covers.size();
  for (const auto& [x, y] : covers)
    for (std::size_t z = 0; z < size; ++z)
      if (view.order.less(x, z) && view.order.less(z, y)) fail(hasse_check, "cover with an element between");
  hasse_check.detail = hasse_check.passed ? std::to_string(covers.size()) + " cover edges"
                                          : hasse_check.detail;
  rep.checks.push_back(hasse_check);
  return rep;
}

// ---- theorem-a -------------------------------------------------------------

VerifyReport suite_theorem_a(const VerifyOptions& o) {
  VerifyReport rep;
  const PosetView view = build_nord_poset(o.labels, o.n, o.max_morphisms);
  const OrderComplex cx = order_complex(view.order, o.max_chains);
  const ChainComplex cc = boundary_matrices(cx);

  CheckResult dd = check("boundary of boundary vanishes");
  dd.checked = cc.boundaries.size();
  if (!boundary_squared_is_zero(cc)) fail(dd, "d d != 0");
  rep.checks.push_back(dd);

  const HomologyResult h = homology(cc);
  CheckResult euler = check("Euler characteristic equals alternating Betti sum");
  euler.checked = 1;
  if (h.euler != euler_characteristic(cx) || h.euler != h.betti_alternating_sum())
    fail(euler, "Euler characteristic mismatch");
  rep.checks.push_back(euler);

  CheckResult betti = check("Betti numbers match the configuration space");
  betti.checked = h.betti.size();
  const auto expected = configuration_space_betti(o.n, o.labels.size());
  auto got = h.betti;
  while (got.size() > expected.size() && got.back() == 0) got.pop_back();
  std::string shown = json::json(h.betti).dump();
  if (got != expected)
    fail(betti, "got " + shown + ", expected " + json::json(expected).dump());
  else
    betti.detail = shown;
  rep.checks.push_back(betti);

  CheckResult torsion = check("homology is torsion-free");
  torsion.checked = h.torsion.size();
  for (const auto& t : h.torsion)
    if (!t.empty()) fail(torsion, "torsion found");
  rep.checks.push_back(torsion);

  CheckResult comp = check("betti_0 counts Hasse components");
  comp.checked = 1;
  if (h.betti.empty() || h.betti[0] != connected_components(view.order))
    fail(comp, "betti_0 differs from the component count");
  rep.checks.push_back(comp);
  return rep;
}

// ---- theorem-b -------------------------------------------------------------

// Unhealthy labelled objects: every unhealthy tree up to `max_edges`, each
// with several labellings.
template <class Visit>
void for_each_unhealthy(int n, std::size_t max_edges, std::uint64_t seed, Visit visit) {
  std::mt19937_64 rng(seed);
  for (const auto& t : enumerate_trees_up_to(max_edges, n)) {
    if (is_healthy(t, n)) continue;
    const std::size_t r = count_level_n_leaves(t, n);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < r; ++k) labels.push_back("x" + std::to_string(k));
    std::vector<std::vector<std::string>> labellings;
    if (r <= 4) {
      std::vector<std::string> p = labels;
      do labellings.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    } else {
      labellings.push_back(labels);
      for (int k = 0; k < 5; ++k) {
        std::shuffle(labels.begin(), labels.end(), rng);
        labellings.push_back(labels);
      }
    }
    for (auto& l : labellings) visit(make_labelled(t, n, l));
  }
}

VerifyReport suite_theorem_b(const VerifyOptions& o) {
  VerifyReport rep;
  const PosetView view = build_nord_poset(o.labels, o.n, o.max_morphisms);
  const std::size_t size = view.elements.size();
  std::vector<LabelledThetaObject> embedded;
  for (const auto& s : view.elements) embedded.push_back(embed(s));

  CheckResult ri = check("retraction after embedding is the identity");
  for (std::size_t i = 0; i < size; ++i) {
    ++ri.checked;
    if (retract(embedded[i]) != view.elements[i])
      fail(ri, "r(i(S)) != S for " + to_text(view.elements[i]));
  }
  rep.checks.push_back(ri);

  CheckResult full = check("embedding is full");
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      ++full.checked;
      const auto m = hom_morphism(embedded[i], embedded[j]);
      if (m.has_value() != view.order.leq(i, j)) {
        fail(full, "hom_exists disagrees with leq for " + to_text(view.elements[i]) +
                       " -> " + to_text(view.elements[j]));
        continue;
      }
      if (m && assemble_morphism(*m, embedded[i].tree, embedded[j].tree, o.n) !=
                   label_matching(embedded[i], embedded[j]))
        fail(full, "morphism does not respect labels");
    }
  rep.checks.push_back(full);

  CheckResult unique = check("at most one label-compatible morphism (brute force)");
  if (o.labels.size() <= 3) {
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        ++unique.checked;
        const auto& s = embedded[i];
        const auto& t = embedded[j];
        const GammaMorphism want = label_matching(s, t);
        std::size_t hits = 0;
        for (const auto& f : enumerate_hom_bruteforce(s.tree, t.tree, o.n, true, o.max_morphisms))
          if (assemble_morphism(f, s.tree, t.tree, o.n) == want) ++hits;
        if (hits != (view.order.leq(i, j) ? 1u : 0u))
          fail(unique, std::to_string(hits) + " morphisms " + to_text(view.elements[i]) +
                           " -> " + to_text(view.elements[j]));
      }
  } else {
    unique.detail = "skipped: more than 3 labels";
  }
  rep.checks.push_back(unique);

  CheckResult unit = check("unit morphism to the healthification exists");
  for_each_unhealthy(o.n, o.unit_max_edges, o.seed, [&](const LabelledThetaObject& s) {
    ++unit.checked;
    if (!unit_exists(s))
      fail(unit, "no unit for " + render_symbol(s.tree, o.n));
  });
  rep.checks.push_back(unit);

  CheckResult init = check("unit is initial");
  const std::size_t r = o.labels.size();
  const std::size_t edge_bound =
      std::min(o.unit_max_edges, r * static_cast<std::size_t>(o.n) + 2);
  for (const auto& t : enumerate_trees_up_to(edge_bound, o.n)) {
    if (count_level_n_leaves(t, o.n) != r) continue;
    LabelSet p = view.labels;
    do {
      ++init.checked;
      if (!initiality_check(make_labelled(t, o.n, p), r))
        fail(init, "initiality fails for " + render_symbol(t, o.n));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  rep.checks.push_back(init);

  // Naturality of the unit on brute-force morphisms between small labelled
  // objects: eta_T . f == i(r(f)) . eta_S. Hom sets into healthy targets
  // have at most one element, so this also checks that r(f) exists.
  CheckResult natural = check("unit is natural on enumerated morphisms");
  if (r <= 3) {
    std::vector<LabelledThetaObject> objects;
    for (const auto& t : enumerate_trees_up_to(std::min<std::size_t>(o.unit_max_edges, 6), o.n)) {
      if (count_level_n_leaves(t, o.n) != r) continue;
      LabelSet p = view.labels;
      do objects.push_back(make_labelled(t, o.n, p));
      while (std::next_permutation(p.begin(), p.end()));
    }
    for (const auto& a : objects) {
      const auto ra = embed(retract(a));
      const auto eta_a = hom_morphism(a, ra);
      for (const auto& b : objects) {
        const auto want = label_matching(a, b);
        for (const auto& f : enumerate_hom_bruteforce(a.tree, b.tree, o.n, true, o.max_morphisms)) {
          if (assemble_morphism(f, a.tree, b.tree, o.n) != want) continue;
          ++natural.checked;
          const auto rb = embed(retract(b));
          const auto eta_b = hom_morphism(b, rb);
          const auto rf = hom_morphism(ra, rb);
          if (!eta_a || !eta_b || !rf) {
            fail(natural, "missing unit or r(f) for " + render_symbol(a.tree, o.n) + " -> " +
                              render_symbol(b.tree, o.n));
            continue;
          }
          if (theta_compose(*eta_b, f) != theta_compose(*rf, *eta_a))
            fail(natural, "naturality square fails for " + render_symbol(a.tree, o.n) + " -> " +
                              render_symbol(b.tree, o.n));
        }
      }
    }
  } else {
    natural.detail = "skipped: more than 3 labels";
  }
  rep.checks.push_back(natural);
  return rep;
}

// ---- cells -----------------------------------------------------------------

VerifyReport suite_cells(const VerifyOptions& o) {
  VerifyReport rep;
  const PosetView view = build_nord_poset(o.labels, o.n, o.max_morphisms);
  const std::size_t size = view.elements.size();

  CheckResult round = check("witness classifies to its cell");
  std::vector<Configuration> points;
  for (const auto& s : view.elements) {
    ++round.checked;
    Configuration w = witness(s);
    if (cell_of(w) != s) fail(round, "witness of " + to_text(s) + " misclassified");
    points.push_back(std::move(w));
  }
  std::mt19937_64 rng(o.seed);
  for (std::size_t k = 0; k < o.samples; ++k)
    points.push_back(sample(o.labels, o.n, rng, k % 2 == 0 ? 1'000'000 : 2));
  rep.checks.push_back(round);

  CheckResult universal = check("phi in C(S) iff cell_of(phi) <= S");
  std::map<NOrdering, std::size_t> index;
  for (std::size_t i = 0; i < size; ++i) index.emplace(view.elements[i], i);
  for (const auto& phi : points) {
    const std::size_t c = index.at(cell_of(phi));
    for (std::size_t j = 0; j < size; ++j) {
      ++universal.checked;
      if (in_cell(phi, view.elements[j]) != view.order.leq(c, j))
        fail(universal, "universal property fails against " + to_text(view.elements[j]));
    }
  }
  rep.checks.push_back(universal);

  const std::size_t per_cell = std::max<std::size_t>(1, std::min<std::size_t>(o.samples, 20));
  CheckResult functor = check("C(S) is contained in C(T) for S <= T");
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<NOrdering> targets;
    for (std::size_t j : view.order.above(i)) targets.push_back(view.elements[j]);
    functor.checked += targets.size();
    const std::size_t bad = functoriality_check(view.elements[i], targets, per_cell, o.seed + i);
    if (bad == SIZE_MAX)
      fail(functor, "sample outside its own cell " + to_text(view.elements[i]));
    else if (bad != targets.size())
      fail(functor, to_text(view.elements[i]) + " <= " + to_text(targets[bad]));
  }
  rep.checks.push_back(functor);

  CheckResult convex = check("open cells are closed under midpoints");
  for (std::size_t i = 0; i < size; ++i) {
    ++convex.checked;
    if (!convexity_probe(view.elements[i], per_cell, o.seed + i))
      fail(convex, "midpoint leaves the cell of " + to_text(view.elements[i]));
  }
  rep.checks.push_back(convex);

  CheckResult part = check("sampled configurations classify to the least containing cell");
  part.checked = o.samples;
  if (!partition_check(o.labels, o.n, o.samples, o.seed + 1)) fail(part, "partition check fails");
  rep.checks.push_back(part);

  CheckResult equi = check("classification commutes with relabelling");
  const auto perms = all_permutations(o.labels);
  for (std::size_t k = 0; k < std::min<std::size_t>(points.size(), size + 50); ++k)
    for (const auto& g : perms) {
      ++equi.checked;
      if (cell_of(relabel(g, points[k])) != sigma_act(g, cell_of(points[k])))
        fail(equi, "equivariance fails");
    }
  rep.checks.push_back(equi);
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem-a", "theorem-b", "morphisms",
                                              "poset", "cells"};
  return names;
}

VerifyReport run_suite(std::string_view suite, const VerifyOptions& options) {
  if (options.n < 1) throw_invalid("n must be at least 1");
  validate_labels(options.labels);
  VerifyReport rep;
  if (suite == "morphisms") rep = suite_morphisms(options);
  else if (suite == "poset") rep = suite_poset(options);
  else if (suite == "theorem-a") rep = suite_theorem_a(options);
  else if (suite == "theorem-b") rep = suite_theorem_b(options);
  else if (suite == "cells") rep = suite_cells(options);
  else throw_invalid("unknown suite '" + std::string(suite) + "'");
  rep.suite = std::string(suite);
  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckResult& c) { return c.passed; });
  return rep;
}

nlohmann::json report_to_json(const VerifyReport& report, const VerifyOptions& options) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"checked", c.checked},
                      {"detail", c.detail}});
  return {{"suite", report.suite},
          {"passed", report.passed},
          {"n", options.n},
          {"labels", options.labels},
          {"max_edges", options.max_edges},
          {"seed", options.seed},
          {"samples", options.samples},
          {"checks", checks}};
}

}  // namespace thetaconf
