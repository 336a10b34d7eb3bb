// Acceptance checks: one PASS/FAIL line per criterion, with timings.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thetaconf/fox_neuwirth.hpp"
#include "thetaconf/homology.hpp"
#include "thetaconf/nord.hpp"
#include "thetaconf/theta.hpp"
#include "thetaconf/theta_a.hpp"
#include "thetaconf/verify.hpp"

using namespace thetaconf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

LabelSet labels_of(std::size_t r) {
  LabelSet out;
  for (std::size_t k = 0; k < r; ++k) out.push_back(std::string(1, static_cast<char>('a' + k)));
  return out;
}

std::string show(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
  s << ']';
  return s.str();
}

Outcome counting() {
  Outcome o;
  const auto two = build_nord_poset({"a", "b"}, 2);
  o.require(two.elements.size() == 4, "|2Ord({a,b})| != 4");
  o.require(hasse(two).size() == 4, "2Ord({a,b}) does not have 4 cover edges");
  for (std::size_t r = 1; r <= 4; ++r)
    o.require(enumerate_nord(labels_of(r), 1).size() == oracle::factorial(r),
              "|1Ord(A)| != |A|! for r=" + std::to_string(r));
  for (int n = 1; n <= 3; ++n)
    for (std::size_t r = 1; r <= 4; ++r) {
      const auto got = enumerate_nord(labels_of(r), n).size();
      const auto want = oracle::labelled_healthy_count(n, r);
      o.require(got == want, "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " +
                                 std::to_string(got) + " vs brute force " + std::to_string(want));
    }
  o.detail = o.ok ? "4 elements, 4 covers; r! and brute-force counts agree" : o.detail;
  return o;
}

Outcome circle() {
  Outcome o;
  const auto h = poset_homology(build_nord_poset({"a", "b"}, 2).order);
  o.require(h.betti == std::vector<std::size_t>{1, 1}, "betti " + show(h.betti));
  for (const auto& t : h.torsion) o.require(t.empty(), "torsion present");
  o.detail = o.ok ? "betti (1,1), no torsion" : o.detail;
  return o;
}

struct BettiCase {
  int n;
  std::size_t r;
  std::vector<std::size_t> expected;
};

const std::vector<BettiCase> kBettiCases{{1, 2, {2}},       {1, 3, {6}},    {2, 2, {1, 1}},
                                         {2, 3, {1, 3, 2}}, {3, 2, {1, 0, 1}}, {2, 4, {1, 6, 11, 6}}};

// Criteria 3 and 8 share the homology runs.
Outcome betti(Outcome& chain_laws) {
  Outcome o;
  std::string summary;
  for (const auto& c : kBettiCases) {
    const auto view = build_nord_poset(labels_of(c.r), c.n);
    const auto cx = order_complex(view.order);
    ChainComplex cc;
    try {
      cc = boundary_matrices(cx);
    } catch (const Error& e) {
      chain_laws.require(false, e.what());
      o.require(false, e.what());
      continue;
    }
    chain_laws.require(boundary_squared_is_zero(cc), "d d != 0 for (n,r)=(" +
                                                         std::to_string(c.n) + "," +
                                                         std::to_string(c.r) + ")");
    const auto h = homology(cc);
    chain_laws.require(h.euler == euler_characteristic(cx) && h.euler == h.betti_alternating_sum(),
                       "Euler characteristic mismatch");
    auto got = h.betti;
    while (got.size() > c.expected.size() && got.back() == 0) got.pop_back();
    const std::string tag = "(" + std::to_string(c.n) + "," + std::to_string(c.r) + ")";
    o.require(got == c.expected, tag + " betti " + show(h.betti));
    o.require(got == configuration_space_betti(c.n, c.r), tag + " differs from product formula");
    for (const auto& t : h.torsion) o.require(t.empty(), tag + " has torsion");
    summary += (summary.empty() ? "" : " ") + tag + show(got);
  }
  if (chain_laws.ok) chain_laws.detail = "dd=0 and Euler = alternating Betti sum in all 6 runs";
  if (o.ok) o.detail = summary;
  return o;
}

Outcome bijection() {
  Outcome o;
  std::size_t pairs = 0, active = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto trees = enumerate_trees_up_to(6, n);
    for (const auto& t : trees) {
      if (!is_healthy(t, n)) continue;
      for (const auto& s : trees) {
        const auto st = check_active_bijection(s, t, n, kDefaultMorphismCap);
        ++pairs;
        active += st.active;
        o.require(st.failure.empty(), st.failure);
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(active) + " active morphisms";
  return o;
}

Outcome theorem_b() {
  Outcome o;
  std::size_t units = 0, initial = 0, full = 0;
  for (int n = 1; n <= 3; ++n)
    for (std::size_t r = 1; r <= 4; ++r)
      for (const auto& s : enumerate_nord(labels_of(r), n))
        o.require(retract(embed(s)) == s, "r(i(S)) != S for " + to_text(s));

  std::mt19937_64 rng(0);
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_trees_up_to(8, n)) {
      if (is_healthy(t, n)) continue;
      const std::size_t r = count_level_n_leaves(t, n);
      std::vector<std::string> labels;
      for (std::size_t k = 0; k < r; ++k) labels.push_back("x" + std::to_string(k));
      std::vector<std::vector<std::string>> labellings;
      if (r <= 4) {
        do labellings.push_back(labels);
        while (std::next_permutation(labels.begin(), labels.end()));
      } else {
        for (int k = 0; k < 6; ++k) {
          labellings.push_back(labels);
          std::shuffle(labels.begin(), labels.end(), rng);
        }
      }
      for (const auto& l : labellings) {
        ++units;
        o.require(unit_exists(make_labelled(t, n, l)), "no unit for " + render_symbol(t, n));
      }
    }

  for (int n = 1; n <= 2; ++n)
    for (std::size_t r = 1; r <= 3; ++r) {
      auto labels = labels_of(r);
      for (const auto& t : enumerate_trees_up_to(r * static_cast<std::size_t>(n) + 3, n)) {
        if (count_level_n_leaves(t, n) != r) continue;
        auto l = labels;
        do {
          ++initial;
          o.require(initiality_check(make_labelled(t, n, l), r),
                    "initiality fails for " + render_symbol(t, n));
        } while (std::next_permutation(l.begin(), l.end()));
      }
    }

  for (int n = 1; n <= 3; ++n)
    for (std::size_t r = 1; r <= 3; ++r) {
      const auto all = enumerate_nord(labels_of(r), n);
      for (const auto& s : all)
        for (const auto& t : all) {
          ++full;
          const auto is = embed(s), it = embed(t);
          const auto want = label_matching(is, it);
          std::size_t hits = 0;
          for (const auto& f : enumerate_hom_bruteforce(is.tree, it.tree, n, true))
            if (assemble_morphism(f, is.tree, it.tree, n) == want) ++hits;
          o.require(hits == (leq(s, t) ? 1u : 0u), "fullness fails for " + to_text(s) + " -> " +
                                                       to_text(t));
          o.require(hom_exists(is, it) == leq(s, t), "hom_exists disagrees with leq");
        }
    }
  if (o.ok)
    o.detail = std::to_string(units) + " units, " + std::to_string(initial) +
               " initiality objects, " + std::to_string(full) + " fullness pairs";
  return o;
}

Outcome run_suites(const char* suite, std::size_t max_r, std::size_t samples) {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (std::size_t r = 1; r <= max_r; ++r) {
      VerifyOptions opts;
      opts.n = n;
      opts.labels = labels_of(r);
      opts.samples = samples;
      const auto rep = run_suite(suite, opts);
      for (const auto& c : rep.checks) {
        checked += c.checked;
        o.require(c.passed, "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " +
                                c.name + ": " + c.detail);
      }
    }
  if (o.ok) o.detail = std::to_string(checked) + " instances checked";
  return o;
}

Outcome fox_neuwirth() {
  Outcome o = run_suites("cells", 3, 1000);
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_nord(labels_of(4), n))
      o.require(cell_of(witness(s)) == s, "witness of " + to_text(s) + " misclassified");
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  bool all = true;
  auto report = [&all](int id, const char* name, double limit, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= limit) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(limit)) + " s budget)";
    }
    std::printf("%s %d %-28s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", id, name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    all = all && o.ok;
    return o;
  };

  report(1, "counting", 1, counting);
  report(2, "circle", 1, circle);
  Outcome chain_laws;
  report(3, "betti numbers", 60, [&] { return betti(chain_laws); });
  report(4, "active morphism bijection", 120, bijection);
  report(5, "healthy reflection", 60, theorem_b);
  report(6, "poset laws", 30, [] { return run_suites("poset", 4, 0); });
  report(7, "cell classifier", 60, fox_neuwirth);
  report(8, "chain complex laws", 1e9, [&] { return chain_laws; });
  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
