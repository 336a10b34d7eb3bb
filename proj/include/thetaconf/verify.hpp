#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "thetaconf/gamma_delta.hpp"
#include "thetaconf/homology.hpp"
#include "thetaconf/nord.hpp"
#include "thetaconf/tree.hpp"

namespace thetaconf {

struct VerifyOptions {
  int n = 2;
  LabelSet labels{"a", "b", "c"};
  std::size_t max_edges = 6;
  std::size_t unit_max_edges = 8;
  std::size_t max_morphisms = kDefaultMorphismCap;
  std::size_t max_chains = kDefaultChainCap;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  unsigned threads = 0;  // 0: THETA_CONF_THREADS or hardware concurrency
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string detail;  // first counterexample, if any
};

struct VerifyReport {
  std::string suite;
  bool passed = true;
  std::vector<CheckResult> checks;
};

/// theorem-a, theorem-b, morphisms, poset, cells.
const std::vector<std::string>& suite_names();

/// Throws ErrorCode::InvalidArgument for an unknown suite.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options);

nlohmann::json report_to_json(const VerifyReport& report, const VerifyOptions& options);

/// Worker count: explicit value, else THETA_CONF_THREADS, else hardware.
unsigned resolve_threads(unsigned requested);

/// Betti numbers of the configuration space of r labelled points in R^n,
/// read off the Poincare polynomial prod_{k<r} (1 + k t^(n-1)).
std::vector<std::size_t> configuration_space_betti(int n, std::size_t r);

/// Outcome of the active-morphism bijection check for one pair (S, T).
struct BijectionStats {
  std::size_t morphisms = 0;
  std::size_t active = 0;
  std::size_t branching_maps = 0;
  std::string failure;  // empty when every check held
};

/// Brute-force active morphisms S -> T versus active Gamma maps satisfying the
/// branching condition: assembly is injective, the images coincide, and
/// lift_active inverts assembly on both sides. T must be healthy.
BijectionStats check_active_bijection(const PlanarLevelTree& s,
                                      const PlanarLevelTree& t, int n,
                                      std::size_t cap);

}  // namespace thetaconf
