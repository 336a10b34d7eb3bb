#include <doctest.h>

#include <cstdlib>

#include "thetaconf/error.hpp"
#include "thetaconf/verify.hpp"

using namespace thetaconf;

TEST_CASE("every suite passes at small sizes") {
  VerifyOptions o;
  o.max_edges = 4;
  o.unit_max_edges = 5;
  o.samples = 50;
  for (int n = 1; n <= 3; ++n) {
    o.n = n;
    for (const auto& suite : suite_names()) {
      const auto r = run_suite(suite, o);
      CHECK_MESSAGE(r.passed, suite << " n=" << n);
      CHECK(r.suite == suite);
      CHECK_FALSE(r.checks.empty());
      for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    }
  }
}

TEST_CASE("reports are deterministic") {
  VerifyOptions o;
  o.samples = 100;
  o.seed = 17;
  const auto a = report_to_json(run_suite("cells", o), o);
  const auto b = report_to_json(run_suite("cells", o), o);
  CHECK(a == b);
  CHECK(a["passed"] == true);
  CHECK(a["checks"].is_array());
  CHECK(a["checks"][0].contains("checked"));
}

TEST_CASE("parallel and serial runs agree") {
  VerifyOptions o;
  o.max_edges = 5;
  o.threads = 1;
  const auto serial = report_to_json(run_suite("morphisms", o), o);
  o.threads = 4;
  const auto parallel = report_to_json(run_suite("morphisms", o), o);
  CHECK(serial["checks"] == parallel["checks"]);
}

TEST_CASE("bad requests") {
  VerifyOptions o;
  CHECK_THROWS_AS(run_suite("nope", o), Error);
  o.labels = {"a", "a"};
  CHECK_THROWS_AS(run_suite("poset", o), Error);
  o.labels = {"a"};
  o.n = 0;
  CHECK_THROWS_AS(run_suite("poset", o), Error);
}

TEST_CASE("thread count") {
  CHECK(resolve_threads(3) == 3);
  setenv("THETA_CONF_THREADS", "2", 1);
  CHECK(resolve_threads(0) == 2);
  setenv("THETA_CONF_THREADS", "junk", 1);
  CHECK(resolve_threads(0) >= 1);
  unsetenv("THETA_CONF_THREADS");
}
