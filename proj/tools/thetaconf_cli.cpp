// thetaconf: enumeration, Hasse diagrams, homology, classification and the
// verification suites, on top of the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "thetaconf/thetaconf.h"

namespace {

struct Config {
  int n = 2;
  std::vector<std::string> labels{"a", "b"};
  std::size_t max_edges = 6;
  std::size_t max_morphisms = 1'000'000;
  std::size_t max_chains = 1'000'000;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::size_t unit_max_edges = 8;
  std::string format;
  std::string output;
  std::string suite;
  std::string point_file;
  std::size_t boundary_degree = 1;
};

struct Failure {
  tc_status status;
};

void check(tc_status st) {
  if (st != TC_OK) throw Failure{st};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  tc_string_free(s);
  return out;
}

using PosetPtr = std::unique_ptr<tc_poset, decltype(&tc_poset_free)>;
using HomologyPtr = std::unique_ptr<tc_homology, decltype(&tc_homology_free)>;

tc_limits limits(const Config& c) { return tc_limits{c.max_edges, c.max_morphisms, c.max_chains}; }

std::vector<const char*> c_labels(const Config& c) {
  std::vector<const char*> out;
  for (const auto& l : c.labels) out.push_back(l.c_str());
  return out;
}

PosetPtr make_poset(const Config& c) {
  const auto labels = c_labels(c);
  const tc_limits l = limits(c);
  tc_poset* p = nullptr;
  check(tc_poset_create(c.n, labels.data(), labels.size(), &l, &p));
  return PosetPtr(p, &tc_poset_free);
}

std::string run_enumerate(const Config& c) {
  const auto poset = make_poset(c);
  const std::size_t size = tc_poset_size(poset.get());
  if (c.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < size; ++i) {
      char* js = nullptr;
      check(tc_poset_element_json(poset.get(), i, &js));
      auto j = nlohmann::json::parse(take(js));
      std::size_t d = 0;
      check(tc_poset_degree(poset.get(), i, &d));
      char* tree = nullptr;
      check(tc_poset_element_tree(poset.get(), i, &tree));
      j["degree"] = d;
      j["tree"] = take(tree);
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < size; ++i) {
    char* text = nullptr;
    check(tc_poset_element_text(poset.get(), i, &text));
    std::size_t d = 0;
    check(tc_poset_degree(poset.get(), i, &d));
    out += take(text) + "\t" + std::to_string(d) + "\n";
  }
  return out;
}

std::string run_hasse(const Config& c) {
  const auto poset = make_poset(c);
  char* s = nullptr;
  if (c.format == "json") {
    check(tc_poset_to_json(poset.get(), &s));
    return nlohmann::json::parse(take(s)).dump(2) + "\n";
  }
  check(tc_poset_to_dot(poset.get(), &s));
  return take(s);
}

std::string run_homology(const Config& c) {
  const auto poset = make_poset(c);
  const tc_limits l = limits(c);
  tc_homology* raw = nullptr;
  check(tc_poset_homology(poset.get(), &l, &raw));
  const HomologyPtr h(raw, &tc_homology_free);
  char* s = nullptr;
  if (c.format == "csv") {
    check(tc_homology_boundary_csv(h.get(), c.boundary_degree, &s));
    return take(s);
  }
  check(tc_homology_to_json(h.get(), &s));
  const auto j = nlohmann::json::parse(take(s));
  if (c.format == "json") return j.dump(2) + "\n";
  std::ostringstream out;
  out << "betti:";
  for (const auto& b : j["betti"]) out << ' ' << b;
  out << "\ntorsion:";
  bool any = false;
  for (std::size_t k = 0; k < j["torsion"].size(); ++k)
    for (const auto& t : j["torsion"][k]) {
      out << " H" << k << ":Z/" << (t.is_string() ? t.get<std::string>() : t.dump());
      any = true;
    }
  if (!any) out << " none";
  out << "\neuler: " << j["euler"] << "\n";
  return out.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string run_classify(const Config& c) {
  const std::string text = read_input(c.point_file);
  char* t = nullptr;
  char* js = nullptr;
  check(tc_classify_points(text.c_str(), c.n, &t, c.format == "json" ? &js : nullptr));
  if (c.format == "json") {
    take(t);
    return nlohmann::json::parse(take(js)).dump(2) + "\n";
  }
  return take(t) + "\n";
}

int run_verify(const Config& c, std::string& out) {
  const auto labels = c_labels(c);
  tc_verify_options o = tc_verify_options_default();
  o.n = c.n;
  o.labels = labels.data();
  o.label_count = labels.size();
  o.limits = limits(c);
  o.unit_max_edges = c.unit_max_edges;
  o.seed = c.seed;
  o.samples = c.samples;
  char* report = nullptr;
  int passed = 0;
  check(tc_verify(c.suite.c_str(), &o, &report, &passed));
  const auto j = nlohmann::json::parse(take(report));
  if (c.format == "text") {
    std::ostringstream s;
    for (const auto& chk : j["checks"])
      s << (chk["passed"].get<bool>() ? "PASS " : "FAIL ") << chk["name"].get<std::string>()
        << " (" << chk["checked"] << " checked) " << chk["detail"].get<std::string>() << "\n";
    s << j["suite"].get<std::string>() << ": " << (passed ? "pass" : "fail") << "\n";
    out = s.str();
  } else {
    out = j.dump(2) + "\n";
  }
  return passed ? 0 : 1;
}

void emit(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f || !(f << text)) throw std::runtime_error("cannot write " + c.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orderings, level trees and configuration spaces"};
  app.require_subcommand(1);
  Config c;

  auto common = [&c](CLI::App* sub, bool with_labels) {
    sub->add_option("--n", c.n, "Dimension / tree height")->check(CLI::PositiveNumber);
    if (with_labels)
      sub->add_option("--labels", c.labels, "Comma-separated labels")->delimiter(',');
    sub->add_option("--max-edges", c.max_edges, "Largest tree size")->check(CLI::PositiveNumber);
    sub->add_option("--max-morphisms", c.max_morphisms, "Enumeration cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-chains", c.max_chains, "Order complex cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_option("--samples", c.samples, "Random samples per check");
    sub->add_option("--output,-o", c.output, "Write to this file instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List all n-orderings with their degrees");
  common(enumerate, true);
  enumerate->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the n-orderings");
  common(hasse, true);
  hasse->add_option("--format", c.format)->check(CLI::IsMember({"dot", "json"}));

  auto* homology = app.add_subcommand("homology", "Integral homology of the order complex");
  common(homology, true);
  homology->add_option("--format", c.format)->check(CLI::IsMember({"json", "text", "csv"}));
  homology->add_option("--boundary", c.boundary_degree, "Degree k of d_k for --format csv");

  auto* classify = app.add_subcommand("classify", "Fox-Neuwirth cell of a configuration");
  common(classify, false);
  classify->add_option("pointfile", c.point_file, "Point file, '-' for stdin")->required();
  classify->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  common(verify, true);
  verify->add_option("suite", c.suite, "theorem-a, theorem-b, morphisms, poset or cells")
      ->required();
  verify->add_option("--unit-max-edges", c.unit_max_edges, "Largest unhealthy tree");
  verify->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);
  if (verify->parsed() && verify->count("--labels") == 0) c.labels = {"a", "b", "c"};

  try {
    int code = 0;
    std::string text;
    if (enumerate->parsed()) text = run_enumerate(c);
    else if (hasse->parsed()) text = run_hasse(c);
    else if (homology->parsed()) text = run_homology(c);
    else if (classify->parsed()) text = run_classify(c);
    else code = run_verify(c, text);
    emit(c, text);
    return code;
  } catch (const Failure& f) {
    std::cerr << "error: " << tc_status_message(f.status) << ": " << tc_last_error() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
