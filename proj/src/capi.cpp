#include "thetaconf/thetaconf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "thetaconf/error.hpp"
#include "thetaconf/fox_neuwirth.hpp"
#include "thetaconf/homology.hpp"
#include "thetaconf/json_io.hpp"
#include "thetaconf/nord.hpp"
#include "thetaconf/tree.hpp"
#include "thetaconf/verify.hpp"

struct tc_tree {
  thetaconf::PlanarLevelTree tree;
  int n;
};

struct tc_poset {
  thetaconf::PosetView view;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

struct tc_homology {
  thetaconf::ChainComplex chains;
  thetaconf::HomologyResult result;
};

namespace {

thread_local std::string last_error;

tc_status set_error(tc_status status, const char* what) {
  last_error = what;
  return status;
}

template <class F>
tc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TC_OK;
  } catch (const thetaconf::Error& e) {
    switch (e.code()) {
      case thetaconf::ErrorCode::InvalidArgument:
        return set_error(TC_ERR_INVALID_ARGUMENT, e.what());
      case thetaconf::ErrorCode::Parse:
        return set_error(TC_ERR_PARSE, e.what());
      case thetaconf::ErrorCode::Precondition:
        return set_error(TC_ERR_PRECONDITION, e.what());
      case thetaconf::ErrorCode::ResourceLimit:
        return set_error(TC_ERR_RESOURCE_LIMIT, e.what());
    }
    return set_error(TC_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(TC_ERR_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return set_error(TC_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(TC_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

void need(const void* p, const char* name) {
  if (!p) thetaconf::throw_invalid(std::string(name) + " is null");
}

thetaconf::LabelSet labels_from(const char* const* labels, std::size_t count) {
  if (count > 0) need(labels, "labels");
  thetaconf::LabelSet out;
  for (std::size_t k = 0; k < count; ++k) {
    need(labels[k], "label");
    out.emplace_back(labels[k]);
  }
  return out;
}

tc_limits limits_or_default(const tc_limits* limits) {
  return limits ? *limits : tc_limits_default();
}

void check_limits(const tc_limits& l) {
  if (l.max_edges == 0 || l.max_morphisms == 0 || l.max_chains == 0)
    thetaconf::throw_invalid("caps must be positive");
}

const thetaconf::NOrdering& element(const tc_poset* poset, std::size_t index) {
  need(poset, "poset");
  if (index >= poset->view.elements.size()) thetaconf::throw_invalid("element index out of range");
  return poset->view.elements[index];
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "0.1.0"; }

const char* tc_status_message(tc_status status) {
  switch (status) {
    case TC_OK: return "ok";
    case TC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TC_ERR_PARSE: return "parse error";
    case TC_ERR_PRECONDITION: return "precondition violated";
    case TC_ERR_RESOURCE_LIMIT: return "resource limit exceeded";
    case TC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tc_last_error(void) { return last_error.c_str(); }

void tc_string_free(char* s) { std::free(s); }

tc_limits tc_limits_default(void) {
  return tc_limits{6, thetaconf::kDefaultMorphismCap, thetaconf::kDefaultChainCap};
}

tc_status tc_tree_parse(const char* text, int n, tc_tree** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = nullptr;
    auto tree = thetaconf::json::parse_tree_any(text, n);
    *out = new tc_tree{std::move(tree), n};
  });
}

void tc_tree_free(tc_tree* tree) { delete tree; }

tc_status tc_tree_render(const tc_tree* tree, char** out) {
  return guarded([&] {
    need(tree, "tree");
    need(out, "out");
    *out = dup(thetaconf::render_symbol(tree->tree, tree->n));
  });
}

tc_status tc_tree_to_json(const tc_tree* tree, char** out) {
  return guarded([&] {
    need(tree, "tree");
    need(out, "out");
    *out = dup(thetaconf::json::tree_to_json(tree->tree).dump());
  });
}

int tc_tree_height_bound(const tc_tree* tree) { return tree ? tree->n : 0; }

size_t tc_tree_edge_count(const tc_tree* tree) { return tree ? tree->tree.edge_count() : 0; }

size_t tc_tree_leaf_count(const tc_tree* tree) {
  return tree ? thetaconf::count_level_n_leaves(tree->tree, tree->n) : 0;
}

int tc_tree_is_healthy(const tc_tree* tree) {
  return tree && thetaconf::is_healthy(tree->tree, tree->n) ? 1 : 0;
}

tc_status tc_tree_healthify(const tc_tree* tree, tc_tree** out) {
  return guarded([&] {
    need(tree, "tree");
    need(out, "out");
    *out = new tc_tree{thetaconf::healthify(tree->tree, tree->n), tree->n};
  });
}

tc_status tc_poset_create(int n, const char* const* labels, size_t label_count,
                          const tc_limits* limits, tc_poset** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    const tc_limits l = limits_or_default(limits);
    check_limits(l);
    auto view = thetaconf::build_nord_poset(labels_from(labels, label_count), n, l.max_morphisms);
    auto covers = view.covers();
    *out = new tc_poset{std::move(view), std::move(covers)};
  });
}

void tc_poset_free(tc_poset* poset) { delete poset; }

size_t tc_poset_size(const tc_poset* poset) { return poset ? poset->view.elements.size() : 0; }

tc_status tc_poset_element_text(const tc_poset* poset, size_t index, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(thetaconf::to_text(element(poset, index)));
  });
}

tc_status tc_poset_element_json(const tc_poset* poset, size_t index, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(thetaconf::json::to_json(element(poset, index)).dump());
  });
}

tc_status tc_poset_element_tree(const tc_poset* poset, size_t index, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto& s = element(poset, index);
    *out = dup(thetaconf::render_symbol(thetaconf::to_tree(s), s.n));
  });
}

tc_status tc_poset_degree(const tc_poset* poset, size_t index, size_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = thetaconf::degree(element(poset, index));
  });
}

tc_status tc_poset_leq(const tc_poset* poset, size_t i, size_t j, int* out) {
  return guarded([&] {
    need(out, "out");
    element(poset, i);
    element(poset, j);
    *out = poset->view.order.leq(i, j) ? 1 : 0;
  });
}

size_t tc_poset_cover_count(const tc_poset* poset) { return poset ? poset->covers.size() : 0; }

tc_status tc_poset_cover(const tc_poset* poset, size_t k, size_t* lower, size_t* upper) {
  return guarded([&] {
    need(poset, "poset");
    need(lower, "lower");
    need(upper, "upper");
    if (k >= poset->covers.size()) thetaconf::throw_invalid("cover index out of range");
    *lower = poset->covers[k].first;
    *upper = poset->covers[k].second;
  });
}

tc_status tc_poset_to_dot(const tc_poset* poset, char** out) {
  return guarded([&] {
    need(poset, "poset");
    need(out, "out");
    std::ostringstream dot;
    dot << "digraph nord {\n  rankdir=BT;\n";
    const auto& els = poset->view.elements;
    for (std::size_t i = 0; i < els.size(); ++i)
      dot << "  v" << i << " [label=\"" << thetaconf::to_text(els[i]) << "\"];\n";
    for (const auto& [x, y] : poset->covers) dot << "  v" << x << " -> v" << y << ";\n";
    dot << "}\n";
    *out = dup(dot.str());
  });
}

tc_status tc_poset_to_json(const tc_poset* poset, char** out) {
  return guarded([&] {
    need(poset, "poset");
    need(out, "out");
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& s : poset->view.elements) {
      auto j = thetaconf::json::to_json(s);
      j["text"] = thetaconf::to_text(s);
      j["degree"] = thetaconf::degree(s);
      nodes.push_back(std::move(j));
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [x, y] : poset->covers) edges.push_back({x, y});
    nlohmann::json doc{{"n", poset->view.n},
                       {"labels", poset->view.labels},
                       {"nodes", nodes},
                       {"edges", edges}};
    *out = dup(doc.dump());
  });
}

tc_status tc_poset_homology(const tc_poset* poset, const tc_limits* limits, tc_homology** out) {
  return guarded([&] {
    need(poset, "poset");
    need(out, "out");
    *out = nullptr;
    const tc_limits l = limits_or_default(limits);
    check_limits(l);
    const auto cx = thetaconf::order_complex(poset->view.order, l.max_chains);
    auto cc = thetaconf::boundary_matrices(cx);
    auto h = thetaconf::homology(cc);
    if (h.euler != h.betti_alternating_sum())
      throw thetaconf::Error(thetaconf::ErrorCode::Precondition,
                             "Euler characteristic disagrees with the Betti numbers");
    *out = new tc_homology{std::move(cc), std::move(h)};
  });
}

void tc_homology_free(tc_homology* h) { delete h; }

size_t tc_homology_degree_count(const tc_homology* h) { return h ? h->result.betti.size() : 0; }

size_t tc_homology_betti(const tc_homology* h, size_t degree) {
  return h && degree < h->result.betti.size() ? h->result.betti[degree] : 0;
}

size_t tc_homology_torsion_count(const tc_homology* h, size_t degree) {
  return h && degree < h->result.torsion.size() ? h->result.torsion[degree].size() : 0;
}

long long tc_homology_euler(const tc_homology* h) { return h ? h->result.euler : 0; }

tc_status tc_homology_to_json(const tc_homology* h, char** out) {
  return guarded([&] {
    need(h, "homology");
    need(out, "out");
    *out = dup(thetaconf::json::to_json(h->result).dump());
  });
}

tc_status tc_homology_boundary_csv(const tc_homology* h, size_t k, char** out) {
  return guarded([&] {
    need(h, "homology");
    need(out, "out");
    if (k >= h->chains.boundaries.size()) thetaconf::throw_invalid("no boundary matrix in that degree");
    *out = dup(thetaconf::boundary_csv(h->chains.boundaries[k]));
  });
}

tc_status tc_classify_points(const char* point_file, int n, char** text_out, char** json_out) {
  return guarded([&] {
    need(point_file, "point_file");
    need(text_out, "text_out");
    const auto phi = thetaconf::parse_point_file(point_file, n);
    const auto s = thetaconf::cell_of(phi);
    std::string text = thetaconf::to_text(s);
    std::string js;
    if (json_out) {
      auto j = thetaconf::json::to_json(s);
      j["text"] = text;
      j["degree"] = thetaconf::degree(s);
      js = j.dump();
    }
    *text_out = dup(text);
    if (json_out) *json_out = dup(js);
  });
}

tc_verify_options tc_verify_options_default(void) {
  const thetaconf::VerifyOptions d;
  tc_verify_options o{};
  o.n = d.n;
  o.labels = nullptr;
  o.label_count = 0;
  o.limits = tc_limits{d.max_edges, d.max_morphisms, d.max_chains};
  o.unit_max_edges = d.unit_max_edges;
  o.seed = d.seed;
  o.samples = d.samples;
  o.threads = d.threads;
  return o;
}

tc_status tc_verify(const char* suite, const tc_verify_options* options, char** report_json,
                    int* passed) {
  return guarded([&] {
    need(suite, "suite");
    need(report_json, "report_json");
    need(passed, "passed");
    const tc_verify_options o = options ? *options : tc_verify_options_default();
    check_limits(o.limits);
    thetaconf::VerifyOptions v;
    v.n = o.n;
    if (o.label_count > 0) v.labels = labels_from(o.labels, o.label_count);
    v.max_edges = o.limits.max_edges;
    v.max_morphisms = o.limits.max_morphisms;
    v.max_chains = o.limits.max_chains;
    v.unit_max_edges = o.unit_max_edges;
    v.seed = o.seed;
    v.samples = o.samples;
    v.threads = o.threads;
    const auto report = thetaconf::run_suite(suite, v);
    *report_json = dup(thetaconf::report_to_json(report, v).dump(2));
    *passed = report.passed ? 1 : 0;
  });
}

}  // extern "C"
