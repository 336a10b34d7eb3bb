#include "thetaconf/json_io.hpp"

#include <map>

#include "thetaconf/error.hpp"

namespace thetaconf::json {

namespace {

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

PlanarLevelTree tree_from_json_at(const json& j, int level, int n) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "tree JSON must be nested arrays");
  if (!j.empty() && level + 1 > n)
    throw_invalid("tree height exceeds n = " + std::to_string(n));
  std::vector<PlanarLevelTree> children;
  for (const auto& c : j) children.push_back(tree_from_json_at(c, level + 1, n));
  return PlanarLevelTree(std::move(children));
}

json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() &&
      v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::vector<std::string> segal_names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

json tree_to_json(const PlanarLevelTree& t) {
  json j = json::array();
  for (const auto& c : t.children()) j.push_back(tree_to_json(c));
  return j;
}

PlanarLevelTree tree_from_json(const json& j, int n) {
  if (n < 1) throw_invalid("height parameter n must be at least 1");
  return tree_from_json_at(j, 0, n);
}

PlanarLevelTree parse_tree_any(std::string_view text, int n) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.size() > first + 1) {
    const auto second = text.find_first_not_of(" \t\r\n", first + 1);
    // "[[" or "[]" can only be JSON; "[<digit>" is the bracket symbol.
    if (second != std::string_view::npos && (text[second] == '[' || text[second] == ']'))
      return guarded([&] { return tree_from_json(json::parse(text), n); });
  }
  return parse_symbol(text, n);
}

json to_json(const DeltaMorphism& f) {
  return json{{"s", f.source}, {"t", f.target}, {"values", f.values}};
}

DeltaMorphism delta_from_json(const json& j) {
  return guarded([&] {
    return make_delta(j.at("s").get<int>(), j.at("t").get<int>(),
                      j.at("values").get<std::vector<int>>());
  });
}

json to_json(const GammaMorphism& g, const std::vector<std::string>& source,
             const std::vector<std::string>& target) {
  const auto src = source.empty() ? segal_names(g.source_size()) : source;
  const auto tgt = target.empty() ? segal_names(g.target_size()) : target;
  if (src.size() != g.source_size() || tgt.size() != g.target_size())
    throw_invalid("label lists do not match the gamma morphism");
  json map = json::object();
  for (std::size_t x = 0; x < g.source_size(); ++x) {
    json img = json::array();
    for (std::size_t y : g.image(x)) img.push_back(tgt[y]);
    map[src[x]] = img;
  }
  return json{{"source", src}, {"target", tgt}, {"map", map}};
}

GammaMorphism gamma_from_json(const json& j) {
  return guarded([&] {
    const auto src = j.at("source").get<std::vector<std::string>>();
    const auto tgt = j.at("target").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> where;
    for (std::size_t k = 0; k < tgt.size(); ++k)
      if (!where.emplace(tgt[k], k).second) throw_invalid("duplicate target element");
    const auto& map = j.at("map");
    std::vector<ElementSet> images(src.size());
    for (std::size_t x = 0; x < src.size(); ++x) {
      if (!map.contains(src[x])) continue;
      for (const auto& y : map.at(src[x])) {
        auto it = where.find(y.get<std::string>());
        if (it == where.end()) throw_invalid("image element not in the target");
        images[x].push_back(it->second);
      }
      std::sort(images[x].begin(), images[x].end());
    }
    return GammaMorphism(src.size(), tgt.size(), std::move(images));
  });
}

json to_json(const ThetaMorphism& f) {
  json parts = json::object();
  if (f.level > 1)
    for (int i = 1; i <= f.delta.source; ++i)
      for (int j = f.delta(i - 1) + 1; j <= f.delta(i); ++j)
        parts[std::to_string(i) + "," + std::to_string(j)] = to_json(f.part(i, j));
  return json{{"n", f.level},
              {"delta", f.delta.values},
              {"s", f.delta.source},
              {"t", f.delta.target},
              {"parts", parts}};
}

ThetaMorphism theta_from_json(const json& j) {
  return guarded([&] {
    ThetaMorphism f;
    f.level = j.at("n").get<int>();
    auto values = j.at("delta").get<std::vector<int>>();
    if (values.empty()) throw_invalid("delta part needs at least one value");
    const int s = static_cast<int>(values.size()) - 1;
    const int t = j.contains("t") ? j.at("t").get<int>() : values.back();
    f.delta = make_delta(s, t, std::move(values));
    if (f.level > 1) {
      const auto& parts = j.at("parts");
      for (int i = 1; i <= s; ++i)
        for (int jj = f.delta(i - 1) + 1; jj <= f.delta(i); ++jj) {
          const std::string key = std::to_string(i) + "," + std::to_string(jj);
          if (!parts.contains(key)) throw_invalid("missing part " + key);
          f.parts.push_back(theta_from_json(parts.at(key)));
        }
    }
    return f;
  });
}

json to_json(const NOrdering& s) {
  return json{{"labels", s.labels}, {"word", s.word}, {"n", s.n}};
}

NOrdering nordering_from_json(const json& j) {
  return guarded([&] {
    return make_nordering(j.at("n").get<int>(),
                          j.at("labels").get<std::vector<std::string>>(),
                          j.at("word").get<std::vector<int>>());
  });
}

json to_json(const LabelledThetaObject& s) {
  return json{{"tree", render_symbol(s.tree, s.n)}, {"n", s.n}, {"labels", s.labels}};
}

LabelledThetaObject labelled_from_json(const json& j) {
  return guarded([&] {
    const int n = j.at("n").get<int>();
    return make_labelled(parse_symbol(j.at("tree").get<std::string>(), n), n,
                         j.at("labels").get<std::vector<std::string>>());
  });
}

json to_json(const HomologyResult& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) {
    json row = json::array();
    for (const auto& v : t) row.push_back(big_to_json(v));
    torsion.push_back(row);
  }
  return json{{"betti", h.betti},
              {"torsion", torsion},
              {"euler", h.euler},
              {"simplex_counts", h.simplex_counts}};
}

json to_json(const Configuration& phi) {
  json pts = json::object();
  for (std::size_t k = 0; k < phi.labels.size(); ++k) {
    json p = json::array();
    for (const auto& c : phi.points[k]) p.push_back(to_string(c));
    pts[phi.labels[k]] = p;
  }
  return json{{"n", phi.n}, {"points", pts}};
}

std::vector<std::string> leaf_names(const std::vector<LeafId>& leaves) {
  std::vector<std::string> out;
  for (const auto& l : leaves) out.push_back(to_string(l));
  return out;
}

}  // namespace thetaconf::json
