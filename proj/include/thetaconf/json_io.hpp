#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "thetaconf/fox_neuwirth.hpp"
#include "thetaconf/gamma_delta.hpp"
#include "thetaconf/homology.hpp"
#include "thetaconf/nord.hpp"
#include "thetaconf/theta.hpp"
#include "thetaconf/theta_a.hpp"
#include "thetaconf/tree.hpp"

namespace thetaconf::json {

using nlohmann::json;

// Trees as nested child arrays: "[]" is the root-only tree, "[[],[]]" is [2].
json tree_to_json(const PlanarLevelTree& t);
PlanarLevelTree tree_from_json(const json& j, int n);

/// Accepts either the bracket symbol or the nested-array JSON form.
PlanarLevelTree parse_tree_any(std::string_view text, int n);

json to_json(const DeltaMorphism& f);
DeltaMorphism delta_from_json(const json& j);

/// Elements are named by `source` / `target`; empty label lists fall back to
/// the Segal names "1".."k".
json to_json(const GammaMorphism& g, const std::vector<std::string>& source = {},
             const std::vector<std::string>& target = {});
GammaMorphism gamma_from_json(const json& j);

json to_json(const ThetaMorphism& f);
ThetaMorphism theta_from_json(const json& j);

json to_json(const NOrdering& s);
NOrdering nordering_from_json(const json& j);

json to_json(const LabelledThetaObject& s);
LabelledThetaObject labelled_from_json(const json& j);

json to_json(const HomologyResult& h);

json to_json(const Configuration& phi);

/// Leaf ids rendered for display, e.g. "(0,1)".
std::vector<std::string> leaf_names(const std::vector<LeafId>& leaves);

}  // namespace thetaconf::json
