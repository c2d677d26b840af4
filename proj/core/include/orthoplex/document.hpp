#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "orthoplex/orthocentric.hpp"
#include "orthoplex/simplex.hpp"

namespace orthoplex {

using Json = nlohmann::json;

/// {"dim": d, "vertices": [[...], ...], "metadata": {"label": ...}}.
struct SimplexDocument {
  Simplex simplex;
  std::optional<std::string> label;
};

Json point_to_json(const Vector& p);
Vector point_from_json(const Json& j, const char* what = "point");

Json simplex_to_json(const Simplex& s, const std::optional<std::string>& label = std::nullopt);

/// Throws InputError for malformed documents (wrong types or arity, d < 2,
/// non-finite numbers) and DegeneracyError for degenerate vertices.
SimplexDocument simplex_from_json(const Json& j, const TolerancePolicy& policy = {});

Json params_to_json(const OrthoParams& p);

/// Full analysis: centers, metrics, orthocentric parameters, shape
/// predicates, Euler line, Feuerbach spheres and facet circumradii.
Json analysis_to_json(const Simplex& s, const TolerancePolicy& policy = {});

}  // namespace orthoplex
