#include "orthoplex/document.hpp"

#include <cmath>

#include "orthoplex/centers.hpp"

namespace orthoplex {

Json point_to_json(const Vector& p) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) out.push_back(p(i));
  return out;
}

Vector point_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of numbers");
  Vector out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError(std::string(what) + " must contain only numbers");
    const double v = j[i].get<double>();
    if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
    out(static_cast<Eigen::Index>(i)) = v;
  }
  return out;
}

Json simplex_to_json(const Simplex& s, const std::optional<std::string>& label) {
  Json out;
  out["dim"] = s.dim();
  Json verts = Json::array();
  for (const Point& v : s.vertices()) verts.push_back(point_to_json(v));
  out["vertices"] = std::move(verts);
  if (label) out["metadata"] = {{"label", *label}};
  return out;
}

SimplexDocument simplex_from_json(const Json& j, const TolerancePolicy& policy) {
  if (!j.is_object()) throw InputError("simplex document must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw InputError("simplex document needs an integer \"dim\"");
  const auto dim = j["dim"].get<long long>();
  if (dim < 2 || dim > 64) throw InputError("\"dim\" must be between 2 and 64");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw InputError("simplex document needs a \"vertices\" array");
  const Json& verts = j["vertices"];
  if (verts.size() != static_cast<std::size_t>(dim) + 1) {
    throw InputError("expected " + std::to_string(dim + 1) + " vertices, got " + std::to_string(verts.size()));
  }
  PointList pts;
  for (const Json& v : verts) {
    Point p = point_from_json(v, "vertex");
    if (p.size() != dim) throw InputError("every vertex needs " + std::to_string(dim) + " coordinates");
    pts.push_back(std::move(p));
  }
  std::optional<std::string> label;
  if (j.contains("metadata")) {
    const Json& meta = j["metadata"];
    if (!meta.is_object()) throw InputError("\"metadata\" must be an object");
    if (meta.contains("label")) {
      if (!meta["label"].is_string()) throw InputError("\"metadata.label\" must be a string");
      label = meta["label"].get<std::string>();
    }
  }
  return {Simplex::from_vertices(static_cast<int>(dim), std::move(pts), policy), label};
}

Json params_to_json(const OrthoParams& p) {
  Json out;
  out["bary"] = point_to_json(p.bary);
  out["obtuseness"] = p.obtuseness;
  out["class"] = to_string(p.cls);
  out["rectangular_vertex"] = p.rectangular_vertex ? Json(*p.rectangular_vertex) : Json(nullptr);
  return out;
}

Json analysis_to_json(const Simplex& s, const TolerancePolicy& policy) {
  const CenterReport report = center_report(s, policy);
  Json out;
  out["dim"] = s.dim();

  Json centers;
  centers["centroid"] = point_to_json(report.centroid);
  centers["circumcenter"] = point_to_json(report.circumcenter);
  centers["circumradius"] = report.circumradius;
  centers["incenter"] = point_to_json(report.incenter);
  centers["inradius"] = report.inradius;
  centers["monge"] = point_to_json(report.monge);
  centers["orthocenter"] = report.orthocenter ? point_to_json(*report.orthocenter) : Json(nullptr);
  out["centers"] = std::move(centers);

  Json pairs = Json::array();
  for (const auto& [x, y] : report.coincident_pairs) pairs.push_back({x, y});
  out["coincident_pairs"] = std::move(pairs);

  out["metrics"] = {{"volume", volume(s)},
                    {"circumradius", report.circumradius},
                    {"inradius", report.inradius},
                    {"diameter", diameter(s)}};

  const bool ortho = report.orthocenter.has_value();
  out["orthocentric"] = ortho;
  out["ortho_params"] = nullptr;
  if (ortho) {
    try {
      out["ortho_params"] = params_to_json(params_of(s, policy));
    } catch (const NumericError& e) {
      out["ortho_params_error"] = e.what();
    }
  }

  const ShapePredicates shape = shape_predicates(s, policy);
  const Vector cb = barycentric(s, report.circumcenter);
  out["shape"] = {{"is_regular", shape.is_regular},
                  {"is_equiareal", shape.is_equiareal},
                  {"is_equiradial", shape.is_equiradial},
                  {"has_well_distributed_edges", shape.has_well_distributed_edges},
                  {"circumcenter_interior", cb.minCoeff() > policy.rel()}};

  out["euler"] = nullptr;
  if (ortho) {
    const EulerLine line = euler_line(s, policy);
    out["euler"] = {{"coincident", line.coincident},
                    {"ratio", line.ratio ? Json(*line.ratio) : Json(nullptr)},
                    {"collinearity_residual", line.collinearity_residual}};
  }

  Json feuerbach = Json::array();
  for (int k = ortho ? 0 : s.dim() - 1; k < s.dim(); ++k) {
    const FeuerbachSphere f = feuerbach_sphere(s, k, policy);
    Json item = {{"k", f.k}, {"center", point_to_json(f.center)}, {"radius", f.radius}, {"max_residual", f.max_residual}};
    if (f.feet_max_residual) item["feet_max_residual"] = *f.feet_max_residual;
    feuerbach.push_back(std::move(item));
  }
  out["feuerbach"] = std::move(feuerbach);

  out["facet_circumradii"] = facet_circumradii(s);
  out["tolerance"] = {{"rel", policy.rel()}, {"abs", policy.abs()}, {"rank_cut", policy.rank_cut()}};
  return out;
}

}  // namespace orthoplex
