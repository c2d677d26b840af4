#include "orthoplex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "orthoplex/centers.hpp"
#include "orthoplex/families.hpp"
#include "orthoplex/orthocentric.hpp"
#include "orthoplex/random.hpp"

namespace orthoplex {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Bound on max center separation / (diameter * relative edge spread) for
// simplices near a regular one; the measured worst case over d = 2..10 is
// about 1.2.
constexpr double kContinuityBound = 10.0;

struct Context {
  TolerancePolicy policy;
  std::function<Sphere(const Simplex&)> incenter_fn;

  Sphere in(const Simplex& s) const { return incenter_fn ? incenter_fn(s) : incenter(s); }
};

using CheckFn = double (*)(const Simplex&, const Json&, const Context&);

enum class Bound { at_most, at_least };

double dist_rel(const Point& x, const Point& y, double diam) {
  return (x - y).norm() / diam;
}

std::vector<double> edge_lengths(const Simplex& s) {
  std::vector<double> out;
  for (std::size_t i = 0; i < s.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < s.vertex_count(); ++j) out.push_back(s.edge_length(i, j));
  }
  return out;
}

IndexList indices_from_json(const Json& j) {
  IndexList out;
  for (const Json& v : j) out.push_back(v.get<std::size_t>());
  return out;
}

OrthoParams params_from_json(const Json& j) {
  OrthoParams p;
  p.bary = point_from_json(j.at("bary"), "bary");
  p.dim = static_cast<int>(p.bary.size()) - 1;
  p.obtuseness = j.at("obtuseness").get<double>();
  p.cls = j.contains("class") ? ortho_class_from_string(j["class"].get<std::string>())
                              : (p.obtuseness < 0.0 ? OrthoClass::acute : OrthoClass::obtuse);
  return p;
}

// Pairwise separations among {G, C, I, H or M} divided by the diameter.
std::vector<double> center_separations(const Simplex& s, const Context& ctx, bool need_orthocenter) {
  const double diam = diameter(s);
  std::vector<Point> pts{centroid(s), circumcenter(s).center, ctx.in(s).center};
  const std::optional<Point> h = orthocenter(s, ctx.policy);
  if (!h && need_orthocenter) throw PreconditionError("simplex is not orthocentric");
  pts.push_back(h ? *h : monge_point(s));
  std::vector<double> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back(dist_rel(pts[i], pts[j], diam));
  }
  return out;
}

// ---- center equivalences ----

double check_circumcenter_contract(const Simplex& s, const Json&, const Context&) {
  const Sphere c = circumcenter(s);
  double worst = 0.0;
  for (const Point& v : s.vertices()) worst = std::max(worst, std::abs((v - c.center).norm() - c.radius) / c.radius);
  return worst;
}

double check_incenter_contract(const Simplex& s, const Json&, const Context& ctx) {
  const Sphere in = ctx.in(s);
  double worst = 0.0;
  for (std::size_t i = 0; i < s.vertex_count(); ++i) {
    worst = std::max(worst, std::abs(facet_hyperplane_distance(s, i, in.center) - in.radius) / in.radius);
  }
  return worst;
}

// "lhs holds with a 10x margin" forces "rhs within tolerance"; the residual
// is the rhs measure, or 0 when the hypothesis does not hold.
double implication(double hypothesis, double conclusion, double tol) {
  return hypothesis <= tol / 10.0 ? conclusion : 0.0;
}

double check_incenter_centroid_forward(const Simplex& s, const Json&, const Context& ctx) {
  const double u = dist_rel(ctx.in(s).center, centroid(s), diameter(s));
  return implication(u, relative_spread(facet_volumes(s)), ctx.policy.rel());
}

double check_incenter_centroid_backward(const Simplex& s, const Json&, const Context& ctx) {
  const double u = dist_rel(ctx.in(s).center, centroid(s), diameter(s));
  return implication(relative_spread(facet_volumes(s)), u, ctx.policy.rel());
}

double check_circumcenter_centroid_forward(const Simplex& s, const Json&, const Context& ctx) {
  const double u = dist_rel(circumcenter(s).center, centroid(s), diameter(s));
  return implication(u, relative_spread(facet_squared_edge_sums(s)), ctx.policy.rel());
}

double check_circumcenter_centroid_backward(const Simplex& s, const Json&, const Context& ctx) {
  const double u = dist_rel(circumcenter(s).center, centroid(s), diameter(s));
  return implication(relative_spread(facet_squared_edge_sums(s)), u, ctx.policy.rel());
}

double check_circumcenter_incenter_forward(const Simplex& s, const Json&, const Context& ctx) {
  const Point c = circumcenter(s).center;
  const double u = dist_rel(c, ctx.in(s).center, diameter(s));
  const double outside = std::max(0.0, -barycentric(s, c).minCoeff());
  return implication(u, std::max(relative_spread(facet_circumradii(s)), outside), ctx.policy.rel());
}

double check_circumcenter_incenter_backward(const Simplex& s, const Json&, const Context& ctx) {
  const Point c = circumcenter(s).center;
  const double tol = ctx.policy.rel();
  if (barycentric(s, c).minCoeff() < 10.0 * tol) return 0.0;
  return implication(relative_spread(facet_circumradii(s)), dist_rel(c, ctx.in(s).center, diameter(s)), tol);
}

// ---- regularity ----

double check_orthocentric(const Simplex& s, const Json&, const Context&) {
  return orthocentricity_residual(s);
}

double check_centers_separated(const Simplex& s, const Json&, const Context& ctx) {
  const std::vector<double> sep = center_separations(s, ctx, true);
  return *std::min_element(sep.begin(), sep.end());
}

double check_centers_coincide(const Simplex& s, const Json&, const Context& ctx) {
  const std::vector<double> sep = center_separations(s, ctx, false);
  return *std::max_element(sep.begin(), sep.end());
}

double check_continuity(const Simplex& s, const Json&, const Context& ctx) {
  const std::vector<double> sep = center_separations(s, ctx, false);
  return *std::max_element(sep.begin(), sep.end());
}

// ---- Euler line and Feuerbach spheres ----

double check_euler_collinearity(const Simplex& s, const Json&, const Context& ctx) {
  return euler_line(s, ctx.policy).collinearity_residual / diameter(s);
}

double check_euler_ratio(const Simplex& s, const Json&, const Context& ctx) {
  const EulerLine line = euler_line(s, ctx.policy);
  if (line.coincident) return 0.0;
  const double expected = (s.dim() - 1.0) / 2.0;
  return std::abs(*line.ratio - expected) / expected;
}

double check_vertex_sum(const Simplex& s, const Json&, const Context& ctx) {
  const std::optional<Point> h = orthocenter(s, ctx.policy);
  if (!h) throw PreconditionError("simplex is not orthocentric");
  const Point c = circumcenter(s).center;
  Point sum = Point::Zero(s.dim());
  for (const Point& v : s.vertices()) sum += v - c;
  return (sum - (s.dim() - 1.0) * (*h - c)).norm() / diameter(s);
}

double check_monge_property(const Simplex& s, const Json&, const Context&) {
  return monge_residual(s, monge_point(s)) / diameter(s);
}

double check_feuerbach(const Simplex& s, const Json& params, const Context& ctx) {
  const FeuerbachSphere f = feuerbach_sphere(s, params.at("k").get<int>(), ctx.policy);
  return f.max_residual / f.radius;
}

double check_feuerbach_feet(const Simplex& s, const Json&, const Context& ctx) {
  const FeuerbachSphere f = feuerbach_sphere(s, s.dim() - 1, ctx.policy);
  if (!f.feet_max_residual) throw PreconditionError("simplex is not orthocentric");
  return *f.feet_max_residual / f.radius;
}

double check_feuerbach_k0(const Simplex& s, const Json&, const Context& ctx) {
  const FeuerbachSphere f = feuerbach_sphere(s, 0, ctx.policy);
  const Sphere c = circumcenter(s);
  return std::max(dist_rel(f.center, c.center, diameter(s)), std::abs(f.radius - c.radius) / c.radius);
}

double check_feuerbach_radius(const Simplex& s, const Json&, const Context& ctx) {
  const FeuerbachSphere f = feuerbach_sphere(s, s.dim() - 1, ctx.policy);
  const double r = circumcenter(s).radius;
  return std::abs(f.radius - r / s.dim()) / r;
}

double check_egervary_reciprocal(const Simplex& s, const Json&, const Context& ctx) {
  const OrthoParams p = params_of(s, ctx.policy);
  const LambdaParams l = lambda_params(p);
  return std::abs(l.reciprocal_sum()) * std::abs(p.obtuseness);
}

double check_egervary_distances(const Simplex& s, const Json&, const Context& ctx) {
  const OrthoParams p = params_of(s, ctx.policy);
  const LambdaParams l = lambda_params(p);
  const Point h = monge_point(s);
  const double d2 = diameter(s) * diameter(s);
  double worst = 0.0;
  for (std::size_t i = 0; i < s.vertex_count(); ++i) {
    const double li = l.vertices(static_cast<Eigen::Index>(i));
    worst = std::max(worst, std::abs(l.orthocenter + li - (h - s.vertex(i)).squaredNorm()) / d2);
    for (std::size_t j = i + 1; j < s.vertex_count(); ++j) {
      worst = std::max(worst, std::abs(li + l.vertices(static_cast<Eigen::Index>(j)) - s.squared_edge(i, j)) / d2);
    }
  }
  return worst;
}

// ---- rectangular simplices ----

RectSpec legs_from_json(const Json& params) {
  RectSpec spec;
  for (const Json& b : params.at("legs")) spec.legs.push_back(b.get<double>());
  return spec;
}

double rel_err(double x, double ref) {
  return std::abs(x - ref) / std::abs(ref);
}

double check_rect_formulas(const Simplex& s, const Json& params, const Context& ctx) {
  const RectSpec spec = legs_from_json(params);
  const RectMetrics m = rect_metrics(spec);
  const int d = s.dim();
  const std::size_t corner = static_cast<std::size_t>(d);
  const double diam = diameter(s);
  const Sphere circ = circumcenter(s);
  double worst = rel_err(m.volume, volume(s));
  worst = std::max(worst, rel_err(m.hypotenuse_volume, measure(s.facet_vertices(corner))));
  worst = std::max(worst, rel_err(m.altitude, facet_hyperplane_distance(s, corner, s.vertex(corner))));
  worst = std::max(worst, rel_err(m.inradius, ctx.in(s).radius));
  worst = std::max(worst, rel_err(m.circumradius_sq, circ.radius * circ.radius));
  worst = std::max(worst, dist_rel(m.circumcenter, circ.center, diam));
  worst = std::max(worst, dist_rel(m.hypotenuse_orthocenter, altitude_feet(s)[corner], diam));
  return worst;
}

double check_rect_corner_orthocenter(const Simplex& s, const Json&, const Context& ctx) {
  const std::optional<Point> h = orthocenter(s, ctx.policy);
  if (!h) return kInf;
  return dist_rel(*h, s.vertex(static_cast<std::size_t>(s.dim())), diameter(s));
}

double check_rect_circumcenter_bary(const Simplex& s, const Json&, const Context&) {
  const int d = s.dim();
  Vector expected = Vector::Constant(d + 1, 0.5);
  expected(d) = (2.0 - d) / 2.0;
  return (barycentric(s, circumcenter(s).center) - expected).cwiseAbs().maxCoeff();
}

double check_lift_roundtrip(const Simplex& s, const Json& params, const Context& ctx) {
  std::vector<double> legs = legs_from_json(params).legs;
  IndexList hyp;
  for (int i = 0; i < s.dim(); ++i) hyp.push_back(static_cast<std::size_t>(i));
  std::vector<double> lifted = lift_to_rectangular(face(s, hyp, ctx.policy), ctx.policy).spec.legs;
  if (lifted.size() != legs.size()) return kInf;
  std::sort(legs.begin(), legs.end());
  std::sort(lifted.begin(), lifted.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < legs.size(); ++i) worst = std::max(worst, rel_err(lifted[i], legs[i]));
  return worst;
}

double check_lift_rejects(const Simplex& s, const Json&, const Context& ctx) {
  try {
    lift_to_rectangular(s, ctx.policy);
  } catch (const NotLiftableError&) {
    return 0.0;
  }
  return 1.0;
}

// ---- parametrization ----

double check_roundtrip(const Simplex& s, const Json& params, const Context& ctx) {
  const OrthoParams want = params_from_json(params);
  const OrthoParams got = params_of(s, ctx.policy);
  if (got.cls != want.cls || got.bary.size() != want.bary.size()) return 1.0;
  double worst = std::abs(got.obtuseness - want.obtuseness) / std::abs(want.obtuseness);
  for (Eigen::Index i = 0; i < want.bary.size(); ++i) {
    worst = std::max(worst, std::abs(got.bary(i) - want.bary(i)) / std::max(1.0, std::abs(want.bary(i))));
  }
  return worst;
}

double check_sign_law(const Simplex& s, const Json& params, const Context& ctx) {
  const OrthoParams p = params_from_json(params);
  for (std::size_t i = 0; i < s.vertex_count(); ++i) {
    const VertexAngle want = p.cls == OrthoClass::obtuse && p.bary(static_cast<Eigen::Index>(i)) > 0.0
                                 ? VertexAngle::strongly_obtuse
                                 : VertexAngle::strongly_acute;
    if (vertex_angle(s, i, ctx.policy) != want) return 1.0;
  }
  return 0.0;
}

double check_quadratic_form(const Simplex& s, const Json& params, const Context&) {
  const OrthoParams p = params_from_json(params);
  const Vector b = point_from_json(params.at("b"), "b");
  Point h = Point::Zero(s.dim());
  for (std::size_t i = 0; i < s.vertex_count(); ++i) h += p.bary(static_cast<Eigen::Index>(i)) * s.vertex(i);
  Point v = Point::Zero(s.dim());
  for (std::size_t i = 0; i < s.vertex_count(); ++i) v += b(static_cast<Eigen::Index>(i)) * (s.vertex(i) - h);
  const double formula = quadratic_form(p, std::span<const double>(b.data(), static_cast<std::size_t>(b.size())));
  const double scale = b.cwiseAbs().sum() * diameter(s);
  return std::abs(v.squaredNorm() - formula) / (scale * scale);
}

double check_face_restriction(const Simplex& s, const Json& params, const Context& ctx) {
  const IndexList face_idx = indices_from_json(params.at("face"));
  const OrthoParams whole = params_of(s, ctx.policy);
  const OrthoParams want = restrict_to_face(whole, face_idx);
  const OrthoParams got = params_of(face(s, face_idx, ctx.policy), ctx.policy);
  double worst = std::abs(got.obtuseness - want.obtuseness) / std::abs(want.obtuseness);
  for (Eigen::Index i = 0; i < want.bary.size(); ++i) {
    worst = std::max(worst, std::abs(got.bary(i) - want.bary(i)) / std::max(1.0, std::abs(want.bary(i))));
  }
  return worst;
}

double check_face_orthocentric(const Simplex& s, const Json& params, const Context& ctx) {
  return orthocentricity_residual(face(s, indices_from_json(params.at("face")), ctx.policy));
}

double check_orthocenter_off_faces(const Simplex& s, const Json& params, const Context&) {
  const OrthoParams p = params_from_json(params);
  Point h = Point::Zero(s.dim());
  for (std::size_t i = 0; i < s.vertex_count(); ++i) h += p.bary(static_cast<Eigen::Index>(i)) * s.vertex(i);
  const double diam = diameter(s);
  double best = kInf;
  for (std::size_t size = 1; size < s.vertex_count(); ++size) {
    for (const IndexList& idx : index_subsets(s.vertex_count(), size)) {
      PointList pts;
      for (std::size_t i : idx) pts.push_back(s.vertex(i));
      best = std::min(best, (h - project_to_hull(pts, h)).norm() / diam);
    }
  }
  return best;
}

double check_orthocentric_system(const Simplex& s, const Json&, const Context& ctx) {
  PointList pts = s.vertices();
  pts.push_back(monge_point(s));
  return orthocentric_system_check(pts, ctx.policy) ? 0.0 : 1.0;
}

double check_fiedler(const Simplex& s, const Json&, const Context&) {
  const Matrix c = dihedral_cosines(s);
  const auto n = c.rows();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          worst = std::max(worst, std::abs(c(i, j) * c(k, l) - c(i, k) * c(j, l)));
        }
      }
    }
  }
  return worst;
}

double check_circum_data(const Simplex& s, const Json& params, const Context&) {
  return circum_data(params_from_json(params), s).max_residual;
}

double check_circumcenter_bary(const Simplex& s, const Json& params, const Context&) {
  const OrthoParams p = params_from_json(params);
  const Vector got = barycentric(s, circumcenter(s).center);
  const Vector want = (Vector::Ones(got.size()) + (1.0 - s.dim()) * p.bary) / 2.0;
  const bool interior = circum_data(p, s).interior;
  // Ignore interiority disagreements caused by a coordinate at round-off
  // distance from zero.
  if (interior != (got.minCoeff() > 0.0) && std::abs(got.minCoeff()) > 1e-12) return 1.0;
  return (got - want).cwiseAbs().maxCoeff();
}

double check_altitude_data(const Simplex& s, const Json& params, const Context&) {
  return edge_and_altitude_data(params_from_json(params), s).max_residual;
}

double check_face_circumradius(const Simplex& s, const Json& params, const Context& ctx) {
  const IndexList idx = indices_from_json(params.at("face"));
  const double formula = face_circumradius_sq(params_of(s, ctx.policy), idx);
  PointList pts;
  for (std::size_t i : idx) pts.push_back(s.vertex(i));
  const double r = affine_circumsphere(pts).radius;
  return std::abs(formula - r * r) / (diameter(s) * diameter(s));
}

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> checks{
      {"circumcenter_contract", check_circumcenter_contract},
      {"incenter_contract", check_incenter_contract},
      {"incenter_centroid_vs_equiareal", check_incenter_centroid_forward},
      {"equiareal_vs_incenter_centroid", check_incenter_centroid_backward},
      {"circumcenter_centroid_vs_edge_sums", check_circumcenter_centroid_forward},
      {"edge_sums_vs_circumcenter_centroid", check_circumcenter_centroid_backward},
      {"circumcenter_incenter_vs_equiradial", check_circumcenter_incenter_forward},
      {"equiradial_vs_circumcenter_incenter", check_circumcenter_incenter_backward},
      {"orthocentric", check_orthocentric},
      {"centers_separated", check_centers_separated},
      {"centers_coincide", check_centers_coincide},
      {"continuity", check_continuity},
      {"euler_collinearity", check_euler_collinearity},
      {"euler_ratio", check_euler_ratio},
      {"vertex_sum", check_vertex_sum},
      {"monge_property", check_monge_property},
      {"feuerbach_equidistance", check_feuerbach},
      {"feuerbach_feet", check_feuerbach_feet},
      {"feuerbach_k0_is_circumsphere", check_feuerbach_k0},
      {"feuerbach_facet_radius", check_feuerbach_radius},
      {"egervary_reciprocal_sum", check_egervary_reciprocal},
      {"egervary_distances", check_egervary_distances},
      {"rect_formulas", check_rect_formulas},
      {"rect_corner_orthocenter", check_rect_corner_orthocenter},
      {"rect_circumcenter_bary", check_rect_circumcenter_bary},
      {"lift_roundtrip", check_lift_roundtrip},
      {"lift_rejects", check_lift_rejects},
      {"params_roundtrip", check_roundtrip},
      {"sign_law", check_sign_law},
      {"quadratic_form", check_quadratic_form},
      {"face_restriction", check_face_restriction},
      {"face_orthocentric", check_face_orthocentric},
      {"orthocenter_off_faces", check_orthocenter_off_faces},
      {"orthocentric_system", check_orthocentric_system},
      {"fiedler", check_fiedler},
      {"circum_data", check_circum_data},
      {"circumcenter_bary", check_circumcenter_bary},
      {"altitude_data", check_altitude_data},
      {"face_circumradius", check_face_circumradius},
  };
  return checks;
}

// ---- suite runner ----

class Runner {
 public:
  Runner(std::string suite, const SuiteConfig& config)
      : config_(config), ctx_{config.policy, config.incenter}, start_(std::chrono::steady_clock::now()) {
    report_.suite = std::move(suite);
  }

  const Context& ctx() const { return ctx_; }
  const SuiteConfig& config() const { return config_; }
  double rel() const { return config_.policy.rel(); }

  void sample() { ++report_.samples; }

  void check(const std::string& name, Bound bound, double threshold, const Simplex& s, const Json& params,
             const std::string& label) {
    ++report_.checks;
    double r = kNaN;
    std::optional<std::string> error;
    try {
      r = registry().at(name)(s, params, ctx_);
    } catch (const Error& e) {
      error = e.what();
    }
    bool ok = false;
    if (bound == Bound::at_most) {
      ok = r <= threshold;
      if (std::isfinite(r)) report_.max_residual = std::max(report_.max_residual, r);
    } else {
      ok = r > threshold;
      if (!std::isnan(r)) report_.min_separation = std::min(report_.min_separation.value_or(kInf), r);
    }
    if (!ok) fail(name, bound, r, threshold, &s, params, label, error);
  }

  // A sample that could not even be built.
  void construction_failed(const std::string& label, const Json& params, const std::string& what) {
    ++report_.checks;
    fail("construction", Bound::at_most, kNaN, 0.0, nullptr, params, label, what);
  }

  SuiteReport finish() {
    report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    return report_;
  }

 private:
  void fail(const std::string& name, Bound bound, double r, double threshold, const Simplex* s, const Json& params,
            const std::string& label, const std::optional<std::string>& error) {
    report_.pass = false;
    if (report_.counterexample) return;
    Json cx;
    cx["check"] = name;
    cx["bound"] = bound == Bound::at_most ? "at_most" : "at_least";
    cx["residual"] = std::isfinite(r) ? Json(r) : Json(nullptr);
    cx["threshold"] = threshold;
    cx["sample"] = label;
    cx["simplex"] = s ? simplex_to_json(*s) : Json(nullptr);
    cx["params"] = params;
    cx["error"] = error ? Json(*error) : Json(nullptr);
    report_.counterexample = std::move(cx);
  }

  const SuiteConfig& config_;
  Context ctx_;
  std::chrono::steady_clock::time_point start_;
  SuiteReport report_;
};

std::string label_of(const std::string& kind, int index, int d) {
  return kind + " #" + std::to_string(index) + " (d=" + std::to_string(d) + ")";
}

// A regular simplex of unit edge with every coordinate moved by up to
// `amplitude`; comfortably non-degenerate for amplitude <= 0.25.
Simplex random_simplex(int d, Rng& rng, double amplitude, const TolerancePolicy& policy) {
  PointList v = regular(d, 1.0, policy).vertices();
  for (Point& p : v) {
    for (Eigen::Index i = 0; i < p.size(); ++i) p(i) += rng.uniform(-amplitude, amplitude);
  }
  return Simplex::from_vertices(d, std::move(v), policy);
}

Simplex random_disphenoid(Rng& rng, const TolerancePolicy& policy) {
  const double a = rng.uniform(0.5, 1.5), b = rng.uniform(0.5, 1.5), c = rng.uniform(0.5, 1.5);
  PointList v{Point(Eigen::Vector3d(a, b, c)), Point(Eigen::Vector3d(a, -b, -c)), Point(Eigen::Vector3d(-a, b, -c)),
              Point(Eigen::Vector3d(-a, -b, c))};
  return Simplex::from_vertices(3, std::move(v), policy);
}

Json params_json(const Vector& a, double c, OrthoClass cls) {
  return {{"bary", point_to_json(a)}, {"obtuseness", c}, {"class", to_string(cls)}};
}

struct OrthoSample {
  std::string label;
  Simplex simplex;
  Json params;
};

// Orthocentric fixtures with known non-rectangular parameters.
std::vector<OrthoSample> ortho_fixtures(const SuiteConfig& cfg) {
  std::vector<OrthoSample> out;
  auto add = [&](const std::string& label, const Vector& a) {
    const OrthoClass cls = (a.array() > 0.0).all() ? OrthoClass::acute : OrthoClass::obtuse;
    out.push_back({label, construct(a, 1.0, cfg.policy), params_json(a, cls == OrthoClass::acute ? -1.0 : 1.0, cls)});
  };
  add("construct(1/3,1/3,1/3)", Vector::Constant(3, 1.0 / 3.0));
  add("construct(2,-0.5,-0.5)", Eigen::Vector3d(2.0, -0.5, -0.5));
  add("construct(0.4,0.3,0.2,0.1)", Eigen::Vector4d(0.4, 0.3, 0.2, 0.1));
  for (int branch = 1; branch <= 2; ++branch) {
    add("equiradial_general(9,2," + std::to_string(branch) + ")", equiradial_solve(9, 2, branch).bary());
  }
  for (int d = 5; d <= 7; ++d) {
    const Simplex k = kite(equiradial_kite(d), cfg.policy);
    const OrthoParams p = params_of(k, cfg.policy);
    out.push_back({"equiradial_kite(" + std::to_string(d) + ")", k, params_json(p.bary, p.obtuseness, p.cls)});
  }
  return out;
}

OrthoSample ortho_sample(const std::string& suite, int index, const SuiteConfig& cfg) {
  const int nd = cfg.d_max - cfg.d_min + 1;
  const int d = cfg.d_min + (index / 2) % nd;
  const OrthoClass cls = index % 2 == 0 ? OrthoClass::acute : OrthoClass::obtuse;
  const OrthoParams p = sample_params(d, cls, derive_seed(suite, static_cast<std::uint64_t>(index), cfg.seed));
  return {label_of(to_string(cls), index, d), construct(p.bary, 1.0, cfg.policy), params_json(p.bary, p.obtuseness, cls)};
}

// ---- suites ----

SuiteReport suite_equivalences(const SuiteConfig& cfg) {
  Runner run("equivalences", cfg);
  const double tol = run.rel();
  auto all_checks = [&](const Simplex& s, const std::string& label) {
    run.sample();
    const Json none = Json::object();
    run.check("circumcenter_contract", Bound::at_most, tol, s, none, label);
    run.check("incenter_contract", Bound::at_most, tol, s, none, label);
    for (const char* name : {"incenter_centroid_vs_equiareal", "equiareal_vs_incenter_centroid",
                             "circumcenter_centroid_vs_edge_sums", "edge_sums_vs_circumcenter_centroid",
                             "circumcenter_incenter_vs_equiradial", "equiradial_vs_circumcenter_incenter"}) {
      run.check(name, Bound::at_most, tol, s, none, label);
    }
  };

  for (int d = 2; d <= 8; ++d) all_checks(regular(d, 1.0, cfg.policy), "regular(" + std::to_string(d) + ")");
  all_checks(rectangular({{3.0, 4.0, 5.0}}, cfg.policy), "rectangular(3,4,5)");
  all_checks(equiradial_general(9, 2, 1, cfg.policy).simplex, "equiradial_general(9,2,1)");
  all_checks(kite(equiradial_kite(5), cfg.policy), "equiradial_kite(5)");
  for (int i = 0; i < 4; ++i) {
    Rng rng(derive_seed("equivalences/disphenoid", static_cast<std::uint64_t>(i), cfg.seed));
    all_checks(random_disphenoid(rng, cfg.policy), "disphenoid #" + std::to_string(i));
  }

  const int nd = cfg.d_max - cfg.d_min + 1;
  for (int i = 0; i < cfg.samples; ++i) {
    const int d = cfg.d_min + i % nd;
    Rng rng(derive_seed("equivalences", static_cast<std::uint64_t>(i), cfg.seed));
    all_checks(random_simplex(d, rng, 0.25, cfg.policy), label_of("random", i, d));
  }
  return run.finish();
}

SuiteReport suite_regularity(const SuiteConfig& cfg) {
  Runner run("regularity", cfg);
  const double tol = run.rel();
  const Json none = Json::object();

  for (int d = 2; d <= 8; ++d) {
    run.sample();
    run.check("centers_coincide", Bound::at_most, 1e-10, regular(d, 1.0, cfg.policy), none,
              "regular(" + std::to_string(d) + ")");
  }
  {
    run.sample();
    const Simplex k = kite(equiradial_kite(5), cfg.policy);
    run.check("centers_separated", Bound::at_least, tol, k, none, "equiradial_kite(5)");
  }

  for (int i = 0; i < cfg.samples; ++i) {
    // Redraw until the edge lengths spread by at least 1%.
    for (int attempt = 0;; ++attempt) {
      const int index = i + attempt * cfg.samples;
      OrthoSample smp = ortho_sample(attempt == 0 ? "regularity" : "regularity/redraw", index, cfg);
      if (relative_spread(edge_lengths(smp.simplex)) < 0.01) continue;
      run.sample();
      run.check("orthocentric", Bound::at_most, tol, smp.simplex, smp.params, smp.label);
      run.check("centers_separated", Bound::at_least, tol, smp.simplex, smp.params, smp.label);
      break;
    }
  }

  // Near-regular perturbation sequences.
  const int nd = cfg.d_max - cfg.d_min + 1;
  const int sequences = std::max(1, cfg.samples / 20);
  for (int i = 0; i < sequences; ++i) {
    const int d = cfg.d_min + i % nd;
    Rng rng(derive_seed("regularity/continuity", static_cast<std::uint64_t>(i), cfg.seed));
    const Simplex base = regular(d, 1.0, cfg.policy);
    PointList dir = base.vertices();
    for (Point& p : dir) {
      for (Eigen::Index k = 0; k < p.size(); ++k) p(k) = rng.uniform(-1.0, 1.0);
    }
    for (double delta = 1e-2; delta >= 1e-6; delta /= 10.0) {
      PointList v = base.vertices();
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += delta * dir[k];
      const Simplex s = Simplex::from_vertices(d, v, cfg.policy);
      run.sample();
      run.check("continuity", Bound::at_most, kContinuityBound * relative_spread(edge_lengths(s)), s,
                {{"delta", delta}}, label_of("continuity", i, d));
    }
  }
  return run.finish();
}

SuiteReport suite_euler(const SuiteConfig& cfg) {
  Runner run("euler", cfg);
  const Json none = Json::object();

  auto ortho_checks = [&](const Simplex& s, const Json& params, const std::string& label, bool rectangular_case) {
    run.sample();
    run.check("euler_collinearity", Bound::at_most, 1e-9, s, params, label);
    run.check("euler_ratio", Bound::at_most, 1e-8, s, params, label);
    run.check("vertex_sum", Bound::at_most, 1e-9, s, params, label);
    run.check("monge_property", Bound::at_most, 1e-9, s, params, label);
    for (int k = 0; k < s.dim(); ++k) {
      Json p = params;
      p["k"] = k;
      run.check("feuerbach_equidistance", Bound::at_most, 1e-8, s, p, label);
    }
    run.check("feuerbach_feet", Bound::at_most, 1e-8, s, params, label);
    run.check("feuerbach_k0_is_circumsphere", Bound::at_most, 1e-9, s, params, label);
    run.check("feuerbach_facet_radius", Bound::at_most, 1e-9, s, params, label);
    if (!rectangular_case) {
      run.check("egervary_reciprocal_sum", Bound::at_most, 1e-10, s, params, label);
      run.check("egervary_distances", Bound::at_most, 1e-9, s, params, label);
    }
  };

  for (int d = 2; d <= 6; ++d) ortho_checks(regular(d, 1.0, cfg.policy), none, "regular(" + std::to_string(d) + ")", false);
  for (const OrthoSample& f : ortho_fixtures(cfg)) ortho_checks(f.simplex, f.params, f.label, false);
  ortho_checks(rectangular({{3.0, 4.0}}, cfg.policy), none, "rectangular(3,4)", true);
  ortho_checks(rectangular({{1.0, 2.0, 3.0}}, cfg.policy), none, "rectangular(1,2,3)", true);
  ortho_checks(kite({4, 1.0, 0.9}, cfg.policy), none, "kite(4,1,0.9)", false);

  const int nd = cfg.d_max - cfg.d_min + 1;
  for (int i = 0; i < cfg.samples; ++i) {
    OrthoSample smp = ortho_sample("euler", i, cfg);
    ortho_checks(smp.simplex, smp.params, smp.label, false);
    if (i % 4 == 0) {
      // The facet-centroid sphere exists for every simplex.
      const int d = cfg.d_min + (i / 4) % nd;
      Rng rng(derive_seed("euler/general", static_cast<std::uint64_t>(i), cfg.seed));
      const Simplex g = random_simplex(d, rng, 0.25, cfg.policy);
      const std::string label = label_of("general", i, d);
      run.sample();
      run.check("feuerbach_equidistance", Bound::at_most, 1e-8, g, {{"k", d - 1}}, label);
      run.check("feuerbach_facet_radius", Bound::at_most, 1e-9, g, none, label);
      run.check("monge_property", Bound::at_most, 1e-9, g, none, label);
    }
  }
  return run.finish();
}

SuiteReport suite_rectangular(const SuiteConfig& cfg) {
  Runner run("rectangular", cfg);
  const double tol = run.rel();
  const Json none = Json::object();

  auto rect_checks = [&](const RectSpec& spec, const std::string& label) {
    run.sample();
    const Simplex s = rectangular(spec, cfg.policy);
    const Json params = {{"legs", spec.legs}};
    run.check("rect_formulas", Bound::at_most, 1e-9, s, params, label);
    run.check("rect_corner_orthocenter", Bound::at_most, 1e-9, s, params, label);
    run.check("centers_separated", Bound::at_least, tol, s, params, label);
    run.check("rect_circumcenter_bary", Bound::at_most, 1e-9, s, params, label);
    if (spec.dim() >= 3) run.check("lift_roundtrip", Bound::at_most, 1e-8, s, params, label);
  };

  rect_checks({{3.0, 4.0}}, "rectangular(3,4)");
  rect_checks({{1.0, 1.0}}, "rectangular(1,1)");
  rect_checks({{1.0, 1.0, 1.0}}, "rectangular(1,1,1)");
  rect_checks({{3.0, 4.0, 5.0}}, "rectangular(3,4,5)");
  {
    run.sample();
    const Simplex obtuse = construct(Eigen::Vector3d(2.0, -0.5, -0.5), 1.0, cfg.policy);
    run.check("lift_rejects", Bound::at_most, 0.5, obtuse, none, "construct(2,-0.5,-0.5)");
  }

  const int lo = std::max(2, cfg.d_min);
  const int nd = cfg.d_max - lo + 1;
  for (int i = 0; i < cfg.samples; ++i) {
    const int d = lo + i % nd;
    Rng rng(derive_seed("rectangular", static_cast<std::uint64_t>(i), cfg.seed));
    RectSpec spec;
    for (int k = 0; k < d; ++k) spec.legs.push_back(rng.uniform(0.5, 2.0));
    rect_checks(spec, label_of("legs", i, d));
    if (d >= 3) {
      const OrthoParams p = sample_params(d - 1, OrthoClass::obtuse, rng.below(~std::uint64_t{0}));
      run.sample();
      run.check("lift_rejects", Bound::at_most, 0.5, construct(p.bary, 1.0, cfg.policy),
                params_json(p.bary, p.obtuseness, p.cls), label_of("obtuse", i, d - 1));
    }
  }
  return run.finish();
}

SuiteReport suite_parametrization(const SuiteConfig& cfg) {
  Runner run("parametrization", cfg);
  const double tol = run.rel();

  auto ortho_checks = [&](const OrthoSample& smp, std::uint64_t seed) {
    run.sample();
    const Simplex& s = smp.simplex;
    const int d = s.dim();
    Rng rng(seed);
    Json params = smp.params;
    Vector b(d + 1);
    for (Eigen::Index i = 0; i <= d; ++i) b(i) = rng.uniform(-1.0, 1.0);
    params["b"] = point_to_json(b);
    // A random face with at least 3 vertices.
    IndexList idx;
    const std::size_t size = 3 + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(d - 1)));
    std::vector<std::size_t> perm(static_cast<std::size_t>(d) + 1);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    idx.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(idx.begin(), idx.end());
    params["face"] = idx;

    run.check("params_roundtrip", Bound::at_most, 1e-8, s, params, smp.label);
    run.check("sign_law", Bound::at_most, 0.5, s, params, smp.label);
    run.check("quadratic_form", Bound::at_most, tol, s, params, smp.label);
    run.check("face_restriction", Bound::at_most, 1e-9, s, params, smp.label);
    run.check("face_orthocentric", Bound::at_most, tol, s, params, smp.label);
    run.check("face_circumradius", Bound::at_most, 1e-9, s, params, smp.label);
    run.check("orthocenter_off_faces", Bound::at_least, tol, s, params, smp.label);
    run.check("orthocentric_system", Bound::at_most, 0.5, s, params, smp.label);
    run.check("circum_data", Bound::at_most, 1e-9, s, params, smp.label);
    run.check("circumcenter_bary", Bound::at_most, 1e-9, s, params, smp.label);
    run.check("altitude_data", Bound::at_most, 1e-9, s, params, smp.label);
    if (d >= 3 && dihedral_cosines(s).cwiseAbs().minCoeff() > 1e-3) {
      run.check("fiedler", Bound::at_most, 1e-9, s, params, smp.label);
    }
  };

  int f = 0;
  for (const OrthoSample& smp : ortho_fixtures(cfg)) {
    ortho_checks(smp, derive_seed("parametrization/fixture", static_cast<std::uint64_t>(f++), cfg.seed));
  }
  for (int i = 0; i < cfg.samples; ++i) {
    std::optional<OrthoSample> smp;
    try {
      smp = ortho_sample("parametrization", i, cfg);
    } catch (const Error& e) {
      run.construction_failed("sample #" + std::to_string(i), Json::object(), e.what());
      continue;
    }
    ortho_checks(*smp, derive_seed("parametrization/extra", static_cast<std::uint64_t>(i), cfg.seed));
  }
  return run.finish();
}

using SuiteFn = SuiteReport (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> list{
      {"equivalences", suite_equivalences},
      {"regularity", suite_regularity},
      {"euler", suite_euler},
      {"rectangular", suite_rectangular},
      {"parametrization", suite_parametrization},
  };
  return list;
}

}  // namespace

void validate(const SuiteConfig& config) {
  if (config.samples < 1) throw InputError("samples must be at least 1");
  if (config.d_min < 2 || config.d_min > config.d_max || config.d_max > 10) {
    throw InputError("dimension range must satisfy 2 <= d_min <= d_max <= 10");
  }
  if (config.suites.empty()) throw InputError("no suites requested");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  validate(config);
  for (const auto& [suite, fn] : suites()) {
    if (suite == name) {
      try {
        return fn(config);
      } catch (const Error& e) {
        // A fixture or sampler failure outside any check.
        SuiteReport r;
        r.suite = name;
        r.pass = false;
        r.counterexample = Json{{"check", "suite"}, {"error", e.what()}};
        return r;
      }
    }
  }
  throw InputError("unknown suite '" + name + "'");
}

VerificationReport run_all(const SuiteConfig& config) {
  validate(config);
  std::vector<std::string> names;
  for (const std::string& n : config.suites) {
    if (n == "all") {
      names.insert(names.end(), suite_names().begin(), suite_names().end());
    } else if (std::find(suite_names().begin(), suite_names().end(), n) != suite_names().end()) {
      names.push_back(n);
    } else {
      throw InputError("unknown suite '" + n + "'");
    }
  }
  VerificationReport out;
  out.seed = config.seed;
  for (const std::string& n : names) {
    out.suites.push_back(run_suite(n, config));
    out.pass = out.pass && out.suites.back().pass;
  }
  return out;
}

Json to_json(const SuiteReport& r, bool timing) {
  return {{"suite", r.suite},
          {"pass", r.pass},
          {"samples", r.samples},
          {"checks", r.checks},
          {"max_residual", r.max_residual},
          {"min_separation", r.min_separation ? Json(*r.min_separation) : Json(nullptr)},
          {"counterexample", r.counterexample ? *r.counterexample : Json(nullptr)},
          {"elapsed_ms", timing ? r.elapsed_ms : 0}};
}

Json to_json(const VerificationReport& r, bool timing) {
  Json suites = Json::array();
  for (const SuiteReport& s : r.suites) suites.push_back(to_json(s, timing));
  return {{"pass", r.pass}, {"seed", r.seed}, {"suites", std::move(suites)}};
}

double recheck(const Json& counterexample, const SuiteConfig& config) {
  if (!counterexample.is_object() || !counterexample.contains("check")) throw InputError("not a counterexample payload");
  const std::string name = counterexample["check"].get<std::string>();
  const auto it = registry().find(name);
  if (it == registry().end()) throw InputError("unknown check '" + name + "'");
  if (!counterexample.contains("simplex") || counterexample["simplex"].is_null()) {
    throw InputError("counterexample carries no simplex");
  }
  const SimplexDocument doc = simplex_from_json(counterexample["simplex"], config.policy);
  const Context ctx{config.policy, config.incenter};
  return it->second(doc.simplex, counterexample.value("params", Json::object()), ctx);
}

}  // namespace orthoplex
