#include "orthoplex/families.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace orthoplex {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InputError(std::string(what) + " must be positive and finite");
}

}  // namespace

Simplex regular(int d, double s, const TolerancePolicy& policy) {
  if (d < 2) throw InputError("regular simplex needs d >= 2");
  require_positive(s, "edge length");
  const double r2 = s * s * d / (2.0 * (d + 1.0));
  Matrix g = Matrix::Constant(d + 1, d + 1, -r2 / d);
  g.diagonal().setConstant(r2);
  return Simplex::from_vertices(d, gram_embed(SymMatrix(g, policy), policy), policy);
}

RegularMetrics regular_metrics(int d, double s) {
  if (d < 2) throw InputError("regular simplex needs d >= 2");
  require_positive(s, "edge length");
  RegularMetrics out;
  out.circumradius = s * std::sqrt(d / (2.0 * (d + 1.0)));
  out.altitude = s * std::sqrt((d + 1.0) / (2.0 * d));
  out.volume = std::pow(s, d) * std::sqrt((d + 1.0) / std::ldexp(1.0, d)) / factorial(d);
  out.inradius = s / std::sqrt(2.0 * d * (d + 1.0));
  return out;
}

void validate(const KiteSpec& spec) {
  if (spec.d < 3) throw InputError("kite needs d >= 3");
  require_positive(spec.base_edge, "base edge");
  require_positive(spec.apex_edge, "apex edge");
  const double e2 = spec.eccentricity() * spec.eccentricity();
  const int d = spec.d;
  if (!(2.0 * e2 * d > d - 1.0)) {
    throw DegeneracyError("degenerate kite: eccentricity^2 must exceed (d-1)/(2d) = " +
                              std::to_string((d - 1.0) / (2.0 * d)),
                          0.0);
  }
}

Simplex kite(const KiteSpec& spec, const TolerancePolicy& policy) {
  validate(spec);
  const int d = spec.d;
  const double s = spec.base_edge;
  const double e2 = spec.eccentricity() * spec.eccentricity();
  const double h = s * std::sqrt((2.0 * e2 * d - (d - 1.0)) / (2.0 * d));

  const Simplex base = regular(d - 1, s, policy);
  PointList v;
  for (const Point& p : base.vertices()) {
    Point q = Point::Zero(d);
    q.head(d - 1) = p;
    v.push_back(q);
  }
  Point apex = Point::Zero(d);
  apex(d - 1) = h;
  v.push_back(apex);
  return Simplex::from_vertices(d, std::move(v), policy);
}

KiteMetrics kite_metrics(const KiteSpec& spec, const TolerancePolicy& policy) {
  validate(spec);
  const double d = spec.d;
  const double s = spec.base_edge;
  const double e2 = spec.eccentricity() * spec.eccentricity();
  const double core = 2.0 * e2 * d - (d - 1.0);

  KiteMetrics out;
  out.circumradius = std::sqrt(d / (2.0 * core)) * e2 * s;
  out.altitude = s * std::sqrt(core / (2.0 * d));
  out.volume = std::sqrt(core / std::ldexp(1.0, spec.d)) * std::pow(s, spec.d) / factorial(spec.d);
  out.inradius = s * std::sqrt(core) /
                 (std::sqrt(2.0) * (std::sqrt(d) + d * std::sqrt(2.0 * e2 * (d - 1.0) - (d - 2.0))));
  out.base_circumradius = s * std::sqrt((d - 1.0) / (2.0 * d));
  out.circumcenter_interior = e2 > (d - 1.0) / d && !policy.close(e2, (d - 1.0) / d);
  out.equiradial = policy.close(e2, (d - 2.0) / d) || policy.close(e2, 1.0);
  out.rectangular_at_apex = policy.close(e2, 0.5);
  out.orthocenter_interior = e2 > 0.5 && !out.rectangular_at_apex;
  return out;
}

KiteSpec equiradial_kite(int d) {
  if (d < 4) throw InputError("equiradial kites need d >= 4; for d <= 3 an equiradial orthocentric simplex is regular");
  return {d, 1.0, std::sqrt((d - 2.0) / d)};
}

void validate(const RectSpec& spec) {
  if (spec.dim() < 2) throw InputError("rectangular simplex needs at least 2 legs");
  for (double b : spec.legs) require_positive(b, "leg");
}

Simplex rectangular(const RectSpec& spec, const TolerancePolicy& policy) {
  validate(spec);
  const int d = spec.dim();
  PointList v;
  for (int i = 0; i < d; ++i) {
    Point p = Point::Zero(d);
    p(i) = spec.legs[static_cast<std::size_t>(i)];
    v.push_back(p);
  }
  v.push_back(Point::Zero(d));
  return Simplex::from_vertices(d, std::move(v), policy);
}

RectMetrics rect_metrics(const RectSpec& spec) {
  validate(spec);
  const int d = spec.dim();
  double prod = 1.0, inv = 0.0, inv2 = 0.0, sq = 0.0;
  for (double b : spec.legs) {
    prod *= b;
    inv += 1.0 / b;
    inv2 += 1.0 / (b * b);
    sq += b * b;
  }
  RectMetrics out;
  out.volume = prod / factorial(d);
  out.hypotenuse_volume = prod / factorial(d - 1) * std::sqrt(inv2);
  out.altitude = 1.0 / std::sqrt(inv2);
  out.inradius = 1.0 / (inv + std::sqrt(inv2));
  out.circumradius_sq = sq / 4.0;
  out.circumcenter.resize(d);
  out.hypotenuse_orthocenter.resize(d);
  for (int i = 0; i < d; ++i) {
    const double b = spec.legs[static_cast<std::size_t>(i)];
    out.circumcenter(i) = b / 2.0;
    out.hypotenuse_orthocenter(i) = 1.0 / (b * inv2);
  }
  return out;
}

CenterReport rect_centers_distinct(const RectSpec& spec, const TolerancePolicy& policy) {
  const Simplex s = rectangular(spec, policy);
  CenterReport report = center_report(s, policy);
  const int d = spec.dim();
  const Vector bary = barycentric(s, report.circumcenter);
  Vector expected = Vector::Constant(d + 1, 0.5);
  expected(d) = (2.0 - d) / 2.0;
  const double err = (bary - expected).cwiseAbs().maxCoeff();
  if (err > policy.rel() * (d + 1.0)) {
    throw NumericError("circumcenter barycentrics of a rectangular simplex are off by " + std::to_string(err));
  }
  return report;
}

RectLift lift_to_rectangular(const Simplex& t, const TolerancePolicy& policy) {
  if (!is_orthocentric(t, policy)) throw PreconditionError("lift needs an orthocentric simplex");
  const OrthoParams p = params_of(t, policy);
  if (p.cls != OrthoClass::acute) throw NotLiftableError();
  RectSpec spec;
  for (Eigen::Index i = 0; i < p.bary.size(); ++i) spec.legs.push_back(std::sqrt(-p.obtuseness / p.bary(i)));
  Simplex s = rectangular(spec, policy);
  return {std::move(spec), std::move(s)};
}

bool equiradial_admissible(int d, int m) {
  if (d < 3) throw InputError("equiradial admissibility needs d >= 3");
  if (m < 2 || m > d - 1) throw InputError("equiradial group size m must satisfy 2 <= m <= d-1");
  const long long dd = d;
  const long long mn = static_cast<long long>(m) * (dd + 1 - m);
  const long long lhs = 4 * (dd - 2) * (dd - 2) * mn;
  const long long top = dd * dd - 3 * dd + 4;
  return lhs < top * top;
}

Vector EquiradialSolution::bary() const {
  Vector out(m + n);
  out.head(m).setConstant(a);
  out.tail(n).setConstant(b);
  return out;
}

EquiradialSolution equiradial_solve(int d, int m, int branch) {
  if (branch != 1 && branch != 2) throw InputError("equiradial branch must be 1 or 2");
  if (!equiradial_admissible(d, m)) {
    const long long mn = static_cast<long long>(m) * (d + 1 - m);
    const double bound = std::pow((d * d - 3.0 * d + 4.0) / (2.0 * (d - 2.0)), 2);
    throw AdmissibilityError("(d, m) = (" + std::to_string(d) + ", " + std::to_string(m) + ") is not admissible: m*n = " +
                                 std::to_string(mn) + " is not below " + std::to_string(bound),
                             mn, bound);
  }
  EquiradialSolution out;
  out.m = m;
  out.n = d + 1 - m;
  const double mn = static_cast<double>(out.m) * out.n;
  const double p = d * d - 3.0 * d + 4.0 - 2.0 * mn;
  const double q = mn * (mn - d);
  const double disc = p * p - 4.0 * q;
  if (!(disc > 0.0)) throw NumericError("equiradial quadratic has no distinct real roots");
  const double big = 0.5 * (p + std::copysign(std::sqrt(disc), p));
  const double r1 = big;
  const double r2 = q / big;
  const double hi = std::max(r1, r2);
  const double lo = std::min(r1, r2);
  out.xi = branch == 1 ? hi : lo;
  out.eta = branch == 1 ? lo : hi;
  out.x = out.xi / (1.0 - out.n) - out.m;
  out.y = out.eta / (1.0 - out.m) - out.n;
  out.a = -1.0 / out.x;
  out.b = -1.0 / out.y;
  return out;
}

EquiradialResult equiradial_general(int d, int m, int branch, const TolerancePolicy& policy) {
  EquiradialSolution sol = equiradial_solve(d, m, branch);
  Simplex s = construct(sol.bary(), 1.0, policy);
  return {std::move(s), sol};
}

}  // namespace orthoplex
