#include "orthoplex/centers.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "orthoplex/orthocentric.hpp"

namespace orthoplex {

Point centroid(const Simplex& s) {
  Point g = Point::Zero(s.dim());
  for (const Point& v : s.vertices()) g += v;
  return g / static_cast<double>(s.vertex_count());
}

Sphere circumcenter(const Simplex& s) {
  const int d = s.dim();
  const Point& last = s.vertex(static_cast<std::size_t>(d));
  Matrix lhs(d, d);
  Vector rhs(d);
  for (int i = 0; i < d; ++i) {
    const Point& a = s.vertex(static_cast<std::size_t>(i));
    lhs.row(i) = 2.0 * (a - last).transpose();
    rhs(i) = a.squaredNorm() - last.squaredNorm();
  }
  // Solving relative to the last vertex keeps the right-hand side small for
  // simplices far from the origin.
  Sphere out;
  const Vector rhs_local = rhs - lhs * last;
  out.center = last + lhs.partialPivLu().solve(rhs_local);
  for (const Point& v : s.vertices()) out.radius += (v - out.center).norm();
  out.radius /= static_cast<double>(s.vertex_count());
  return out;
}

Sphere incenter(const Simplex& s) {
  const std::vector<double> areas = facet_volumes(s);
  double total = 0.0;
  Point weighted = Point::Zero(s.dim());
  for (std::size_t i = 0; i < areas.size(); ++i) {
    total += areas[i];
    weighted += areas[i] * s.vertex(i);
  }
  return {weighted / total, s.dim() * volume(s) / total};
}

Point monge_point(const Simplex& s) {
  if (s.dim() < 2) throw PreconditionError("the Monge point needs d >= 2");
  const double d = s.dim();
  return ((d + 1.0) * centroid(s) - 2.0 * circumcenter(s).center) / (d - 1.0);
}

double monge_residual(const Simplex& s, const Point& m) {
  const std::size_t n = s.vertex_count();
  const Point sum = centroid(s) * static_cast<double>(n);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point rest = (sum - s.vertex(i) - s.vertex(j)) / static_cast<double>(n - 2);
      const Point edge = s.vertex(i) - s.vertex(j);
      worst = std::max(worst, std::abs((m - rest).dot(edge)) / edge.norm());
    }
  }
  return worst;
}

std::optional<Point> orthocenter(const Simplex& s, const TolerancePolicy& policy) {
  if (!is_orthocentric(s, policy)) return std::nullopt;
  return monge_point(s);
}

EulerLine euler_line(const Simplex& s, const TolerancePolicy& policy) {
  const std::optional<Point> h = orthocenter(s, policy);
  if (!h) throw PreconditionError("the Euler line needs an orthocentric simplex");
  const Point g = centroid(s);
  const Point c = circumcenter(s).center;
  EulerLine out;
  const Point axis = *h - c;
  if (axis.norm() <= policy.rel() * diameter(s)) {
    out.coincident = true;
    return out;
  }
  const Point u = axis.normalized();
  const Point off = (g - c) - (g - c).dot(u) * u;
  out.collinearity_residual = off.norm();
  out.ratio = (c - g).norm() / (g - *h).norm();
  return out;
}

std::vector<IndexList> index_subsets(std::size_t n, std::size_t size) {
  std::vector<IndexList> out;
  if (size == 0 || size > n) return out;
  IndexList idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

FeuerbachSphere feuerbach_sphere(const Simplex& s, int k, const TolerancePolicy& policy) {
  const int d = s.dim();
  if (k < 0 || k > d - 1) throw InputError("Feuerbach sphere index k must lie in [0, d-1]");
  const std::optional<Point> h = orthocenter(s, policy);
  if (k < d - 1 && !h) throw PreconditionError("Feuerbach k-spheres with k < d-1 need an orthocentric simplex");

  const Point g = centroid(s);
  FeuerbachSphere out;
  out.k = k;
  if (k == d - 1) {
    out.center = ((d + 1.0) * g - circumcenter(s).center) / d;
  } else {
    out.center = *h + (d + 1.0) / (2.0 * (k + 1.0)) * (g - *h);
  }

  std::vector<double> dist;
  for (const IndexList& subset : index_subsets(s.vertex_count(), static_cast<std::size_t>(k) + 1)) {
    Point c = Point::Zero(d);
    for (std::size_t i : subset) c += s.vertex(i);
    c /= static_cast<double>(subset.size());
    dist.push_back((c - out.center).norm());
  }
  for (double x : dist) out.radius += x;
  out.radius /= static_cast<double>(dist.size());
  for (double x : dist) out.max_residual = std::max(out.max_residual, std::abs(x - out.radius));

  if (k == d - 1 && h) {
    double worst = 0.0;
    for (const Point& b : altitude_feet(s)) worst = std::max(worst, std::abs((b - out.center).norm() - out.radius));
    out.feet_max_residual = worst;
  }
  return out;
}

CenterReport center_report(const Simplex& s, const TolerancePolicy& policy) {
  CenterReport out;
  out.centroid = centroid(s);
  const Sphere circ = circumcenter(s);
  out.circumcenter = circ.center;
  out.circumradius = circ.radius;
  const Sphere in = incenter(s);
  out.incenter = in.center;
  out.inradius = in.radius;
  out.monge = monge_point(s);
  out.orthocenter = orthocenter(s, policy);

  const std::array<std::pair<const char*, const Point*>, 4> named{{
      {"centroid", &out.centroid},
      {"circumcenter", &out.circumcenter},
      {"incenter", &out.incenter},
      {out.orthocenter ? "orthocenter" : "monge", out.orthocenter ? &*out.orthocenter : &out.monge},
  }};
  const double threshold = policy.rel() * diameter(s);
  for (std::size_t i = 0; i < named.size(); ++i) {
    for (std::size_t j = i + 1; j < named.size(); ++j) {
      if ((*named[i].second - *named[j].second).norm() <= threshold) {
        out.coincident_pairs.emplace_back(named[i].first, named[j].first);
      }
    }
  }
  return out;
}

}  // namespace orthoplex
