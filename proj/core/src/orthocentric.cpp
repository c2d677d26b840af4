#include "orthoplex/orthocentric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orthoplex/centers.hpp"
#include "orthoplex/random.hpp"

namespace orthoplex {

namespace {

void require_nonrectangular(const OrthoParams& p, const char* what) {
  if (p.cls == OrthoClass::rectangular) {
    throw PreconditionError(std::string(what) + " is undefined for rectangular simplices");
  }
}

void check_indices(std::span<const std::size_t> indices, std::size_t n, std::size_t min_size) {
  if (indices.size() < min_size || indices.size() > n) {
    throw InputError("face needs between " + std::to_string(min_size) + " and " + std::to_string(n) + " indices");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i : indices) {
    if (i >= n || seen[i]) throw InputError("face indices must be distinct and in range");
    seen[i] = true;
  }
}

// Some nonempty proper subset of `a` sums to within `margin` of 0 or 1.
bool near_forbidden_subset(const Vector& a, double margin) {
  const auto n = static_cast<unsigned>(a.size());
  const std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    double sum = 0.0;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (1u << i)) sum += a(i);
    }
    if (std::abs(sum) < margin || std::abs(sum - 1.0) < margin) return true;
  }
  return false;
}

}  // namespace

std::string to_string(OrthoClass c) {
  switch (c) {
    case OrthoClass::acute: return "acute";
    case OrthoClass::obtuse: return "obtuse";
    case OrthoClass::rectangular: return "rectangular";
  }
  return "unknown";
}

OrthoClass ortho_class_from_string(const std::string& name) {
  if (name == "acute") return OrthoClass::acute;
  if (name == "obtuse") return OrthoClass::obtuse;
  if (name == "rectangular") return OrthoClass::rectangular;
  throw InputError("unknown orthocentric class '" + name + "'");
}

double orthocentricity_residual(const Simplex& s) {
  const std::size_t n = s.vertex_count();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point e1 = s.vertex(i) - s.vertex(j);
      for (std::size_t k = i + 1; k < n; ++k) {
        if (k == j) continue;
        for (std::size_t l = k + 1; l < n; ++l) {
          if (l == j) continue;
          const Point e2 = s.vertex(k) - s.vertex(l);
          worst = std::max(worst, std::abs(e1.dot(e2)) / (e1.norm() * e2.norm()));
        }
      }
    }
  }
  return worst;
}

bool is_orthocentric(const Simplex& s, const TolerancePolicy& policy) {
  return orthocentricity_residual(s) <= policy.rel();
}

OrthoParams params_of(const Simplex& s, const TolerancePolicy& policy) {
  if (!is_orthocentric(s, policy)) throw PreconditionError("simplex is not orthocentric");
  const Point h = monge_point(s);
  const std::size_t n = s.vertex_count();

  std::vector<double> products;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) products.push_back((h - s.vertex(i)).dot(h - s.vertex(j)));
  }
  const double c = std::accumulate(products.begin(), products.end(), 0.0) / static_cast<double>(products.size());
  double spread = 0.0;
  for (double x : products) spread = std::max(spread, std::abs(x - c));
  const double diam2 = diameter(s) * diameter(s);
  if (spread > policy.rel() * std::max(std::abs(c), diam2)) {
    throw NumericError("obtuseness is inconsistent across vertex pairs (spread " + std::to_string(spread) + ")");
  }

  OrthoParams out;
  out.dim = s.dim();
  out.bary = barycentric(s, h);
  out.obtuseness = c;
  if (std::abs(c) <= policy.rank_cut() * diam2) {
    out.cls = OrthoClass::rectangular;
    Eigen::Index k = 0;
    out.bary.maxCoeff(&k);
    out.rectangular_vertex = static_cast<std::size_t>(k);
  } else {
    out.cls = c < 0.0 ? OrthoClass::acute : OrthoClass::obtuse;
  }
  return out;
}

Simplex construct(std::span<const double> a, double scale, const TolerancePolicy& policy) {
  const auto n = static_cast<Eigen::Index>(a.size());
  if (n < 3) throw ParametrizationError("need at least 3 barycentric coordinates");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw ParametrizationError("scale must be positive and finite");
  double sum = 0.0, abs_sum = 0.0;
  int positive = 0;
  for (double v : a) {
    if (!std::isfinite(v)) throw ParametrizationError("barycentric coordinates must be finite");
    if (std::abs(v) <= policy.abs()) throw ParametrizationError("barycentric coordinates must be nonzero");
    sum += v;
    abs_sum += std::abs(v);
    if (v > 0.0) ++positive;
  }
  if (std::abs(sum - 1.0) > policy.abs() * std::max(1.0, abs_sum) * static_cast<double>(n)) {
    throw ParametrizationError("barycentric coordinates must sum to 1");
  }
  double c = 0.0;
  if (positive == n) {
    c = -scale;
  } else if (positive == 1) {
    c = scale;
  } else {
    throw ParametrizationError("invalid sign pattern: need all coordinates positive or exactly one positive");
  }

  Matrix g = Matrix::Constant(n, n, c);
  for (Eigen::Index i = 0; i < n; ++i) g(i, i) = c * (1.0 - 1.0 / a[static_cast<std::size_t>(i)]);
  PointList pts;
  try {
    pts = gram_embed(SymMatrix(g, policy), policy);
  } catch (const NotPsdError& e) {
    throw NumericError(std::string("internal: Gram form not semidefinite for a valid sign pattern: ") + e.what());
  }
  const int d = static_cast<int>(n) - 1;
  if (pts.front().size() != d) {
    throw DegeneracyError("Gram form has rank " + std::to_string(pts.front().size()) + ", expected " +
                              std::to_string(d),
                          0.0);
  }
  return Simplex::from_vertices(d, std::move(pts), policy);
}

Simplex construct(const Vector& a, double scale, const TolerancePolicy& policy) {
  return construct(std::span<const double>(a.data(), static_cast<std::size_t>(a.size())), scale, policy);
}

Matrix OrthoGramForm::matrix() const {
  const auto n = x.size();
  const double c = sign * scale;
  Matrix g = Matrix::Constant(n, n, c);
  for (Eigen::Index i = 0; i < n; ++i) g(i, i) = c * (1.0 + x(i));
  return g;
}

OrthoGramForm gram_form(const OrthoParams& p) {
  require_nonrectangular(p, "the Gram form");
  OrthoGramForm out;
  out.scale = std::abs(p.obtuseness);
  out.sign = p.obtuseness < 0.0 ? -1 : 1;
  out.x = -p.bary.cwiseInverse();
  return out;
}

EdgeAltitudeData edge_and_altitude_data(const OrthoParams& p, const Simplex& s) {
  require_nonrectangular(p, "edge and altitude data");
  const std::size_t n = s.vertex_count();
  if (static_cast<std::size_t>(p.bary.size()) != n) throw InputError("parameters do not match the simplex");
  const double c = p.obtuseness;
  Point h = Point::Zero(s.dim());
  for (std::size_t i = 0; i < n; ++i) h += p.bary(static_cast<Eigen::Index>(i)) * s.vertex(i);

  const double diam = diameter(s);
  const double diam2 = diam * diam;
  EdgeAltitudeData out;
  out.squared_edges = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = p.bary(static_cast<Eigen::Index>(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double aj = p.bary(static_cast<Eigen::Index>(j));
      const double e2 = -c * (1.0 / ai + 1.0 / aj);
      out.squared_edges(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = e2;
      out.squared_edges(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = e2;
      worst = std::max(worst, std::abs(e2 - s.squared_edge(i, j)) / diam2);
    }
  }

  const PointList feet = altitude_feet(s);
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = p.bary(static_cast<Eigen::Index>(i));
    const double hsq = c * (ai - 1.0) / ai;
    out.orthocenter_sq.push_back(hsq);
    worst = std::max(worst, std::abs(hsq - (s.vertex(i) - h).squaredNorm()) / diam2);

    const Point foot = h + ai / (ai - 1.0) * (s.vertex(i) - h);
    out.altitudes.feet.push_back(foot);
    worst = std::max(worst, (foot - feet[i]).norm() / diam);

    const double len = std::sqrt(c / (ai * (ai - 1.0)));
    out.altitudes.lengths.push_back(len);
    worst = std::max(worst, std::abs(len - (s.vertex(i) - feet[i]).norm()) / diam);
  }
  out.max_residual = worst;
  return out;
}

double quadratic_form(const OrthoParams& p, std::span<const double> b) {
  if (b.size() != static_cast<std::size_t>(p.bary.size())) throw InputError("coefficient count mismatch");
  require_nonrectangular(p, "the quadratic form");
  double sum = 0.0, weighted = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    sum += b[i];
    weighted += b[i] * b[i] / p.bary(static_cast<Eigen::Index>(i));
  }
  return p.obtuseness * (sum * sum - weighted);
}

OrthoParams restrict_to_face(const OrthoParams& p, std::span<const std::size_t> indices) {
  require_nonrectangular(p, "face restriction");
  check_indices(indices, static_cast<std::size_t>(p.bary.size()), 3);
  double s = 0.0;
  for (std::size_t i : indices) s += p.bary(static_cast<Eigen::Index>(i));
  if (std::abs(s) < 1e-12) throw NumericError("face barycentric sum vanishes");

  OrthoParams out;
  out.dim = static_cast<int>(indices.size()) - 1;
  out.bary.resize(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t k = 0; k < indices.size(); ++k) out.bary(static_cast<Eigen::Index>(k)) = p.bary(static_cast<Eigen::Index>(indices[k])) / s;
  out.obtuseness = p.obtuseness / s;
  out.cls = out.obtuseness < 0.0 ? OrthoClass::acute : OrthoClass::obtuse;
  return out;
}

CircumData circum_data(const OrthoParams& p, const Simplex& s) {
  require_nonrectangular(p, "circumsphere data");
  const std::size_t n = s.vertex_count();
  if (static_cast<std::size_t>(p.bary.size()) != n) throw InputError("parameters do not match the simplex");
  const int d = s.dim();

  Point h = Point::Zero(d);
  Point sum = Point::Zero(d);
  for (std::size_t i = 0; i < n; ++i) {
    h += p.bary(static_cast<Eigen::Index>(i)) * s.vertex(i);
    sum += s.vertex(i);
  }
  CircumData out;
  out.center = 0.5 * sum - 0.5 * (d - 1.0) * h;
  out.radius_sq = 0.25 * p.obtuseness * ((d - 1.0) * (d - 1.0) - p.bary.cwiseInverse().sum());
  out.interior = true;
  for (Eigen::Index i = 0; i < p.bary.size(); ++i) {
    if (!(p.bary(i) > 0.0 && p.bary(i) < 1.0 / (d - 1.0))) out.interior = false;
  }

  const Sphere direct = circumcenter(s);
  const double diam = diameter(s);
  out.max_residual = std::max((out.center - direct.center).norm() / diam,
                              std::abs(out.radius_sq - direct.radius * direct.radius) / (diam * diam));
  return out;
}

double face_circumradius_sq(const OrthoParams& p, std::span<const std::size_t> indices) {
  require_nonrectangular(p, "face circumradius");
  check_indices(indices, static_cast<std::size_t>(p.bary.size()), 2);
  const double k = static_cast<double>(indices.size()) - 1.0;
  double s = 0.0, inv = 0.0;
  for (std::size_t i : indices) {
    s += p.bary(static_cast<Eigen::Index>(i));
    inv += 1.0 / p.bary(static_cast<Eigen::Index>(i));
  }
  return 0.25 * p.obtuseness * ((k - 1.0) * (k - 1.0) / s - inv);
}

double LambdaParams::reciprocal_sum() const {
  return 1.0 / orthocenter + vertices.cwiseInverse().sum();
}

LambdaParams lambda_params(const OrthoParams& p) {
  require_nonrectangular(p, "lambda parameters");
  LambdaParams out;
  out.orthocenter = p.obtuseness;
  out.vertices = -p.obtuseness * p.bary.cwiseInverse();
  return out;
}

bool orthocentric_system_check(std::span<const Point> points, const TolerancePolicy& policy) {
  if (points.size() < 4) throw InputError("an orthocentric system needs at least 4 points");
  const int d = static_cast<int>(points.size()) - 2;
  for (const Point& p : points) {
    if (p.size() != d) throw InputError("orthocentric system points must lie in (n-2)-space");
  }
  for (std::size_t omit = 0; omit < points.size(); ++omit) {
    PointList rest;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != omit) rest.push_back(points[j]);
    }
    const Simplex s = Simplex::from_vertices(d, std::move(rest), policy);
    const std::optional<Point> h = orthocenter(s, policy);
    if (!h) return false;
    if ((*h - points[omit]).norm() > policy.rel() * diameter(s)) return false;
  }
  return true;
}

OrthoParams sample_params(int d, OrthoClass cls, std::uint64_t seed) {
  if (d < 2) throw InputError("sample_params needs d >= 2");
  if (d > 20) throw InputError("sample_params supports d <= 20");
  if (cls == OrthoClass::rectangular) throw InputError("sample_params draws acute or obtuse parameters only");

  Rng rng(mix_seed(mix_seed(seed, static_cast<std::uint64_t>(d)), static_cast<std::uint64_t>(cls)));
  const Eigen::Index n = d + 1;
  Vector a(n);
  while (true) {
    if (cls == OrthoClass::acute) {
      for (Eigen::Index i = 0; i < n; ++i) a(i) = rng.exponential();
      a /= a.sum();
    } else {
      const auto pos = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n)));
      double total = 1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (i == pos) continue;
        const double u = rng.uniform(0.05, 1.0);
        a(i) = -u;
        total += u;
      }
      a(pos) = total;
    }
    if (a.cwiseAbs().minCoeff() < 0.01) continue;
    if (near_forbidden_subset(a, 0.01)) continue;
    break;
  }

  OrthoParams out;
  out.dim = d;
  out.bary = a;
  out.cls = cls;
  out.obtuseness = cls == OrthoClass::acute ? -1.0 : 1.0;
  return out;
}

}  // namespace orthoplex
