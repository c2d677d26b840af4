#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library; they take raw coordinates and use different
// formulas from the library's own routes.

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Pts = std::vector<Eigen::VectorXd>;

inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline Eigen::MatrixXd squared_distances(const Pts& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = (p[i] - p[j]).squaredNorm();
  }
  return d;
}

inline Eigen::MatrixXd cayley_menger(const Pts& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  Eigen::MatrixXd cm = Eigen::MatrixXd::Ones(n + 1, n + 1);
  cm(0, 0) = 0.0;
  cm.bottomRightCorner(n, n) = squared_distances(p);
  return cm;
}

// k-volume of k+1 points from the Cayley-Menger determinant.
inline double volume(const Pts& p) {
  const int k = static_cast<int>(p.size()) - 1;
  const double det = cayley_menger(p).determinant();
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  return std::sqrt(sign * det / (std::ldexp(1.0, k) * factorial(k) * factorial(k)));
}

// R^2 = -det(D) / (2 det(CM)).
inline double circumradius(const Pts& p) {
  return std::sqrt(-0.5 * squared_distances(p).determinant() / cayley_menger(p).determinant());
}

// Unit normal of the hyperplane through `facet`, from the kernel of the
// edge vectors.
inline Eigen::VectorXd hyperplane_normal(const Pts& facet) {
  const auto d = facet.front().size();
  Eigen::MatrixXd e(static_cast<Eigen::Index>(facet.size()) - 1, d);
  for (std::size_t i = 1; i < facet.size(); ++i) e.row(static_cast<Eigen::Index>(i) - 1) = (facet[i] - facet[0]).transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
  return lu.kernel().col(0).normalized();
}

inline Pts without(const Pts& p, std::size_t i) {
  Pts out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j != i) out.push_back(p[j]);
  }
  return out;
}

// Inward normals n_i, offsets: n_i . x - n_i . P_i = r for the incenter.
struct Ball {
  Eigen::VectorXd center;
  double radius;
};

inline Ball inscribed_ball(const Pts& p) {
  const auto n = static_cast<Eigen::Index>(p.size());
  const auto d = n - 1;
  Eigen::MatrixXd a(n, d + 1);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Pts f = without(p, static_cast<std::size_t>(i));
    Eigen::VectorXd nrm = hyperplane_normal(f);
    if (nrm.dot(p[static_cast<std::size_t>(i)] - f[0]) < 0) nrm = -nrm;
    a.row(i).head(d) = nrm.transpose();
    a(i, d) = -1.0;
    b(i) = nrm.dot(f[0]);
  }
  const Eigen::VectorXd sol = a.fullPivLu().solve(b);
  return {sol.head(d), sol(d)};
}

// Circumcenter as the point equidistant from all vertices, via least squares
// on |x|^2 - 2 P_i . x + |P_i|^2 = R^2 differences against P_0.
inline Eigen::VectorXd circumcenter(const Pts& p) {
  const auto d = p.front().size();
  Eigen::MatrixXd a(static_cast<Eigen::Index>(p.size()) - 1, d);
  Eigen::VectorXd b(a.rows());
  for (std::size_t i = 1; i < p.size(); ++i) {
    a.row(static_cast<Eigen::Index>(i) - 1) = 2.0 * (p[i] - p[0]).transpose();
    b(static_cast<Eigen::Index>(i) - 1) = p[i].squaredNorm() - p[0].squaredNorm();
  }
  return a.colPivHouseholderQr().solve(b);
}

// The explicit n x n matrix with a_i off the diagonal of row i and a_i + b_i on it.
inline Eigen::MatrixXd structured_matrix(const std::vector<double>& a, const std::vector<double>& b) {
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a[static_cast<std::size_t>(i)] + (i == j ? b[static_cast<std::size_t>(i)] : 0.0);
  }
  return m;
}

inline double rel_diff(double x, double y) {
  return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300});
}

// Worst |(P - Q) . (R - S)| / (|P - Q| |R - S|) over segments on four
// distinct points; zero exactly for an orthocentric system.
inline double system_perpendicularity(const Pts& p) {
  const std::size_t n = p.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          if (k == i || k == j || l == i || l == j) continue;
          const Eigen::VectorXd u = p[i] - p[j], w = p[k] - p[l];
          worst = std::max(worst, std::abs(u.dot(w)) / (u.norm() * w.norm()));
        }
  return worst;
}

}  // namespace oracle
