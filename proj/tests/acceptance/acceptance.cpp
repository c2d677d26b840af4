// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "orthoplex/centers.hpp"
#include "orthoplex/families.hpp"
#include "orthoplex/orthocentric.hpp"
#include "orthoplex/random.hpp"
#include "orthoplex/verify.hpp"

using namespace orthoplex;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::vector<std::string> failures;
  double worst = 0.0;  // worst measured residual relative to its bound

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  // |got - want| <= tol * max(|want|, floor)
  void near(double got, double want, double tol, const std::string& what, double floor = 1.0) {
    const double err = std::abs(got - want) / std::max(std::abs(want), floor);
    worst = std::max(worst, err / tol);
    std::ostringstream os;
    os.precision(17);
    os << what << ": got " << got << ", want " << want;
    expect(err <= tol, os.str());
  }
  void below(double residual, double bound, const std::string& what) {
    worst = std::max(worst, bound > 0 ? residual / bound : residual);
    std::ostringstream os;
    os << what << ": " << residual << " > " << bound;
    expect(residual <= bound, os.str());
  }
  void suite(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << " failed";
    if (r.counterexample) os << ": " << r.counterexample->dump();
    expect(r.pass, os.str());
  }
};

double spread(const std::vector<double>& v) {
  return relative_spread(v);
}

SuiteReport suite(const std::string& name, int samples, int d_min, int d_max) {
  SuiteConfig c;
  c.suites = {name};
  c.samples = samples;
  c.seed = 20261014;
  c.d_min = d_min;
  c.d_max = d_max;
  return run_suite(name, c);
}

void formula_fixtures(Criterion& c) {
  const double tol = 1e-9;
  const RegularMetrics reg = regular_metrics(3, 1.0);
  c.near(reg.circumradius * reg.circumradius, 0.375, tol, "regular R^2");
  c.near(reg.altitude, std::sqrt(2.0 / 3.0), tol, "regular h");
  c.near(reg.volume, std::sqrt(2.0) / 12.0, tol, "regular V");
  c.near(reg.inradius, 1.0 / std::sqrt(24.0), tol, "regular r");
  c.near(reg.altitude, 0.8164966, 1e-7, "regular h digits");
  c.near(reg.volume, 0.1178511, 1e-6, "regular V digits");
  c.near(reg.inradius, 0.2041241, 1e-6, "regular r digits");

  const RectMetrics r34 = rect_metrics({{3.0, 4.0}});
  c.near(r34.volume, 6.0, tol, "rect(3,4) V");
  c.near(r34.hypotenuse_volume, 5.0, tol, "rect(3,4) V_hyp");
  c.near(r34.altitude, 2.4, tol, "rect(3,4) h");
  c.near(r34.inradius, 1.0, tol, "rect(3,4) r");
  c.near(std::sqrt(r34.circumradius_sq), 2.5, tol, "rect(3,4) R");
  c.near(r34.circumcenter(0), 1.5, tol, "rect(3,4) C_x");
  c.near(r34.circumcenter(1), 2.0, tol, "rect(3,4) C_y");
  const RectMetrics r111 = rect_metrics({{1.0, 1.0, 1.0}});
  c.near(r111.inradius, 1.0 / (3.0 + std::sqrt(3.0)), tol, "rect(1,1,1) r");
  for (int i = 0; i < 3; ++i) c.near(r111.hypotenuse_orthocenter(i), 1.0 / 3.0, tol, "rect(1,1,1) B");

  const Vector thirds = Vector::Constant(3, 1.0 / 3.0);
  const Simplex eq = construct(thirds, 1.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) c.near(eq.squared_edge(i, j), 6.0, tol, "construct(1/3) edge^2");
  OrthoParams p;
  p.dim = 2;
  p.bary = thirds;
  p.obtuseness = -1.0;
  c.near(circum_data(p, eq).radius_sq, 2.0, tol, "construct(1/3) R^2 closed form");
  c.near(circumcenter(eq).radius * circumcenter(eq).radius, 2.0, tol, "construct(1/3) R^2 coordinates");

  const KiteSpec ks = equiradial_kite(5);
  c.near(ks.eccentricity() * ks.eccentricity(), 0.6, tol, "equiradial kite eps^2");
  const std::vector<double> kr = facet_circumradii(kite(ks));
  c.below(std::abs(kr.front() - kr.back()) / kr.back(), 1e-9, "equiradial kite base vs side facet radius");
  c.below(spread(kr), 1e-9, "equiradial kite facet radius spread");

  std::vector<double> signature;
  for (int branch : {1, 2}) {
    const EquiradialResult e = equiradial_general(9, 2, branch);
    const EquiradialSolution& s = e.solution;
    const double m = s.m, n = s.n;
    if (branch == 1) {
      c.near(s.a, 0.2026057, 1e-7 / 0.2026057, "equiradial(9,2) a");
      c.near(s.b, 0.0743485, 1e-7 / 0.0743485, "equiradial(9,2) b");
    }
    c.below(std::abs(s.x * s.y + n * s.x + m * s.y), 1e-10, "equiradial group relation residual");
    c.below(std::abs(s.x * s.y + s.x + s.y - 6.0 * 8.0), 1e-10, "equiradial radius relation residual");
    c.below(std::abs(m * s.a + n * s.b - 1.0), 1e-10, "equiradial ma+nb=1 residual");
    const std::vector<double> radii = facet_circumradii(e.simplex);
    c.expect(radii.size() == 10, "equiradial facet count");
    c.below(spread(radii), 1e-8, "equiradial facet radius spread");
    signature.push_back(e.simplex.squared_edge(0, 1) / e.simplex.squared_edge(2, 3));
  }
  c.expect(std::abs(signature[0] - signature[1]) > 1e-3, "equiradial branches share an edge-ratio signature");
}

void round_trips(Criterion& c) {
  int count = 0;
  for (int d = 2; d <= 8; ++d) {
    for (OrthoClass cls : {OrthoClass::acute, OrthoClass::obtuse}) {
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const OrthoParams p = sample_params(d, cls, derive_seed("acceptance-roundtrip", seed, static_cast<std::uint64_t>(d)));
        const OrthoParams q = params_of(construct(p.bary, 1.0));
        c.below((q.bary - p.bary).cwiseAbs().maxCoeff(), 1e-8, "params_of(construct) bary, d=" + std::to_string(d));
        c.below(std::abs(q.obtuseness - p.obtuseness), 1e-8, "params_of(construct) obtuseness");
        c.expect(q.cls == p.cls, "params_of(construct) class");
        ++count;
      }
    }
  }
  c.expect(count >= 1400, "round-trip sample count");
  for (int d = 3; d <= 8; ++d) {
    Rng rng(derive_seed("acceptance-lift", static_cast<std::uint64_t>(d), 0));
    for (int k = 0; k < 20; ++k) {
      RectSpec spec;
      for (int i = 0; i < d; ++i) spec.legs.push_back(rng.uniform(0.5, 2.0));
      const Simplex r = rectangular(spec);
      IndexList hyp(static_cast<std::size_t>(d));
      std::iota(hyp.begin(), hyp.end(), 0);
      const RectLift l = lift_to_rectangular(face(r, hyp));
      for (int i = 0; i < d; ++i) {
        c.near(l.spec.legs[static_cast<std::size_t>(i)], spec.legs[static_cast<std::size_t>(i)], 1e-8,
               "lift legs, d=" + std::to_string(d));
      }
    }
  }
}

void sign_law(Criterion& c) {
  int samples = 0;
  for (int d = 2; d <= 8; ++d) {
    for (OrthoClass cls : {OrthoClass::acute, OrthoClass::obtuse}) {
      for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const OrthoParams p = sample_params(d, cls, derive_seed("acceptance-sign", seed, static_cast<std::uint64_t>(d)));
        const Simplex s = construct(p.bary, 1.0);
        int obtuse = 0;
        bool ok = true;
        for (std::size_t i = 0; i < s.vertex_count(); ++i) {
          const VertexAngle v = vertex_angle(s, i);
          const bool positive = p.bary(static_cast<Eigen::Index>(i)) > 0.0;
          if (cls == OrthoClass::acute) {
            ok = ok && v == VertexAngle::strongly_acute;
          } else if (v == VertexAngle::strongly_obtuse) {
            ++obtuse;
            ok = ok && positive;
          } else {
            ok = ok && v == VertexAngle::strongly_acute;
          }
        }
        if (cls == OrthoClass::obtuse) ok = ok && obtuse == 1;
        c.expect(ok, "sign law violated at d=" + std::to_string(d) + " seed " + std::to_string(seed));
        ++samples;
      }
    }
  }
  c.expect(samples >= 400, "sign-law sample count");
}

void determinism(Criterion& c) {
  auto capture = [] {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--suite", "all", "--samples", "100", "--seed", "42"}, in, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = capture(), b = capture();
  c.expect(a.first == 0 && b.first == 0, "verify exit code");
  c.expect(!a.second.empty() && a.second == b.second, "verify reports differ between runs");
}

}  // namespace

int main() {
  std::vector<Criterion> all;
  auto run = [&](int id, const std::string& name, auto&& body) {
    Criterion c;
    c.id = id;
    c.name = name;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    all.push_back(std::move(c));
  };

  run(1, "formula fixtures", formula_fixtures);
  run(2, "round trips (construct/params_of d=2..8, rectangular lift d=3..8)", round_trips);
  run(3, "non-regular orthocentric and rectangular centers never coincide", [](Criterion& c) {
    const SuiteReport reg = suite("regularity", 1000, 3, 6);
    c.suite(reg);
    c.expect(reg.samples >= 1000, "regularity sample count");
    c.suite(suite("rectangular", 200, 2, 8));
  });
  run(4, "Euler line, Feuerbach spheres, vertex sum, Egervary parameters", [](Criterion& c) {
    c.suite(suite("euler", 300, 2, 6));
  });
  run(5, "center equivalences, margin-robust, d=3..6", [](Criterion& c) {
    const SuiteReport r = suite("equivalences", 500, 3, 6);
    c.suite(r);
    c.expect(r.samples >= 500, "equivalence sample count");
  });
  run(6, "sign law of vertex angles", [](Criterion& c) {
    sign_law(c);
    c.suite(suite("parametrization", 1400, 2, 8));
  });
  run(7, "verify reports are byte-identical for a fixed seed", determinism);

  bool ok = true;
  for (const Criterion& c : all) {
    std::printf("%s criterion %d: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str());
    for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) std::printf("    %s\n", c.failures[i].c_str());
    if (c.failures.size() > 5) std::printf("    ... %zu more\n", c.failures.size() - 5);
    ok = ok && c.pass;
  }
  return ok ? 0 : 1;
}
