#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "eigenpoly/catalog.hpp"
#include "eigenpoly/metrics.hpp"
#include "eigenpoly/spectra.hpp"

using namespace eigenpoly;

namespace {

Polytope eigenpolytope(const std::string& gen, int k = 2) {
  Graph g = generate_spec(gen);
  return convex_hull(PointConfiguration(eigenmatrix(spectrum(g), k).entries));
}

}  // namespace

TEST_CASE("cube metric identities") {
  Eigen::MatrixXd cube(8, 3);
  for (int v = 0; v < 8; ++v)
    cube.row(v) << (v & 4 ? 1 : -1), (v & 2 ? 1 : -1), (v & 1 ? 1 : -1);
  Polytope p = convex_hull(PointConfiguration(cube));
  MetricReport m = metric_report(p, spectrum(skeleton_graph(p)));

  CHECK(m.applicable);
  CHECK(m.degree == 3);
  CHECK(m.theta2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.lambda2 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(m.ratio == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(m.predicted_ratio == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(m.ratio_gap <= 1e-8);
  double arccos_third = std::acos(-1.0 / 3.0);
  CHECK(m.predicted_angle == doctest::Approx(arccos_third).epsilon(1e-12));
  for (double a : m.dihedral_angles) CHECK(a == doctest::Approx(arccos_third).epsilon(1e-10));
  CHECK(m.angle_gap <= 1e-8);
}

TEST_CASE("icosahedron dual dihedral") {
  Polytope p = eigenpolytope("icosahedron");
  MetricReport m = metric_report(p, spectrum(skeleton_graph(p)));
  CHECK(m.applicable);
  CHECK(m.degree == 5);
  CHECK(m.theta2 == doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
  CHECK(std::cos(m.predicted_angle) == doctest::Approx(-std::sqrt(5.0) / 5.0).epsilon(1e-10));
  CHECK(m.angle_gap <= 1e-8);
  CHECK(m.ratio_gap <= 1e-8);
}

TEST_CASE("cross-polytope: right dual dihedral from theta2 = 0") {
  Eigen::MatrixXd oct(6, 3);
  oct << 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1;
  Polytope p = convex_hull(PointConfiguration(oct));
  MetricReport m = metric_report(p, spectrum(skeleton_graph(p)));
  CHECK(m.degree == 4);
  CHECK(std::abs(m.theta2) <= 1e-12);
  CHECK(m.predicted_angle == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
  for (double a : m.dihedral_angles)
    CHECK(a == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-10));
  CHECK(m.ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("inapplicable and error paths") {
  // a cuboid keeps a regular skeleton but not constant edge lengths
  Eigen::MatrixXd cuboid(8, 3);
  for (int v = 0; v < 8; ++v)
    cuboid.row(v) << (v & 4 ? 1 : -1), (v & 2 ? 1 : -1), (v & 1 ? 2 : -2);
  Polytope c = convex_hull(PointConfiguration(cuboid));
  MetricReport m = metric_report(c, spectrum(skeleton_graph(c)));
  CHECK_FALSE(m.applicable);
  CHECK(m.reason == "edge lengths are not constant");

  // the closed forms need a regular skeleton degree
  Eigen::MatrixXd pyr(5, 3);
  pyr << 1, 1, 0, 1, -1, 0, -1, 1, 0, -1, -1, 0, 0, 0, 1.3;
  Polytope p = convex_hull(PointConfiguration(pyr));
  CHECK_THROWS_AS(metric_report(p, spectrum(skeleton_graph(p))), std::invalid_argument);
  CHECK_THROWS_AS(metric_report(catalog_polytope("rhombic_dodecahedron"),
                                spectrum(generate("rhombic_dodecahedron_skeleton", {}))),
                  std::invalid_argument);

  CHECK_THROWS_AS(metric_report(p, spectrum(generate("cycle", {7}))), std::invalid_argument);
}

TEST_CASE("metric identities across the small spectral catalog") {
  for (const char* gen : {"cycle:5", "cycle:8", "complete:4", "hamming:3,2", "dodecahedron",
                          "cocktail_party:3", "johnson:4,2"}) {
    CAPTURE(gen);
    Polytope p = eigenpolytope(gen);
    MetricReport m = metric_report(p, spectrum(skeleton_graph(p)));
    CHECK(m.applicable);
    CHECK(m.ratio_gap <= 1e-8);
    CHECK(m.angle_gap <= 1e-8);
  }
}
