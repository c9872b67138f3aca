#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eigenpoly/catalog.hpp"
#include "eigenpoly/certify.hpp"
#include "support/oracles.hpp"

using namespace eigenpoly;

namespace {

Eigen::MatrixXd cube_pm1() {
  Eigen::MatrixXd pts(8, 3);
  for (int v = 0; v < 8; ++v)
    pts.row(v) << (v & 4 ? 1 : -1), (v & 2 ? 1 : -1), (v & 1 ? 1 : -1);
  return pts;
}

}  // namespace

TEST_CASE("balance certificates") {
  Graph q3 = generate("hypercube", {3});
  Certificate c = is_balanced(cube_pm1(), q3);
  CHECK(c.kind == CertKind::balanced);
  CHECK(*c.theta == doctest::Approx(1.0).epsilon(1e-12));

  // centered regular simplex against the complete graph
  Eigen::MatrixXd simplex(4, 3);
  simplex << 1, 1, 1, 1, -1, -1, -1, 1, -1, -1, -1, 1;
  Certificate s = is_balanced(simplex, generate("complete", {4}));
  CHECK(s.kind == CertKind::balanced);
  CHECK(*s.theta == doctest::Approx(-1.0).epsilon(1e-12));

  Eigen::MatrixXd bent = cube_pm1();
  bent(0, 0) += 0.1;
  Certificate b = is_balanced(bent, q3);
  CHECK(b.kind == CertKind::not_spectral);
  CHECK(b.residuals.at("balance_residual_rel") > 1e-3);

  CHECK_THROWS_AS(is_balanced(simplex, q3), std::invalid_argument);
}

TEST_CASE("spectral polytope certificates") {
  Certificate cube = is_spectral_polytope(convex_hull(PointConfiguration(cube_pm1())));
  CHECK(cube.kind == CertKind::spectral_polytope);
  CHECK(*cube.theta == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(*cube.k == 2);

  // neighborly 4-polytope: balanced at -1 yet far from spectral
  Polytope nb = catalog_polytope("neighborly_4_7");
  CHECK(nb.dim == 4);
  CHECK(skeleton_graph(nb).m() == 21);  // complete edge-graph
  Certificate bal = is_balanced(nb.vertices, skeleton_graph(nb));
  CHECK(bal.kind == CertKind::balanced);
  CHECK(*bal.theta == doctest::Approx(-1.0).epsilon(1e-9));
  Certificate nbc = is_spectral_polytope(nb);
  CHECK(nbc.kind == CertKind::not_spectral);
  CHECK(nbc.residuals.at("multiplicity") == 6);

  Certificate rd = is_spectral_polytope(catalog_polytope("rhombic_dodecahedron"));
  CHECK(rd.kind == CertKind::spectral_polytope);
  CHECK(*rd.theta == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(*rd.k == 2);

  Certificate rt = is_spectral_polytope(catalog_polytope("rhombic_triacontahedron"));
  CHECK(rt.kind == CertKind::not_spectral);
}

TEST_CASE("spectral graph certificates") {
  CHECK(is_spectral_graph(generate("hypercube", {3}), 2).kind == CertKind::spectral_graph);
  CHECK(is_spectral_graph(generate("cycle", {5}), 2).kind == CertKind::spectral_graph);

  Certificate penta = is_spectral_graph(generate("cycle", {5}), 3);
  CHECK(penta.kind == CertKind::not_spectral);
  REQUIRE(penta.witness_edge.has_value());
  CHECK(*penta.witness_edge == std::pair<int, int>{1, 2});
  CHECK(penta.residuals.at("argmax_route_agrees") == 1.0);

  // the triangular prism fails at every index
  Graph prism = generate("prism", {3});
  Spectrum s = spectrum(prism);
  for (int k = 1; k <= static_cast<int>(s.groups.size()); ++k) {
    Certificate c = is_spectral_graph(prism, k);
    CAPTURE(k);
    CHECK_FALSE(c.ok());
  }

  Certificate pet = is_spectral_graph(generate("petersen", {}), 2);
  CHECK(pet.kind == CertKind::not_spectral);
  CHECK(pet.residuals.at("argmax_route_agrees") == 1.0);

  CHECK_THROWS_AS(is_spectral_graph(parse_graph("4\n1 2\n3 4\n", GraphFormat::edge_list), 1),
                  std::invalid_argument);
}

TEST_CASE("spectral graph round-trips through the polytope certificate") {
  for (const char* name : {"hypercube:3", "cycle:6", "johnson:4,2"}) {
    Graph g = generate_spec(name);
    Certificate gc = is_spectral_graph(g, 2);
    CAPTURE(name);
    REQUIRE(gc.kind == CertKind::spectral_graph);
    Eigenmatrix phi = eigenmatrix(spectrum(g), 2);
    Certificate pc = is_spectral_polytope(convex_hull(PointConfiguration(phi.entries)));
    CHECK(pc.kind == CertKind::spectral_polytope);
    CHECK(*pc.theta == doctest::Approx(*gc.theta).epsilon(1e-9));
  }
}

TEST_CASE("distance-regular graphs imprint their edges on the embedding") {
  // measured fact: every graph edge appears among the hull edges
  for (const char* name : {"petersen", "johnson:5,2", "hamming:2,3"}) {
    Graph g = generate_spec(name);
    Eigenmatrix phi = eigenmatrix(spectrum(g), 2);
    Polytope p = convex_hull(PointConfiguration(phi.entries));
    auto hull_edges = p.edges_on_input();
    std::set<std::pair<int, int>> he(hull_edges.begin(), hull_edges.end());
    CAPTURE(name);
    for (auto e : g.edges()) CHECK(he.count(e) == 1);
  }
}

TEST_CASE("linear transitions") {
  Eigenmatrix phi = eigenmatrix(spectrum(generate("hypercube", {3})), 2);
  const Eigen::MatrixXd& a = phi.entries;

  auto t1 = linear_transition(a, a);
  REQUIRE(t1.has_value());
  CHECK((t1->transition - Eigen::MatrixXd::Identity(3, 3)).norm() <= 1e-10);

  Eigen::Vector3d diag(1.0, 2.0, 3.0);
  Eigen::MatrixXd b = a * diag.asDiagonal();
  auto t2 = linear_transition(a, b);
  REQUIRE(t2.has_value());
  CHECK((t2->transition - Eigen::MatrixXd(diag.asDiagonal())).norm() <= 1e-10);

  auto t3 = linear_transition(b, a);
  REQUIRE(t3.has_value());
  CHECK((t2->transition * t3->transition - Eigen::MatrixXd::Identity(3, 3)).norm() <= 1e-8);

  // span mismatch: pad the pentagon embedding into three columns
  Eigenmatrix penta = eigenmatrix(spectrum(generate("cycle", {5})), 3);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(8, 3);
  c.topLeftCorner(5, 2) = penta.entries;
  c(5, 2) = 1.0;
  CHECK_FALSE(linear_transition(a, c).has_value());

  Eigen::MatrixXd rank_deficient = Eigen::MatrixXd::Zero(8, 3);
  rank_deficient.col(0).setOnes();
  CHECK_THROWS_AS(linear_transition(a, rank_deficient), std::invalid_argument);
}

TEST_CASE("reconstruction from a subspace") {
  {
    Eigenmatrix phi = eigenmatrix(spectrum(generate("hypercube", {3})), 2);
    Reconstruction rec = reconstruct_from_subspace(phi.entries);
    CHECK_FALSE(rec.degenerate.has_value());
    Graph q3 = generate("hypercube", {3});
    std::set<std::pair<int, int>> got(rec.graph.edges().begin(), rec.graph.edges().end());
    std::set<std::pair<int, int>> want(q3.edges().begin(), q3.edges().end());
    CHECK(got == want);
  }
  {
    Eigenmatrix phi = eigenmatrix(spectrum(generate("dodecahedron", {})), 2);
    Reconstruction rec = reconstruct_from_subspace(phi.entries);
    CHECK(rec.polytope.dim == 3);
    CHECK(rec.polytope.n_vertices() == 20);
    CHECK(rec.polytope.edges.size() == 30);
    CHECK(rec.polytope.facets.size() == 12);
  }
  {
    // Perron direction of a regular graph collapses to a point
    Eigenmatrix phi = eigenmatrix(spectrum(generate("complete", {4})), 1);
    Reconstruction rec = reconstruct_from_subspace(phi.entries);
    REQUIRE(rec.degenerate.has_value());
    CHECK(rec.degenerate->kind == CertKind::degenerate);
  }
  Eigen::MatrixXd not_ortho = Eigen::MatrixXd::Ones(4, 2);
  CHECK_THROWS_AS(reconstruct_from_subspace(not_ortho), std::invalid_argument);
}
