#include "eigenpoly/catalog.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "eigenpoly/parallel.hpp"

namespace eigenpoly {

namespace {

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> e;
  auto positive = [&](std::string name, std::string gen, Scale sc, int dim, int nv,
                      std::optional<int> ne, std::optional<int> nf) {
    CatalogEntry c;
    c.name = std::move(name);
    c.gen = std::move(gen);
    c.scale = sc;
    c.expect_spectral = true;
    c.expect_distance_transitive = true;
    c.expect_dim = dim;
    c.expect_vertices = nv;
    c.expect_edges = ne;
    c.expect_facets = nf;
    e.push_back(std::move(c));
  };

  for (int n = 3; n <= 8; ++n)
    positive("cycle(" + std::to_string(n) + ")", "cycle:" + std::to_string(n), Scale::fast, 2, n,
             n, n);
  for (int n = 3; n <= 6; ++n)
    positive("complete(" + std::to_string(n) + ")", "complete:" + std::to_string(n), Scale::fast,
             n - 1, n, n * (n - 1) / 2, n);
  positive("hypercube(3)", "hypercube:3", Scale::fast, 3, 8, 12, 6);
  positive("hypercube(4)", "hypercube:4", Scale::fast, 4, 16, 32, 8);
  positive("dodecahedron", "dodecahedron", Scale::fast, 3, 20, 30, 12);
  positive("icosahedron", "icosahedron", Scale::fast, 3, 12, 30, 20);
  for (int m = 2; m <= 4; ++m)
    positive("cocktail_party(" + std::to_string(m) + ")", "cocktail_party:" + std::to_string(m),
             Scale::fast, m, 2 * m, 2 * m * (m - 1), 1 << m);
  positive("johnson(4,2)", "johnson:4,2", Scale::fast, 3, 6, 12, 8);
  positive("johnson(5,2)", "johnson:5,2", Scale::fast, 4, 10, 30, 10);
  positive("hamming(2,3)", "hamming:2,3", Scale::fast, 4, 9, 18, 6);
  positive("hamming(3,2)", "hamming:3,2", Scale::fast, 3, 8, 12, 6);
  positive("halved_cube(4)", "halved_cube:4", Scale::slow, 4, 8, 24, 16);
  positive("halved_cube(5)", "halved_cube:5", Scale::slow, 5, 16, 80, 26);
  positive("schlafli", "schlafli", Scale::slow, 6, 27, 216, 99);
  positive("gosset", "gosset", Scale::stretch, 7, 56, 756, 702);

  // ridge-route criterion up to dimension 4; metric identities everywhere
  for (auto& c : e) {
    if (c.expect_dim && *c.expect_dim <= 4) {
      c.run_criterion = true;
      c.expect_criterion = true;
    }
    c.run_metrics = true;
  }

  {
    CatalogEntry c;
    c.name = "prism(3)";
    c.gen = "prism:3";
    c.expect_spectral = false;
    c.note = "no eigenvalue of multiplicity three";
    e.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.name = "petersen";
    c.gen = "petersen";
    c.expect_spectral = false;
    c.expect_distance_transitive = true;
    c.note = "theta_2 multiplicity 5 against skeleton degree 3";
    e.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.name = "holt";
    c.gen = "holt";
    c.scale = Scale::slow;
    c.expect_spectral = false;
    c.note = "degree 4 against theta_2 multiplicity 6";
    e.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.name = "rhombic_dodecahedron";
    c.expect_spectral = true;
    c.expect_dim = 3;
    c.expect_vertices = 14;
    c.expect_edges = 24;
    c.expect_facets = 12;
    c.run_criterion = true;
    c.expect_criterion = true;
    c.note = "spectral but not vertex-transitive";
    e.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.name = "rhombic_triacontahedron";
    c.expect_spectral = false;
    c.expect_dim = 3;
    c.expect_vertices = 32;
    c.expect_edges = 60;
    c.expect_facets = 30;
    c.run_criterion = true;
    c.expect_criterion = false;
    e.push_back(std::move(c));
  }
  {
    CatalogEntry c;
    c.name = "neighborly_4_7";
    c.expect_spectral = false;
    c.expect_balanced = true;
    c.expect_dim = 4;
    c.expect_vertices = 7;
    c.note = "vertex-transitive neighborly 4-polytope on 7 vertices";
    e.push_back(std::move(c));
  }
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

Polytope catalog_polytope(const std::string& name) {
  if (name == "rhombic_dodecahedron") {
    // cube corners and face centers at the balanced radii
    Eigen::MatrixXd pts(14, 3);
    int r = 0;
    for (int x : {-1, 1})
      for (int y : {-1, 1})
        for (int z : {-1, 1}) pts.row(r++) << x, y, z;
    for (int ax = 0; ax < 3; ++ax)
      for (int s : {-1, 1}) {
        Eigen::RowVector3d v = Eigen::RowVector3d::Zero();
        v(ax) = 2.0 * s;
        pts.row(r++) = v;
      }
    return convex_hull(PointConfiguration(pts));
  }
  if (name == "rhombic_triacontahedron") {
    // polar dual of the icosidodecahedron
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Eigen::RowVector3d> v;
    for (int s : {-1, 1}) {
      v.emplace_back(0, 0, s * phi);
      v.emplace_back(0, s * phi, 0);
      v.emplace_back(s * phi, 0, 0);
    }
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int sz : {-1, 1}) {
          double a = sx * 0.5, b = sy * phi / 2.0, c = sz * phi * phi / 2.0;
          v.emplace_back(a, b, c);
          v.emplace_back(b, c, a);
          v.emplace_back(c, a, b);
        }
    Eigen::MatrixXd pts(static_cast<int>(v.size()), 3);
    for (size_t i = 0; i < v.size(); ++i) pts.row(static_cast<int>(i)) = v[i];
    return polar_dual(convex_hull(PointConfiguration(pts)));
  }
  if (name == "neighborly_4_7") {
    // trigonometric moment curve on 7 points
    Eigen::MatrixXd pts(7, 4);
    for (int i = 0; i < 7; ++i) {
      double t = 2.0 * std::numbers::pi * i / 7.0;
      pts.row(i) << std::cos(t), std::sin(t), std::cos(2 * t), std::sin(2 * t);
    }
    return convex_hull(PointConfiguration(pts));
  }
  throw std::invalid_argument("catalog_polytope: unknown entry " + name);
}

namespace {

EntryResult run_entry(const CatalogEntry& entry) {
  EntryResult res;
  res.name = entry.name;
  auto t0 = std::chrono::steady_clock::now();
  auto fail = [&](std::string msg) {
    res.ok = false;
    res.messages.push_back(std::move(msg));
  };
  res.ok = true;

  try {
    Polytope poly;
    Certificate cert;
    std::optional<Spectrum> spec;

    if (!entry.gen.empty()) {
      Graph g = generate_spec(entry.gen);
      spec = spectrum(g);
      if (entry.name == "prism(3)") {
        // negative control across every eigenvalue index
        for (int k = 1; k <= static_cast<int>(spec->groups.size()); ++k)
          if (is_spectral_graph(g, k).ok())
            fail("unexpectedly spectral at k=" + std::to_string(k));
      }
      cert = is_spectral_graph(g, 2);
      res.verdict = to_string(cert.kind);
      res.theta2 = spec->groups.size() > 1 ? spec->groups[1].theta : spec->groups[0].theta;

      Eigenmatrix phi = eigenmatrix(*spec, 2);
      poly = convex_hull(PointConfiguration(phi.entries));

      AutGroup aut = automorphisms(g);
      TransitivityProfile prof = transitivity(g, aut);
      res.distance_transitive = prof.distance_transitive;
      if (prof.distance_transitive != entry.expect_distance_transitive)
        fail(std::string("distance transitivity: expected ") +
             (entry.expect_distance_transitive ? "true" : "false"));

      if (cert.ok() != entry.expect_spectral)
        fail(std::string("spectral verdict: expected ") +
             (entry.expect_spectral ? "spectral" : "not spectral") + ", got " + res.verdict);
    } else {
      poly = catalog_polytope(entry.name);
      cert = is_spectral_polytope(poly);
      res.verdict = to_string(cert.kind);
      if (cert.theta) res.theta2 = *cert.theta;
      if (cert.ok() != entry.expect_spectral)
        fail(std::string("spectral verdict: expected ") +
             (entry.expect_spectral ? "spectral" : "not spectral") + ", got " + res.verdict);
      if (entry.expect_balanced) {
        Certificate bal = is_balanced(poly.vertices, skeleton_graph(poly), 1e-8);
        if (bal.kind != CertKind::balanced) fail("expected a balanced arrangement");
      }
    }

    res.dim = poly.dim;
    res.vertices = poly.n_vertices();
    res.edges = static_cast<int>(poly.edges.size());
    res.facets = static_cast<int>(poly.facets.size());
    if (entry.expect_dim && poly.dim != *entry.expect_dim)
      fail("dimension " + std::to_string(poly.dim) + ", expected " +
           std::to_string(*entry.expect_dim));
    if (entry.expect_vertices && res.vertices != *entry.expect_vertices)
      fail("vertex count " + std::to_string(res.vertices) + ", expected " +
           std::to_string(*entry.expect_vertices));
    if (entry.expect_spectral) {
      if (entry.expect_edges && res.edges != *entry.expect_edges)
        fail("edge count " + std::to_string(res.edges) + ", expected " +
             std::to_string(*entry.expect_edges));
      if (entry.expect_facets && res.facets != *entry.expect_facets)
        fail("facet count " + std::to_string(res.facets) + ", expected " +
             std::to_string(*entry.expect_facets));
    }

    if (entry.run_criterion && poly.dim == poly.ambient && poly.dim >= 2) {
      IzmestievMatrix x = izmestiev_ridge(poly);
      Certificate crit = theta2_criterion(x, skeleton_graph(poly));
      res.criterion = to_string(crit.kind);
      bool held = crit.kind == CertKind::spectral_polytope;
      if (held != entry.expect_criterion)
        fail("criterion verdict " + res.criterion + ", expected " +
             (entry.expect_criterion ? "pass" : "inconclusive"));
      if (held && std::abs(*crit.theta - res.theta2) > 1e-6)
        fail("criterion theta_2 deviates from the spectrum");
    }

    if (entry.run_metrics && cert.ok() && !entry.gen.empty()) {
      Spectrum skel_spec = spectrum(skeleton_graph(poly));
      MetricReport m = metric_report(poly, skel_spec);
      if (m.applicable) {
        res.metric_ratio_gap = m.ratio_gap;
        res.metric_angle_gap = m.angle_gap;
        if (m.ratio_gap > 1e-8) fail("edge/circumradius ratio misses the closed form");
        if (m.angle_gap > 1e-8) fail("dual dihedral angle misses the closed form");
      }
    }
  } catch (const std::exception& ex) {
    res.error = true;
    fail(std::string("error: ") + ex.what());
  }

  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace

CatalogSummary run_catalog(Scale max_scale, bool parallel) {
  std::vector<const CatalogEntry*> todo;
  for (const auto& e : catalog_entries())
    if (static_cast<int>(e.scale) <= static_cast<int>(max_scale)) todo.push_back(&e);

  CatalogSummary summary;
  summary.results.resize(todo.size());
  const int nthreads = parallel ? max_threads() : 1;
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (long i = 0; i < static_cast<long>(todo.size()); ++i)
    summary.results[i] = run_entry(*todo[i]);

  for (const auto& r : summary.results)
    if (!r.ok) summary.all_ok = false;
  return summary;
}

std::string summary_table(const CatalogSummary& s) {
  std::ostringstream out;
  out << "entry                          ok  verdict               dim  V   E    F    DT criterion\n";
  for (const auto& r : s.results) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-30s %-3s %-21s %-4d %-3d %-4d %-4d %-2s %s\n",
                  r.name.c_str(), r.ok ? "ok" : "FAIL", r.verdict.c_str(), r.dim, r.vertices,
                  r.edges, r.facets, r.distance_transitive ? "y" : "n",
                  r.criterion.empty() ? "-" : r.criterion.c_str());
    out << line;
    for (const auto& m : r.messages) out << "    ! " << m << '\n';
  }
  return out.str();
}

Json to_json(const CatalogSummary& s) {
  Json j;
  j["version"] = std::string(kVersion);
  j["all_ok"] = s.all_ok;
  Json rows = Json::array();
  for (const auto& r : s.results) {
    Json row;
    row["name"] = r.name;
    row["ok"] = r.ok;
    row["verdict"] = r.verdict;
    row["dim"] = r.dim;
    row["vertices"] = r.vertices;
    row["edges"] = r.edges;
    row["facets"] = r.facets;
    row["theta2"] = r.theta2;
    row["distance_transitive"] = r.distance_transitive;
    row["criterion"] = r.criterion;
    row["messages"] = r.messages;
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json catalog_manifest() {
  Json j;
  j["version"] = std::string(kVersion);
  Json rows = Json::array();
  for (const auto& e : catalog_entries()) {
    Json row;
    row["name"] = e.name;
    row["gen"] = e.gen;
    row["scale"] = e.scale == Scale::fast ? "fast" : e.scale == Scale::slow ? "slow" : "stretch";
    row["expect_spectral"] = e.expect_spectral;
    row["expect_distance_transitive"] = e.expect_distance_transitive;
    if (e.expect_dim) row["dim"] = *e.expect_dim;
    if (e.expect_vertices) row["vertices"] = *e.expect_vertices;
    if (e.expect_edges) row["edges"] = *e.expect_edges;
    if (e.expect_facets) row["facets"] = *e.expect_facets;
    if (!e.note.empty()) row["note"] = e.note;
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

}  // namespace eigenpoly
