#include "eigenpoly/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eigenpoly {

namespace {

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json edges_json(const std::vector<std::pair<int, int>>& edges) {
  Json out = Json::array();
  for (auto [i, j] : edges) out.push_back(Json::array({i + 1, j + 1}));
  return out;
}

}  // namespace

Json to_json(const Graph& g) {
  Json j;
  j["name"] = g.name();
  j["n"] = g.n();
  j["edges"] = edges_json(g.edges());
  return j;
}

Json to_json(const Spectrum& s) {
  Json j;
  j["n"] = s.n;
  j["tol"] = s.tol;
  Json groups = Json::array();
  for (const auto& grp : s.groups)
    groups.push_back(Json{{"theta", grp.theta}, {"multiplicity", grp.multiplicity}});
  j["groups"] = std::move(groups);
  return j;
}

Json to_json(const Eigenmatrix& phi) {
  Json j;
  j["theta"] = phi.theta;
  j["k"] = phi.k;
  j["source"] = phi.source;
  j["entries"] = matrix_json(phi.entries);
  return j;
}

Json to_json(const Polytope& p) {
  Json j;
  j["dim"] = p.dim;
  j["ambient"] = p.ambient;
  j["degenerate"] = p.degenerate;
  j["vertices"] = matrix_json(p.vertices);
  j["edges"] = edges_json(p.edges);
  Json facets = Json::array();
  for (const auto& f : p.facets) {
    Json fj;
    Json n = Json::array();
    for (int t = 0; t < f.normal.size(); ++t) n.push_back(f.normal(t));
    fj["normal"] = std::move(n);
    fj["offset"] = f.offset;
    Json vs = Json::array();
    for (int v : f.vertices) vs.push_back(v + 1);
    fj["vertices"] = std::move(vs);
    facets.push_back(std::move(fj));
  }
  j["facets"] = std::move(facets);
  if (!p.warning.empty()) j["warning"] = p.warning;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["theta"] = c.theta ? Json(*c.theta) : Json(nullptr);
  j["k"] = c.k ? Json(*c.k) : Json(nullptr);
  j["residuals"] = Json(c.residuals);
  Json w;
  if (!c.witness_map.empty()) {
    Json m = Json::array();
    for (int v : c.witness_map) m.push_back(v + 1);
    w["index_map"] = std::move(m);
  }
  if (c.witness_transition.size() > 0) w["transition"] = matrix_json(c.witness_transition);
  if (c.witness_edge) w["edge"] = Json::array({c.witness_edge->first, c.witness_edge->second});
  j["witness"] = std::move(w);
  j["reasons"] = c.reasons;
  return j;
}

Json to_json(const AuditReport& a) {
  auto item = [](const AuditItem& it) {
    return Json{{"pass", it.pass}, {"margin", it.margin}};
  };
  Json j;
  j["negative_on_edges"] = item(a.negative_on_edges);
  j["zero_off_edges"] = item(a.zero_off_edges);
  j["kernel_contains_psi"] = item(a.kernel_contains_psi);
  j["single_negative"] = item(a.single_negative);
  j["kernel_dimension"] = item(a.kernel_dimension);
  j["all_pass"] = a.all_pass();
  return j;
}

Json to_json(const IzmestievMatrix& x) {
  Json j;
  j["scheme"] = x.scheme == IzmestievScheme::finite_difference ? "finite_difference"
                                                               : "ridge_formula";
  j["step"] = x.step;
  j["residuals"] = Json(x.residuals);
  j["X"] = matrix_json(x.X);
  return j;
}

Json to_json(const MetricReport& m) {
  Json j;
  j["applicable"] = m.applicable;
  if (!m.reason.empty()) j["reason"] = m.reason;
  j["degree"] = m.degree;
  j["theta2"] = m.theta2;
  j["lambda2"] = m.lambda2;
  j["edge_lengths"] = Json{{"min", m.edge_min}, {"max", m.edge_max}, {"mean", m.edge_mean}};
  j["circumradius"] = m.circumradius;
  j["ratio"] = m.ratio;
  j["predicted_ratio"] = m.predicted_ratio;
  j["ratio_gap"] = m.ratio_gap;
  j["dihedral_mean"] = m.dihedral_mean;
  j["predicted_angle"] = m.predicted_angle;
  j["angle_gap"] = m.angle_gap;
  return j;
}

Json to_json(const GroupReport& r) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    Json gj;
    Json sig = Json::array();
    for (int v : g.sigma) sig.push_back(v + 1);
    gj["sigma"] = std::move(sig);
    gj["T"] = matrix_json(g.T);
    gj["orthogonality_gap"] = g.orthogonality_gap;
    gj["equivariance_gap"] = g.equivariance_gap;
    gens.push_back(std::move(gj));
  }
  j["generators"] = std::move(gens);
  j["group_order"] = r.group_order;
  j["image_count"] = r.image_count;
  j["enumerated"] = r.enumerated;
  j["injective"] = r.injective;
  j["homomorphism_ok"] = r.homomorphism_ok;
  j["spectral"] = r.spectral;
  j["max_hom_gap"] = r.max_hom_gap;
  j["max_equivariance_gap"] = r.max_equivariance_gap;
  return j;
}

Json to_json(const TransitivityProfile& t) {
  Json j;
  j["vertex_transitive"] = t.vertex_transitive;
  j["edge_transitive"] = t.edge_transitive;
  j["arc_transitive"] = t.arc_transitive;
  j["distance_transitive"] = t.distance_transitive;
  j["half_transitive"] = t.half_transitive;
  j["orbit_counts"] = t.orbit_counts;
  j["connected"] = t.connected;
  if (!t.reason.empty()) j["reason"] = t.reason;
  return j;
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "theta,multiplicity\n";
  out.precision(17);
  for (const auto& g : s.groups) out << g.theta << ',' << g.multiplicity << '\n';
  return out.str();
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
  std::ostringstream out;
  out.precision(17);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

std::string metrics_csv(const MetricReport& m) {
  std::ostringstream out;
  out.precision(17);
  out << "quantity,measured,predicted,gap\n";
  out << "edge_over_circumradius," << m.ratio << ',' << m.predicted_ratio << ',' << m.ratio_gap
      << '\n';
  out << "dual_dihedral," << m.dihedral_mean << ',' << m.predicted_angle << ',' << m.angle_gap
      << '\n';
  return out.str();
}

std::string to_off(const Polytope& p) {
  if (p.dim != 2 && p.dim != 3)
    throw std::invalid_argument("to_off: only 2- and 3-dimensional polytopes");
  if (p.dim != p.ambient) throw std::invalid_argument("to_off: polytope not full-dimensional");

  std::ostringstream out;
  out.precision(17);
  const int nv = p.n_vertices();

  // cyclic vertex order per facet (polygon walk by angle in the facet plane)
  auto ordered_facet = [&](const Facet& f) {
    if (p.dim == 2) return f.vertices;  // a 2-polytope facet is a segment
    Eigen::Vector3d n = f.normal;
    Eigen::Vector3d ref = std::abs(n(0)) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    Eigen::Vector3d b1 = n.cross(ref).normalized();
    Eigen::Vector3d b2 = n.cross(b1);  // (b1, b2, n) right-handed: b1 x b2 = -|..| care below
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (int v : f.vertices) c += p.vertices.row(v).transpose();
    c /= static_cast<double>(f.vertices.size());
    std::vector<std::pair<double, int>> ang;
    for (int v : f.vertices) {
      Eigen::Vector3d r = p.vertices.row(v).transpose() - c;
      ang.emplace_back(std::atan2(r.dot(b2), r.dot(b1)), v);
    }
    std::sort(ang.begin(), ang.end());
    std::vector<int> order;
    for (auto& [a, v] : ang) order.push_back(v);
    // make the walk counterclockwise when seen from outside
    if (order.size() >= 3) {
      Eigen::Vector3d u = p.vertices.row(order[1]).transpose() - p.vertices.row(order[0]).transpose();
      Eigen::Vector3d w = p.vertices.row(order[2]).transpose() - p.vertices.row(order[1]).transpose();
      if (u.cross(w).dot(n) < 0) std::reverse(order.begin(), order.end());
    }
    return order;
  };

  out << "OFF\n";
  if (p.dim == 2) {
    // embed in 3-space with one polygon face
    out << nv << " 1 " << p.edges.size() << "\n";
    for (int v = 0; v < nv; ++v)
      out << p.vertices(v, 0) << ' ' << p.vertices(v, 1) << " 0\n";
    Eigen::RowVector2d c2 = p.vertices.colwise().mean();
    std::vector<std::pair<double, int>> ang;
    for (int v = 0; v < nv; ++v)
      ang.emplace_back(std::atan2(p.vertices(v, 1) - c2(1), p.vertices(v, 0) - c2(0)), v);
    std::sort(ang.begin(), ang.end());
    out << nv;
    for (auto& [a, v] : ang) out << ' ' << v;
    out << '\n';
    return out.str();
  }

  out << nv << ' ' << p.facets.size() << ' ' << p.edges.size() << '\n';
  for (int v = 0; v < nv; ++v)
    out << p.vertices(v, 0) << ' ' << p.vertices(v, 1) << ' ' << p.vertices(v, 2) << '\n';
  for (const auto& f : p.facets) {
    auto order = ordered_facet(f);
    out << order.size();
    for (int v : order) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace eigenpoly
