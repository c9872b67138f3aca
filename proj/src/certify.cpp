#include "eigenpoly/certify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace eigenpoly {

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::balanced: return "balanced";
    case CertKind::spectral_polytope: return "spectral_polytope";
    case CertKind::spectral_graph: return "spectral_graph";
    case CertKind::not_spectral: return "not_spectral";
    case CertKind::degenerate: return "degenerate";
    case CertKind::criterion_inconclusive: return "criterion_inconclusive";
  }
  return "?";
}

Certificate is_balanced(const Eigen::MatrixXd& psi, const Graph& g, double tol) {
  if (psi.rows() != g.n())
    throw std::invalid_argument("is_balanced: row count does not match vertex count");
  Certificate cert;
  Eigen::MatrixXd a = adjacency_matrix(g);
  Eigen::MatrixXd apsi = a * psi;
  double denom = psi.squaredNorm();
  if (denom == 0.0) throw std::invalid_argument("is_balanced: zero configuration");
  double theta = (apsi.array() * psi.array()).sum() / denom;
  double rel = (apsi - theta * psi).norm() / psi.norm();
  cert.theta = theta;
  cert.residuals["balance_residual_rel"] = rel;
  if (rel <= tol) {
    cert.kind = CertKind::balanced;
  } else {
    cert.kind = CertKind::not_spectral;
    cert.reasons.push_back("no eigenvalue balances the arrangement");
  }
  return cert;
}

Certificate is_spectral_polytope(const Polytope& p, double tol) {
  Certificate cert;
  if (p.dim != p.ambient || p.dim < 1 || p.n_vertices() < 2) {
    cert.kind = CertKind::degenerate;
    cert.reasons.push_back("degenerate polytope (affine dimension " + std::to_string(p.dim) + ")");
    return cert;
  }
  Graph g = skeleton_graph(p);
  cert = is_balanced(p.vertices, g, tol);
  if (cert.kind != CertKind::balanced) return cert;

  Spectrum s = spectrum(g);
  double theta = *cert.theta;
  int best = 0;
  for (size_t i = 1; i < s.groups.size(); ++i)
    if (std::abs(s.groups[i].theta - theta) < std::abs(s.groups[best].theta - theta))
      best = static_cast<int>(i);
  double gap = std::abs(s.groups[best].theta - theta);
  cert.residuals["eigenvalue_gap"] = gap;
  if (gap > std::max(10.0 * s.tol, 1e-6)) {
    cert.kind = CertKind::not_spectral;
    cert.reasons.push_back("balanced eigenvalue does not match the skeleton spectrum");
    return cert;
  }
  cert.k = best + 1;
  int mult = s.groups[best].multiplicity;
  cert.residuals["multiplicity"] = mult;
  cert.residuals["dimension"] = p.dim;
  if (mult == p.dim) {
    cert.kind = CertKind::spectral_polytope;
  } else {
    cert.kind = CertKind::not_spectral;
    cert.reasons.push_back("eigenvalue multiplicity " + std::to_string(mult) +
                           " differs from dimension " + std::to_string(p.dim));
  }
  return cert;
}

namespace {

// argmax of <x, row_k> over all rows, with ties below tie_tol
std::set<int> argmax_rows(const Eigen::MatrixXd& rows, const Eigen::VectorXd& x, double tie_tol) {
  Eigen::VectorXd vals = rows * x;
  double top = vals.maxCoeff();
  std::set<int> arg;
  for (int i = 0; i < vals.size(); ++i)
    if (vals(i) >= top - tie_tol) arg.insert(i);
  return arg;
}

// Lemma-style reconstruction test through supporting directions: a set S is
// a face of the hull iff some x has argmax <x, v_k> exactly S. Candidate x
// vectors come from sums of outward facet normals (interior rays of the
// relevant normal cones).
bool argmax_route_spectral(const Graph& g, const Polytope& p, double tie_tol,
                           std::string* fail) {
  const int n = g.n();
  // every input row must be a distinct hull vertex
  for (int i = 0; i < n; ++i)
    if (p.input_class[i].cls != PointClass::vertex) {
      *fail = "row " + std::to_string(i + 1) + " is not a hull vertex";
      return false;
    }
  std::vector<std::vector<int>> facets_of(p.n_vertices());
  for (size_t f = 0; f < p.facets.size(); ++f)
    for (int v : p.facets[f].vertices) facets_of[v].push_back(static_cast<int>(f));

  std::vector<int> vertex_of_input(n, -1);
  for (int i = 0; i < n; ++i) vertex_of_input[i] = p.input_class[i].index;

  for (int i = 0; i < n; ++i) {
    int vi = vertex_of_input[i];
    Eigen::VectorXd x = Eigen::VectorXd::Zero(p.ambient);
    for (int f : facets_of[vi]) x += p.facets[f].normal;
    auto arg = argmax_rows(p.vertices, x, tie_tol);
    if (arg != std::set<int>{vi}) {
      *fail = "no supporting direction isolates vertex " + std::to_string(i + 1);
      return false;
    }
  }
  int realized = 0;
  for (auto [i, j] : g.edges()) {
    int vi = vertex_of_input[i], vj = vertex_of_input[j];
    Eigen::VectorXd x = Eigen::VectorXd::Zero(p.ambient);
    int shared = 0;
    for (int f : facets_of[vi])
      if (std::binary_search(p.facets[f].vertices.begin(), p.facets[f].vertices.end(), vj)) {
        x += p.facets[f].normal;
        ++shared;
      }
    if (shared == 0) {
      *fail = "graph edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
              ") lies on no common facet";
      return false;
    }
    auto arg = argmax_rows(p.vertices, x, tie_tol);
    if (arg != std::set<int>{vi, vj}) {
      *fail = "graph edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
              ") is not a hull face";
      return false;
    }
    ++realized;
  }
  if (realized != static_cast<int>(p.edges.size())) {
    *fail = "hull has " + std::to_string(p.edges.size()) + " edges, graph has " +
            std::to_string(realized);
    return false;
  }
  return true;
}

}  // namespace

Certificate is_spectral_graph(const Graph& g, int k, double tol) {
  Certificate cert;
  DistanceMatrix dm = distances(g);
  if (!dm.connected) throw std::invalid_argument("is_spectral_graph: graph must be connected");

  Spectrum s = spectrum(g);
  Eigenmatrix phi = eigenmatrix(s, k);  // throws on bad k
  cert.theta = phi.theta;
  cert.k = k;

  Polytope p = convex_hull(PointConfiguration(phi.entries));
  cert.residuals["hull_dim"] = p.dim;

  // distinct-vertex requirement; colliding rows refuse a verdict
  for (int i = 0; i < g.n(); ++i) {
    if (p.input_class[i].cls == PointClass::duplicate) {
      cert.kind = CertKind::degenerate;
      cert.witness_edge = {{p.input_class[i].index + 1, i + 1}};
      cert.reasons.push_back("embedding rows collide; no spectral verdict possible");
      return cert;
    }
  }
  if (p.dim < 2) {
    cert.kind = CertKind::degenerate;
    cert.reasons.push_back("eigenpolytope has affine dimension " + std::to_string(p.dim));
    return cert;
  }

  bool hull_ok = true;
  for (int i = 0; i < g.n() && hull_ok; ++i) {
    if (p.input_class[i].cls != PointClass::vertex) {
      hull_ok = false;
      cert.reasons.push_back("row " + std::to_string(i + 1) + " is not a hull vertex");
    }
  }
  if (hull_ok) {
    auto hull_edges = p.edges_on_input();
    std::set<std::pair<int, int>> he(hull_edges.begin(), hull_edges.end());
    for (auto e : g.edges()) {
      if (!he.count(e)) {
        hull_ok = false;
        cert.witness_edge = {{e.first + 1, e.second + 1}};
        cert.reasons.push_back("graph edge (" + std::to_string(e.first + 1) + "," +
                               std::to_string(e.second + 1) + ") is not realized as a hull edge");
        break;
      }
    }
    if (hull_ok && he.size() != g.edges().size()) {
      hull_ok = false;
      std::set<std::pair<int, int>> ge(g.edges().begin(), g.edges().end());
      for (auto e : he) {
        if (!ge.count(e)) {
          cert.witness_edge = {{e.first + 1, e.second + 1}};
          cert.reasons.push_back("hull edge (" + std::to_string(e.first + 1) + "," +
                                 std::to_string(e.second + 1) + ") is not a graph edge");
          break;
        }
      }
    }
  }

  double tie_tol = 1e-9 * std::max(1.0, phi.entries.cwiseAbs().maxCoeff());
  std::string argmax_fail;
  bool argmax_ok = argmax_route_spectral(g, p, tie_tol, &argmax_fail);
  cert.residuals["argmax_route_agrees"] = hull_ok == argmax_ok ? 1.0 : 0.0;
  if (hull_ok != argmax_ok)
    cert.reasons.push_back("route disagreement: argmax route says " + argmax_fail);

  if (hull_ok) {
    cert.kind = CertKind::spectral_graph;
    cert.witness_map.resize(g.n());
    for (int i = 0; i < g.n(); ++i) cert.witness_map[i] = p.input_class[i].index;
  } else {
    cert.kind = CertKind::not_spectral;
    if (!argmax_ok && cert.reasons.empty()) cert.reasons.push_back(argmax_fail);
  }
  (void)tol;
  return cert;
}

std::optional<LinearTransition> linear_transition(const Eigen::MatrixXd& a,
                                                  const Eigen::MatrixXd& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("linear_transition: shape mismatch");
  const int d = static_cast<int>(a.cols());
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qra(a), qrb(b);
  if (qra.rank() < d || qrb.rank() < d)
    throw std::invalid_argument("linear_transition: rank-deficient input");

  Eigen::MatrixXd qa = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ() *
                       Eigen::MatrixXd::Identity(a.rows(), d);
  Eigen::MatrixXd qb = Eigen::HouseholderQR<Eigen::MatrixXd>(b).householderQ() *
                       Eigen::MatrixXd::Identity(b.rows(), d);
  double s1 = (qb - qa * (qa.transpose() * qb)).jacobiSvd().singularValues()(0);
  double s2 = (qa - qb * (qb.transpose() * qa)).jacobiSvd().singularValues()(0);
  double span_gap = std::max(s1, s2);
  if (span_gap > tol) return std::nullopt;

  LinearTransition out;
  out.transition = a.colPivHouseholderQr().solve(b);
  out.residual = (a * out.transition - b).norm() / std::max(1e-300, b.norm());
  out.span_gap = span_gap;
  return out;
}

Reconstruction reconstruct_from_subspace(const Eigen::MatrixXd& u) {
  const int d = static_cast<int>(u.cols());
  if ((u.transpose() * u - Eigen::MatrixXd::Identity(d, d)).norm() > 1e-8)
    throw std::invalid_argument("reconstruct_from_subspace: columns not orthonormal");
  Reconstruction rec;
  rec.polytope = convex_hull(PointConfiguration(u));
  rec.graph = skeleton_graph(rec.polytope);
  if (rec.polytope.dim < 2) {
    Certificate c;
    c.kind = CertKind::degenerate;
    c.reasons.push_back("reconstructed hull has affine dimension " +
                        std::to_string(rec.polytope.dim));
    rec.degenerate = std::move(c);
  }
  return rec;
}

}  // namespace eigenpoly
