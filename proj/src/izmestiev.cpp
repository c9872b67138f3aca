#include "eigenpoly/izmestiev.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "eigenpoly/parallel.hpp"

namespace eigenpoly {

namespace {

// Rebuild the hull from the centered vertex set. Vertex order is preserved:
// hull vertices come out in input order and a translation keeps every
// vertex a vertex.
Polytope centered_copy(const Polytope& p) {
  if (p.dim != p.ambient)
    throw std::invalid_argument("izmestiev: polytope must be full-dimensional");
  Polytope q = convex_hull(
      PointConfiguration(p.vertices, PointConfiguration::OriginPolicy::centered));
  if (q.n_vertices() != p.n_vertices())
    throw std::runtime_error("izmestiev: vertex set changed under centering");
  return q;
}

double raw_dual_volume(const Polytope& p, const Eigen::VectorXd& c) {
  return volume(polar_dual(p, c));
}

IzmestievMatrix fd_core(const Polytope& p, double h, bool parallel) {
  if (h <= 0) throw std::invalid_argument("izmestiev_fd: step must be positive");
  Polytope q = centered_copy(p);
  const int n = q.n_vertices();
  const int d = q.dim;

  double circum = q.vertices.rowwise().norm().maxCoeff();
  Polytope qn = convex_hull(PointConfiguration(q.vertices / circum));
  if (qn.n_vertices() != n) throw std::runtime_error("izmestiev: vertex set changed under scaling");

  IzmestievMatrix out;
  out.scheme = IzmestievScheme::finite_difference;
  out.step = h;
  out.psi = q.vertices;
  out.edges = q.edges;
  out.X = Eigen::MatrixXd::Zero(n, n);

  // The dual volume is piecewise polynomial in c and all-ones may sit on a
  // wall of the piece decomposition (it does whenever a facet of the input
  // is non-simplicial), where the central stencil carries an error linear
  // in h within each sign orthant. One Richardson step over h and h/2
  // removes that term; for d <= 3 the result is exact up to roundoff.
  auto richardson = [](double sh, double sh2) { return 2.0 * sh2 - sh; };

  const double v0 = raw_dual_volume(qn, Eigen::VectorXd::Ones(n));
  Eigen::MatrixXd diag_stencil(n, 4);  // V(+h), V(-h), V(+h/2), V(-h/2)
  const int nthreads = parallel ? max_threads() : 1;

#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd c = Eigen::VectorXd::Ones(n);
    for (int s = 0; s < 4; ++s) {
      double step = s < 2 ? h : h / 2.0;
      c(i) = 1.0 + (s % 2 == 0 ? step : -step);
      diag_stencil(i, s) = raw_dual_volume(qn, c);
    }
  }
  for (int i = 0; i < n; ++i) {
    double sh = -(diag_stencil(i, 0) - 2.0 * v0 + diag_stencil(i, 1)) / (h * h);
    double sh2 = -(diag_stencil(i, 2) - 2.0 * v0 + diag_stencil(i, 3)) / (h * h / 4.0);
    out.X(i, i) = richardson(sh, sh2);
  }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (long t = 0; t < static_cast<long>(pairs.size()); ++t) {
    auto [i, j] = pairs[t];
    Eigen::VectorXd c = Eigen::VectorXd::Ones(n);
    auto stencil = [&](double step) {
      auto eval = [&](double si, double sj) {
        c(i) = 1.0 + si * step;
        c(j) = 1.0 + sj * step;
        return raw_dual_volume(qn, c);
      };
      double mixed = eval(1, 1) - eval(1, -1) - eval(-1, 1) + eval(-1, -1);
      return -mixed / (4.0 * step * step);
    };
    double value = richardson(stencil(h), stencil(h / 2.0));
    out.X(i, j) = value;
    out.X(j, i) = value;
  }

  // scaling q -> q/circum multiplies X by circum^d; undo it
  out.X *= std::pow(circum, -d);

  double offgraph = 0.0;
  std::set<std::pair<int, int>> es(out.edges.begin(), out.edges.end());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!es.count({i, j})) offgraph = std::max(offgraph, std::abs(out.X(i, j)));
  out.residuals["offgraph_max"] = offgraph;
  out.residuals["kernel_residual"] = (out.X * out.psi).norm() / out.psi.norm();
  out.residuals["symmetry_gap"] = 0.0;  // one stencil per unordered pair
  return out;
}

}  // namespace

double dual_volume(const Polytope& p, const Eigen::VectorXd& c) {
  if (c.size() != p.n_vertices())
    throw std::invalid_argument("dual_volume: offset length mismatch");
  if ((c.array() <= 0.5).any() || (c.array() >= 1.5).any())
    throw std::invalid_argument("dual_volume: offsets must stay within (0.5, 1.5)");
  return raw_dual_volume(p, c);
}

IzmestievMatrix izmestiev_fd(const Polytope& p, double h) { return fd_core(p, h, true); }
IzmestievMatrix izmestiev_fd_serial(const Polytope& p, double h) { return fd_core(p, h, false); }

IzmestievMatrix izmestiev_ridge(const Polytope& p) {
  Polytope q = centered_copy(p);
  const int n = q.n_vertices();

  IzmestievMatrix out;
  out.scheme = IzmestievScheme::ridge_formula;
  out.psi = q.vertices;
  out.edges = q.edges;
  out.X = Eigen::MatrixXd::Zero(n, n);

  Polytope dual = polar_dual(q);

  // facet of the dual corresponding to vertex v_i: outward normal v_i/|v_i|
  std::vector<int> facet_of(n, -1);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd dir = q.vertices.row(i).transpose().normalized();
    double best = -2.0;
    for (size_t f = 0; f < dual.facets.size(); ++f) {
      double c = dual.facets[f].normal.dot(dir);
      if (c > best) {
        best = c;
        facet_of[i] = static_cast<int>(f);
      }
    }
    if (best < 1.0 - 1e-7)
      throw std::runtime_error("izmestiev_ridge: no dual facet matches vertex " +
                               std::to_string(i + 1));
  }

  for (auto [i, j] : q.edges) {
    Eigen::VectorXd vi = q.vertices.row(i);
    Eigen::VectorXd vj = q.vertices.row(j);
    double ni = vi.norm(), nj = vj.norm();
    double cosang = vi.dot(vj) / (ni * nj);
    double sinang = std::sqrt(std::max(0.0, 1.0 - cosang * cosang));
    if (sinang < 1e-9)
      throw std::invalid_argument("izmestiev_ridge: adjacent vertices parallel as vectors");
    double rv = ridge_volume(dual, facet_of[i], facet_of[j]);
    double value = -rv / (ni * nj * sinang);
    out.X(i, j) = value;
    out.X(j, i) = value;
  }

  // diagonal from the kernel condition, one least-squares scalar per vertex
  Graph skel = skeleton_graph(q);
  double diag_residual = 0.0;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(q.ambient);
    for (int j : skel.neighbors(i))
      rhs += out.X(i, j) * q.vertices.row(j).transpose();
    Eigen::VectorXd vi = q.vertices.row(i);
    double xii = -vi.dot(rhs) / vi.squaredNorm();
    out.X(i, i) = xii;
    diag_residual = std::max(diag_residual, (xii * vi + rhs).norm() / vi.norm());
  }
  out.residuals["diagonal_residual"] = diag_residual;
  out.residuals["offgraph_max"] = 0.0;
  out.residuals["kernel_residual"] = (out.X * out.psi).norm() / out.psi.norm();
  out.residuals["symmetry_gap"] = 0.0;
  return out;
}

AuditReport audit(const IzmestievMatrix& x, const Polytope& p, double tol) {
  const int n = static_cast<int>(x.X.rows());
  const int d = p.dim;
  AuditReport rep;

  std::set<std::pair<int, int>> es(x.edges.begin(), x.edges.end());
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(x.X(i, j)));
  scale = std::max(scale, 1e-300);

  double worst_edge = -std::numeric_limits<double>::infinity();
  for (auto [i, j] : x.edges) worst_edge = std::max(worst_edge, x.X(i, j));
  rep.negative_on_edges.pass = worst_edge < 0.0;
  rep.negative_on_edges.margin = -worst_edge / scale;

  double off = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!es.count({i, j}) && std::abs(x.X(i, j)) > off) {
        off = std::abs(x.X(i, j));
        rep.worst_offgraph_pair = {i, j};
      }
  rep.zero_off_edges.pass = off <= tol * scale;
  rep.zero_off_edges.margin = tol - off / scale;

  double kr = (x.X * x.psi).norm() / x.psi.norm();
  rep.kernel_contains_psi.pass = kr <= tol;
  rep.kernel_contains_psi.margin = tol - kr;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(x.X);
  const Eigen::VectorXd& ev = es2.eigenvalues();  // ascending
  double cut = tol * scale;
  int negatives = 0, kernel = 0;
  for (int i = 0; i < n; ++i) {
    if (ev(i) < -cut) ++negatives;
    else if (std::abs(ev(i)) <= cut) ++kernel;
  }
  rep.single_negative.pass = negatives == 1;
  rep.single_negative.margin = n >= 2 ? (ev(1) - ev(0)) / scale : 0.0;
  rep.kernel_dimension.pass = kernel == d;
  rep.kernel_dimension.margin = static_cast<double>(kernel - d);
  return rep;
}

Certificate theta2_criterion(const IzmestievMatrix& x, const Graph& g, double tol) {
  const int n = static_cast<int>(x.X.rows());
  if (g.n() != n) throw std::invalid_argument("theta2_criterion: vertex count mismatch");
  {
    std::set<std::pair<int, int>> a(x.edges.begin(), x.edges.end());
    std::set<std::pair<int, int>> b(g.edges().begin(), g.edges().end());
    if (a != b)
      throw std::invalid_argument("theta2_criterion: graph is not the audited skeleton");
  }

  Certificate cert;
  double diag_min = x.X(0, 0), diag_max = x.X(0, 0), diag_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    diag_min = std::min(diag_min, x.X(i, i));
    diag_max = std::max(diag_max, x.X(i, i));
    diag_sum += x.X(i, i);
  }
  double edge_min = 0.0, edge_max = 0.0, edge_sum = 0.0;
  bool first = true;
  for (auto [i, j] : x.edges) {
    double v = x.X(i, j);
    edge_min = first ? v : std::min(edge_min, v);
    edge_max = first ? v : std::max(edge_max, v);
    edge_sum += v;
    first = false;
  }
  double scale = std::max({std::abs(diag_min), std::abs(diag_max), std::abs(edge_min),
                           std::abs(edge_max), 1e-300});
  double diag_spread = (diag_max - diag_min) / scale;
  double edge_spread = (edge_max - edge_min) / scale;
  cert.residuals["diag_spread_rel"] = diag_spread;
  cert.residuals["edge_spread_rel"] = edge_spread;
  cert.residuals["spread_tol"] = tol;

  if (diag_spread > tol || edge_spread > tol) {
    cert.kind = CertKind::criterion_inconclusive;
    if (diag_spread > tol) cert.reasons.push_back("diagonal entries are not constant");
    if (edge_spread > tol) cert.reasons.push_back("edge entries are not constant");
    return cert;
  }

  double alpha = diag_sum / n;
  double beta = edge_sum / static_cast<double>(x.edges.size());
  double theta2 = -alpha / beta;
  cert.theta = theta2;
  cert.k = 2;

  Certificate check = is_spectral_polytope(convex_hull(PointConfiguration(x.psi)));
  double gap = check.theta ? std::abs(*check.theta - theta2) : 1e300;
  cert.residuals["cross_check_gap"] = gap;
  if (check.kind == CertKind::spectral_polytope && gap <= 1e-6) {
    cert.kind = CertKind::spectral_polytope;
  } else {
    cert.kind = CertKind::not_spectral;
    cert.reasons.push_back("criterion held but certification failed");
  }
  return cert;
}

}  // namespace eigenpoly
