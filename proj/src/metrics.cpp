#include "eigenpoly/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eigenpoly {

MetricReport metric_report(const Polytope& p, const Spectrum& s) {
  if (p.n_vertices() != s.n)
    throw std::invalid_argument("metric_report: spectrum does not match the skeleton");
  if (p.edges.empty()) throw std::invalid_argument("metric_report: polytope has no edges");

  Graph skel = skeleton_graph(p);
  int deg = 0;
  if (!skel.regular(&deg))
    throw std::invalid_argument("metric_report: skeleton is not regular");

  MetricReport r;
  r.degree = deg;
  r.theta2 = s.groups.size() > 1 ? s.groups[1].theta : s.groups[0].theta;
  r.lambda2 = deg - r.theta2;

  Eigen::MatrixXd v = p.vertices.rowwise() - p.vertices.colwise().mean();
  Eigen::VectorXd norms = v.rowwise().norm();
  r.circumradius = norms.maxCoeff();

  r.edge_min = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (auto [i, j] : p.edges) {
    double len = (v.row(i) - v.row(j)).norm();
    r.edge_min = std::min(r.edge_min, len);
    r.edge_max = std::max(r.edge_max, len);
    sum += len;
  }
  r.edge_mean = sum / static_cast<double>(p.edges.size());

  if (norms.maxCoeff() - norms.minCoeff() > 1e-8 * r.circumradius) {
    r.applicable = false;
    r.reason = "vertices are not on a common sphere";
  } else if (r.edge_max - r.edge_min > 1e-8 * r.edge_max) {
    r.applicable = false;
    r.reason = "edge lengths are not constant";
  }

  r.ratio = r.edge_mean / r.circumradius;
  r.predicted_ratio = std::sqrt(2.0 * r.lambda2 / deg);
  r.ratio_gap = std::abs(r.ratio - r.predicted_ratio);

  r.predicted_angle = std::acos(std::clamp(-r.theta2 / deg, -1.0, 1.0));
  for (auto [i, j] : p.edges) {
    double c = v.row(i).dot(v.row(j)) / (norms(i) * norms(j));
    double ang = std::numbers::pi - std::acos(std::clamp(c, -1.0, 1.0));
    r.dihedral_angles.push_back(ang);
    r.angle_gap = std::max(r.angle_gap, std::abs(ang - r.predicted_angle));
  }
  double asum = 0.0;
  for (double a : r.dihedral_angles) asum += a;
  r.dihedral_mean = asum / static_cast<double>(r.dihedral_angles.size());
  return r;
}

}  // namespace eigenpoly
