#include "eigenpoly/spectra.hpp"

#include <cmath>
#include <stdexcept>

namespace eigenpoly {

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (auto [i, j] : g.edges()) a(i, j) = a(j, i) = 1.0;
  return a;
}

namespace {

// Canonical orthonormal basis of the span of `raw` (orthonormal columns):
// modified Gram-Schmidt over the projector applied to e_1, e_2, ...,
// then a sign convention making each column's first nonzero entry positive.
Eigen::MatrixXd canonical_basis(const Eigen::MatrixXd& raw) {
  const int n = static_cast<int>(raw.rows());
  const int d = static_cast<int>(raw.cols());
  Eigen::MatrixXd q(n, d);
  int got = 0;
  for (int i = 0; i < n && got < d; ++i) {
    Eigen::VectorXd v = raw * raw.row(i).transpose();  // projector column i
    for (int j = 0; j < got; ++j) v -= q.col(j).dot(v) * q.col(j);
    double norm = v.norm();
    if (norm > 1e-6) q.col(got++) = v / norm;
  }
  if (got != d) throw std::runtime_error("spectrum: basis canonicalization failed");
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < n; ++i) {
      if (std::abs(q(i, j)) > 1e-9) {
        if (q(i, j) < 0) q.col(j) = -q.col(j);
        break;
      }
    }
  }
  return q;
}

}  // namespace

Spectrum spectrum(const Graph& g, double rel_tol) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("spectrum: empty graph");
  Eigen::MatrixXd a = adjacency_matrix(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectrum: eigensolver did not converge");

  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  double scale = std::max({1.0, std::abs(ev(0)), std::abs(ev(n - 1))});
  Spectrum s;
  s.n = n;
  s.tol = rel_tol * scale;

  int hi = n - 1;
  while (hi >= 0) {
    int lo = hi;
    while (lo > 0 && ev(hi) - ev(lo - 1) <= s.tol) --lo;
    EigenGroup grp;
    grp.multiplicity = hi - lo + 1;
    grp.theta = ev.segment(lo, grp.multiplicity).mean();
    double nearest = std::round(grp.theta);
    grp.theta_snapped = std::abs(grp.theta - nearest) < 1e-9 ? nearest : grp.theta;
    grp.basis = canonical_basis(solver.eigenvectors().middleCols(lo, grp.multiplicity));
    s.groups.push_back(std::move(grp));
    hi = lo - 1;
  }
  return s;
}

int Spectrum::index_of(double theta) const {
  int best = -1;
  double gap = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < groups.size(); ++k) {
    double d = std::abs(groups[k].theta - theta);
    if (d < gap) {
      gap = d;
      best = static_cast<int>(k);
    }
  }
  if (best < 0 || gap > std::max(tol, 1e-6))
    throw std::invalid_argument("spectrum: no group matches eigenvalue");
  return best + 1;
}

Eigenmatrix eigenmatrix(const Spectrum& s, int k) {
  if (k < 1 || k > static_cast<int>(s.groups.size()))
    throw std::invalid_argument("eigenmatrix: index out of range");
  const EigenGroup& grp = s.groups[k - 1];
  Eigenmatrix phi;
  phi.entries = grp.basis;
  phi.theta = grp.theta;
  phi.k = k;
  return phi;
}

double laplacian_gap(const Spectrum& s, int degree) {
  if (s.groups.empty() || std::abs(s.groups.front().theta - degree) > std::max(s.tol, 1e-9))
    throw std::invalid_argument("laplacian_gap: graph is not regular of the given degree");
  if (s.groups.size() < 2) throw std::invalid_argument("laplacian_gap: no second eigenvalue");
  return degree - s.groups[1].theta;
}

}  // namespace eigenpoly
