#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "eigenpoly/graph.hpp"

namespace eigenpoly {

/// One eigenvalue group: theta, its multiplicity, and an orthonormal basis
/// of the eigenspace (columns). `theta_snapped` is a diagnostic: theta
/// rounded to the nearest integer when within 1e-9 of it. It never affects
/// grouping.
struct EigenGroup {
  double theta = 0.0;
  int multiplicity = 0;
  Eigen::MatrixXd basis;
  double theta_snapped = 0.0;
};

/// Adjacency spectrum grouped by eigenvalue, sorted strictly descending.
struct Spectrum {
  std::vector<EigenGroup> groups;
  double tol = 0.0;  // absolute grouping width actually used
  int n = 0;

  /// 1-based index of the group whose theta is closest to the given value;
  /// throws if the gap exceeds the grouping width.
  int index_of(double theta) const;
};

/// Dense symmetric eigendecomposition of the adjacency matrix. Eigenvalues
/// closer than rel_tol * max(1, ||A||_2) merge into one group. Group bases
/// are canonicalized: deterministic orthonormalization of the eigenprojector
/// applied to the standard basis, each column's first nonzero entry positive.
/// The output therefore depends only on the eigenspaces, not on the solver's
/// basis choice.
Spectrum spectrum(const Graph& g, double rel_tol = 1e-8);

/// Eigenpolytope matrix: the k-th (1-based) group's orthonormal basis.
/// Rows are the points of the spectral embedding.
struct Eigenmatrix {
  Eigen::MatrixXd entries;  // n x d
  double theta = 0.0;
  int k = 0;
  std::string source;
};

Eigenmatrix eigenmatrix(const Spectrum& s, int k);

/// Second smallest Laplacian eigenvalue of a regular graph: deg - theta_2.
double laplacian_gap(const Spectrum& s, int degree);

Eigen::MatrixXd adjacency_matrix(const Graph& g);

}  // namespace eigenpoly
