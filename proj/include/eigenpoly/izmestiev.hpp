#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eigenpoly/certify.hpp"
#include "eigenpoly/geometry.hpp"
#include "eigenpoly/graph.hpp"

namespace eigenpoly {

enum class IzmestievScheme { finite_difference, ridge_formula };

/// The negative Hessian of vol(P(c)) at c = (1,...,1), a weighted
/// adjacency-like matrix of the skeleton: negative on edges, zero off
/// edges, with the arrangement matrix in its kernel, one simple negative
/// eigenvalue, and kernel dimension equal to dim(P).
///
/// Both construction routes first translate the vertex barycenter to the
/// origin; `psi` stores that centered arrangement and `edges` the skeleton
/// edges in the same vertex order as the rows of X.
struct IzmestievMatrix {
  Eigen::MatrixXd X;
  IzmestievScheme scheme = IzmestievScheme::finite_difference;
  double step = 0.0;  // fd step h; 0 for the ridge route
  std::map<std::string, double> residuals;
  Eigen::MatrixXd psi;
  std::vector<std::pair<int, int>> edges;
};

/// vol(P(c)). Guards c to the cell (0.5, 1.5)^n around all-ones so the
/// combinatorics of the dual cannot silently change mid-derivative.
double dual_volume(const Polytope& p, const Eigen::VectorXd& c);

/// Central differences on the dual volume, stencil evaluated per entry.
/// The polytope is centered and scaled to unit circumradius internally;
/// the returned X is rescaled back to the input coordinates. The parallel
/// flavor distributes stencil entries over OpenMP threads; per-entry
/// arithmetic is identical, so both flavors return bit-equal matrices.
IzmestievMatrix izmestiev_fd(const Polytope& p, double h = 1e-3);
IzmestievMatrix izmestiev_fd_serial(const Polytope& p, double h = 1e-3);

/// Exact off-diagonal route: |X_ij| = vol(ridge_ij) / (|v_i||v_j| sin(v_i,v_j))
/// over the facets of the polar dual, stored negative on edges; the diagonal
/// is completed from the kernel condition X_ii v_i = -sum_j X_ij v_j.
IzmestievMatrix izmestiev_ridge(const Polytope& p);

struct AuditItem {
  bool pass = false;
  double margin = 0.0;
};

/// The five structural properties, each with its achieved margin.
struct AuditReport {
  AuditItem negative_on_edges;    // X_ij < 0 for edges
  AuditItem zero_off_edges;       // |X_ij| <= tol * scale off edges
  AuditItem kernel_contains_psi;  // ||X psi|| / ||psi|| <= tol
  AuditItem single_negative;      // exactly one negative eigenvalue, simple
  AuditItem kernel_dimension;     // dim ker X == dim P
  std::pair<int, int> worst_offgraph_pair{-1, -1};  // largest off-edge entry

  bool all_pass() const {
    return negative_on_edges.pass && zero_off_edges.pass && kernel_contains_psi.pass &&
           single_negative.pass && kernel_dimension.pass;
  }
};

AuditReport audit(const IzmestievMatrix& x, const Polytope& p, double tol = 1e-4);

/// Sufficient spectrality test: constant diagonal and constant edge weight
/// (relative spread <= tol). On success emits theta_2 = -alpha/beta and a
/// spectral_polytope certificate cross-checked against is_spectral_polytope;
/// otherwise the verdict is criterion_inconclusive, never not_spectral.
Certificate theta2_criterion(const IzmestievMatrix& x, const Graph& g, double tol = 1e-6);

}  // namespace eigenpoly
