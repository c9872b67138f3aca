#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eigenpoly/geometry.hpp"
#include "eigenpoly/graph.hpp"
#include "eigenpoly/spectra.hpp"

namespace eigenpoly {

enum class CertKind {
  balanced,
  spectral_polytope,
  spectral_graph,
  not_spectral,
  degenerate,
  criterion_inconclusive,
};

std::string to_string(CertKind k);

/// Machine-checkable verdict. Spectral verdicts are self-validating: the
/// residuals they carry are below the thresholds they were checked against.
/// not_spectral verdicts carry at least one concrete violation (a reason
/// code plus witness data such as a non-realized edge).
struct Certificate {
  CertKind kind = CertKind::not_spectral;
  std::optional<double> theta;
  std::optional<int> k;  // 1-based eigenvalue index
  std::map<std::string, double> residuals;
  std::vector<int> witness_map;                      // index bijection, when present
  Eigen::MatrixXd witness_transition;                // transition matrix, when present
  std::optional<std::pair<int, int>> witness_edge;   // 1-based offending pair
  std::vector<std::string> reasons;

  bool ok() const {
    return kind == CertKind::balanced || kind == CertKind::spectral_polytope ||
           kind == CertKind::spectral_graph;
  }
};

/// Least-squares eigenvalue fit: theta minimizing ||A Psi - theta Psi||_F.
/// Balanced iff the residual is <= tol * ||Psi||_F.
Certificate is_balanced(const Eigen::MatrixXd& psi, const Graph& g, double tol = 1e-8);

/// Balanced with some theta AND multiplicity(theta) equal to dim(p) in the
/// skeleton spectrum. Reports k with theta = theta_k.
Certificate is_spectral_polytope(const Polytope& p, double tol = 1e-8);

/// Hull route: all n spectral-embedding rows must be distinct hull vertices
/// and the identity index map a graph isomorphism onto the skeleton.
/// The argmax route (supporting directions from facet-normal sums) runs as
/// a cross-check; residuals["argmax_route_agrees"] records agreement.
Certificate is_spectral_graph(const Graph& g, int k, double tol = 1e-8);

struct LinearTransition {
  Eigen::MatrixXd transition;  // A * T ~ B
  double residual = 0.0;       // relative fit residual
  double span_gap = 0.0;       // sin of the largest principal angle
};

/// Invertible T with A T = B iff the column spans coincide (largest
/// principal angle below tol, measured through its sine); empty otherwise.
std::optional<LinearTransition> linear_transition(const Eigen::MatrixXd& a,
                                                  const Eigen::MatrixXd& b,
                                                  double tol = 1e-7);

/// Reconstruction from a claimed eigenspace: hull of the rows of an
/// orthonormal basis, plus the hull's edge-graph.
struct Reconstruction {
  Polytope polytope;
  Graph graph;
  std::optional<Certificate> degenerate;  // set when affine dim < 2
};

Reconstruction reconstruct_from_subspace(const Eigen::MatrixXd& u);

}  // namespace eigenpoly
