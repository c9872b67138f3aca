#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "eigenpoly/autgroup.hpp"
#include "eigenpoly/geometry.hpp"
#include "eigenpoly/graph.hpp"
#include "eigenpoly/spectra.hpp"

namespace eigenpoly {

/// A graph automorphism realized on the spectral embedding:
/// T = Phi^T Pi_sigma Phi, orthogonal for orthonormal Phi, with
/// T v_i = v_{sigma(i)} up to equivariance_gap.
struct RealizedSymmetry {
  std::vector<int> sigma;
  Eigen::MatrixXd T;
  double orthogonality_gap = 0.0;  // ||T^T T - I||_F
  double equivariance_gap = 0.0;   // max_i |T v_i - v_{sigma(i)}|
};

/// Throws if sigma is not an automorphism of g.
RealizedSymmetry induced_symmetry(const Eigenmatrix& phi, const std::vector<int>& sigma,
                                  const Graph& g);

struct GroupReport {
  std::vector<RealizedSymmetry> generators;
  std::uint64_t group_order = 0;   // |Aut(G)|
  std::uint64_t image_count = 0;   // distinct matrices among enumerated images
  bool enumerated = false;         // false when group_order exceeded the cap
  bool injective = false;
  bool homomorphism_ok = false;
  bool spectral = false;           // is_spectral_graph verdict at this k
  double max_hom_gap = 0.0;
  double max_equivariance_gap = 0.0;
};

/// Maps every automorphism generator through the spectral embedding at
/// index k. Up to `cap` group elements the image group is enumerated
/// exactly; beyond that, homomorphism and injectivity are sampled on
/// random generator words (deterministic seed).
GroupReport realize_group(const Graph& g, int k, std::uint64_t cap = 100000);

struct CongruenceResult {
  bool congruent = false;
  Eigen::MatrixXd map;     // orthogonal, best fit
  double residual = 0.0;   // rms after normalization
};

/// Orthogonal Procrustes fit after normalizing both vertex sets to common
/// barycenter and unit circumradius, matched through the given bijection.
CongruenceResult congruence_check(const Polytope& p, const Polytope& q,
                                  const std::vector<int>& matching, double tol = 1e-6);

}  // namespace eigenpoly
