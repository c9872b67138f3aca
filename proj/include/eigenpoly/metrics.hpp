#pragma once

#include <string>
#include <vector>

#include "eigenpoly/geometry.hpp"
#include "eigenpoly/spectra.hpp"

namespace eigenpoly {

/// Edge-length / circumradius ratio and dual dihedral angles, measured on
/// the polytope and compared with the closed forms
///   l/r = sqrt(2 lambda_2 / deg)  and  cos(alpha) = -theta_2 / deg.
struct MetricReport {
  double edge_min = 0.0, edge_max = 0.0, edge_mean = 0.0;
  double circumradius = 0.0;
  double ratio = 0.0;
  double predicted_ratio = 0.0;
  std::vector<double> dihedral_angles;  // per skeleton edge, radians
  double dihedral_mean = 0.0;
  double predicted_angle = 0.0;
  double ratio_gap = 0.0;   // |ratio - predicted_ratio|
  double angle_gap = 0.0;   // max |alpha_ij - predicted_angle|
  int degree = 0;
  double theta2 = 0.0, lambda2 = 0.0;
  bool applicable = true;   // vertex norms and edge lengths each within 1e-8
  std::string reason;
};

/// `s` must be the spectrum of the skeleton of `p`; the skeleton must be
/// regular (throws otherwise). Dihedral angles of the polar dual are taken
/// as pi minus the angle between adjacent vertex vectors after centering.
MetricReport metric_report(const Polytope& p, const Spectrum& s);

}  // namespace eigenpoly
