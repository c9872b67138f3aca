#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "eigenpoly/graph.hpp"

namespace eigenpoly {

/// Row-per-point configuration. With OriginPolicy::centered the row
/// barycenter is moved to the origin before any geometry runs.
struct PointConfiguration {
  enum class OriginPolicy { as_given, centered };
  Eigen::MatrixXd points;
  OriginPolicy origin_policy = OriginPolicy::as_given;

  PointConfiguration() = default;
  explicit PointConfiguration(Eigen::MatrixXd pts,
                              OriginPolicy policy = OriginPolicy::as_given)
      : points(std::move(pts)), origin_policy(policy) {}
};

enum class PointClass { vertex, interior, on_face, duplicate };

struct Facet {
  Eigen::VectorXd normal;      // unit, outward, ambient coordinates
  double offset = 0.0;         // <normal, x> = offset on the facet
  std::vector<int> vertices;   // incident hull vertex ids, sorted
};

/// Convex hull with full vertex/edge/facet data. Facets live in the
/// detected affine hull; `degenerate` flags affine dimension <= 1 or
/// below the ambient dimension. The simplicial boundary triangulation
/// is retained for volume queries.
struct Polytope {
  Eigen::MatrixXd vertices;                    // hull vertices (rows), ambient coords
  std::vector<std::pair<int, int>> edges;      // hull vertex ids, i<j, sorted
  std::vector<Facet> facets;
  int dim = 0;       // affine dimension
  int ambient = 0;
  bool degenerate = false;

  std::vector<int> input_of_vertex;            // hull vertex -> input row

  struct InputClass {
    PointClass cls = PointClass::vertex;
    int index = -1;  // hull vertex id | representative input row for duplicates
  };
  std::vector<InputClass> input_class;         // one entry per input row

  std::vector<std::vector<int>> triangulation;  // simplicial facets, hull ids
  std::vector<int> tri_facet;                   // triangulation entry -> facet id

  double tol_abs = 0.0;     // absolute coplanarity tolerance used
  double worst_margin = 0.0;
  std::string warning;

  int n_vertices() const { return static_cast<int>(vertices.rows()); }

  /// Hull edges relabeled by input row; requires every input to be a vertex.
  std::vector<std::pair<int, int>> edges_on_input() const;
};

/// Incremental (beneath-beyond) hull in the detected affine hull.
/// Duplicate input points (pairwise distance <= tol * scale) are merged
/// with provenance; coplanar simplicial facets are merged into proper
/// facets afterwards. `tol` is relative to the coordinate scale.
Polytope convex_hull(const PointConfiguration& pc, double tol = 1e-9);

/// P(c) = { x : <x, v_i> <= c_i } computed through hull duality:
/// it is the polar of conv{ v_i / c_i }. Requires a full-dimensional
/// polytope with the origin strictly interior and c > 0.
Polytope polar_dual(const Polytope& p, const Eigen::VectorXd& c);
Polytope polar_dual(const Polytope& p);  // c = (1,...,1)

/// Volume from the stored boundary triangulation coned to an interior
/// point. Throws for dim < ambient, naming the affine dimension.
double volume(const Polytope& p);

/// (d-2)-dimensional volume of the ridge shared by two adjacent facets,
/// computed by a hull+volume run inside the ridge's affine hull.
/// For d = 2 the ridge is a vertex and the counting measure 1 is returned.
double ridge_volume(const Polytope& p, int f1, int f2);

/// Graph on the hull vertices with the hull's edge set.
Graph skeleton_graph(const Polytope& p);

}  // namespace eigenpoly
