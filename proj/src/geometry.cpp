#include "eigenpoly/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace eigenpoly {

namespace {

struct SFacet {
  std::vector<int> vtx;      // work-point indices, sorted
  Eigen::VectorXd normal;    // unit, outward, reduced coordinates
  double offset = 0.0;
  bool alive = true;
};

// Unit normal of the hyperplane through the given points (reduced space,
// full affine dimension r, |pts| = r). Smallest right singular vector of
// the edge matrix.
Eigen::VectorXd plane_normal(const Eigen::MatrixXd& y, const std::vector<int>& vtx) {
  const int r = static_cast<int>(y.cols());
  Eigen::MatrixXd m(static_cast<int>(vtx.size()) - 1, r);
  for (int k = 1; k < static_cast<int>(vtx.size()); ++k)
    m.row(k - 1) = y.row(vtx[k]) - y.row(vtx[0]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  Eigen::VectorXd n = svd.matrixV().col(r - 1);
  if (vtx.size() == static_cast<size_t>(r) &&
      svd.singularValues()(r - 2) < 1e-12 * std::max(1.0, svd.singularValues()(0)))
    throw std::runtime_error("convex_hull: degenerate facet candidate");
  return n;
}

struct HullCore {
  std::vector<SFacet> facets;
  Eigen::VectorXd interior;     // strictly interior reference point
  double worst_margin = 0.0;
};

// Beneath-beyond over points y (rows, reduced coordinates, affine rank r
// guaranteed by the caller). Deterministic insertion in index order.
HullCore hull_core(const Eigen::MatrixXd& y, double tol_abs) {
  const int m = static_cast<int>(y.rows());
  const int r = static_cast<int>(y.cols());

  // initial simplex: greedily affinely independent points
  std::vector<int> simplex;
  {
    int p0 = 0;
    for (int i = 1; i < m; ++i)
      if (y.row(i).norm() > y.row(p0).norm() + 1e-15) p0 = i;
    simplex.push_back(p0);
    Eigen::MatrixXd basis(r, 0);
    while (static_cast<int>(simplex.size()) < r + 1) {
      int best = -1;
      double best_d = tol_abs;
      Eigen::VectorXd best_res;
      for (int i = 0; i < m; ++i) {
        Eigen::VectorXd v = (y.row(i) - y.row(simplex[0])).transpose();
        v -= basis * (basis.transpose() * v);
        if (v.norm() > best_d) {
          best_d = v.norm();
          best = i;
          best_res = v;
        }
      }
      if (best < 0) throw std::runtime_error("convex_hull: affine rank collapsed");
      simplex.push_back(best);
      basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
      basis.col(basis.cols() - 1) = best_res / best_res.norm();
    }
  }

  HullCore core;
  core.interior = Eigen::VectorXd::Zero(r);
  for (int v : simplex) core.interior += y.row(v).transpose();
  core.interior /= static_cast<double>(simplex.size());

  auto make_facet = [&](std::vector<int> vtx) {
    std::sort(vtx.begin(), vtx.end());
    SFacet f;
    f.normal = plane_normal(y, vtx);
    f.offset = f.normal.dot(y.row(vtx[0]));
    double margin = f.offset - f.normal.dot(core.interior);
    if (margin < 0) {
      f.normal = -f.normal;
      f.offset = -f.offset;
      margin = -margin;
    }
    if (margin <= tol_abs)
      throw std::runtime_error("convex_hull: interior reference on a facet plane");
    f.vtx = std::move(vtx);
    return f;
  };

  for (int skip = 0; skip <= r; ++skip) {
    std::vector<int> vtx;
    for (int k = 0; k <= r; ++k)
      if (k != skip) vtx.push_back(simplex[k]);
    core.facets.push_back(make_facet(std::move(vtx)));
  }

  std::vector<char> in_simplex(m, 0);
  for (int v : simplex) in_simplex[v] = 1;

  for (int p = 0; p < m; ++p) {
    if (in_simplex[p]) continue;
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(core.facets.size()); ++f) {
      if (!core.facets[f].alive) continue;
      double mu = core.facets[f].normal.dot(y.row(p)) - core.facets[f].offset;
      if (mu > tol_abs) visible.push_back(f);
    }
    if (visible.empty()) continue;

    // horizon ridges: appear in exactly one visible facet
    std::map<std::vector<int>, int> ridge_count;
    for (int f : visible) {
      const auto& vtx = core.facets[f].vtx;
      for (size_t skip = 0; skip < vtx.size(); ++skip) {
        std::vector<int> ridge;
        for (size_t k = 0; k < vtx.size(); ++k)
          if (k != skip) ridge.push_back(vtx[k]);
        ++ridge_count[std::move(ridge)];
      }
    }
    for (int f : visible) core.facets[f].alive = false;
    for (auto& [ridge, cnt] : ridge_count) {
      if (cnt != 1) continue;
      std::vector<int> vtx = ridge;
      vtx.push_back(p);
      core.facets.push_back(make_facet(std::move(vtx)));
    }
  }

  core.facets.erase(std::remove_if(core.facets.begin(), core.facets.end(),
                                   [](const SFacet& f) { return !f.alive; }),
                    core.facets.end());
  return core;
}

// edges of a polytope from merged facet incidences: {u,v} is an edge iff
// the intersection of all facets containing both has vertex set {u,v}
std::vector<std::pair<int, int>> edges_from_facets(int nv, const std::vector<Facet>& facets) {
  const int words = (nv + 63) / 64;
  const int nf = static_cast<int>(facets.size());
  std::vector<std::vector<uint64_t>> facet_vtx(nf, std::vector<uint64_t>(words, 0));
  std::vector<std::vector<int>> facets_of(nv);
  for (int f = 0; f < nf; ++f) {
    for (int v : facets[f].vertices) {
      facet_vtx[f][v / 64] |= uint64_t(1) << (v % 64);
      facets_of[v].push_back(f);
    }
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<uint64_t> common(words);
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      std::fill(common.begin(), common.end(), ~uint64_t(0));
      bool any = false;
      auto it = facets_of[v].begin();
      for (int f : facets_of[u]) {
        while (it != facets_of[v].end() && *it < f) ++it;
        if (it != facets_of[v].end() && *it == f) {
          any = true;
          for (int w = 0; w < words; ++w) common[w] &= facet_vtx[f][w];
        }
      }
      if (!any) continue;
      int pop = 0;
      for (int w = 0; w < words; ++w) pop += __builtin_popcountll(common[w]);
      if (pop == 2) edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace

std::vector<std::pair<int, int>> Polytope::edges_on_input() const {
  for (const auto& ic : input_class)
    if (ic.cls != PointClass::vertex)
      throw std::runtime_error("edges_on_input: an input point is not a hull vertex");
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) {
    int a = input_of_vertex[u], b = input_of_vertex[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polytope convex_hull(const PointConfiguration& pc, double tol) {
  Eigen::MatrixXd pts = pc.points;
  const int n = static_cast<int>(pts.rows());
  const int dim_amb = static_cast<int>(pts.cols());
  if (n < 1 || dim_amb < 1) throw std::invalid_argument("convex_hull: empty configuration");
  if (!pts.allFinite()) throw std::invalid_argument("convex_hull: non-finite coordinates");
  if (pc.origin_policy == PointConfiguration::OriginPolicy::centered)
    pts.rowwise() -= pts.colwise().mean();

  Polytope p;
  p.ambient = dim_amb;
  const double scale = std::max(1.0, pts.cwiseAbs().maxCoeff());
  p.tol_abs = tol * scale;
  p.input_class.assign(n, {});

  // duplicate merge with provenance
  std::vector<int> kept;  // work index -> input row
  for (int i = 0; i < n; ++i) {
    int dup = -1;
    for (int w : kept) {
      if ((pts.row(i) - pts.row(w)).norm() <= p.tol_abs) {
        dup = w;
        break;
      }
    }
    if (dup >= 0)
      p.input_class[i] = {PointClass::duplicate, dup};
    else
      kept.push_back(i);
  }
  const int m = static_cast<int>(kept.size());
  Eigen::MatrixXd work(m, dim_amb);
  for (int w = 0; w < m; ++w) work.row(w) = pts.row(kept[w]);

  // affine rank and reduced coordinates
  Eigen::RowVectorXd center = work.colwise().mean();
  Eigen::MatrixXd centered = work.rowwise() - center;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  int r = 0;
  if (m > 1) {
    double smax = svd.singularValues()(0);
    double cut = std::max(tol * std::max(1.0, smax), 1e-13);
    for (int k = 0; k < svd.singularValues().size(); ++k)
      if (svd.singularValues()(k) > cut) ++r;
  }
  p.dim = r;
  p.degenerate = r <= 1 || r < dim_amb;

  auto finish_vertex = [&](const std::vector<int>& work_vertices) {
    p.vertices.resize(static_cast<int>(work_vertices.size()), dim_amb);
    for (size_t t = 0; t < work_vertices.size(); ++t) {
      p.vertices.row(static_cast<int>(t)) = work.row(work_vertices[t]);
      int inp = kept[work_vertices[t]];
      p.input_of_vertex.push_back(inp);
      p.input_class[inp] = {PointClass::vertex, static_cast<int>(t)};
    }
    // duplicates of a vertex keep their representative input row
  };

  if (r == 0) {
    finish_vertex({0});
    for (int w = 1; w < m; ++w) p.input_class[kept[w]] = {PointClass::duplicate, kept[0]};
    return p;
  }

  Eigen::MatrixXd vbasis = svd.matrixV().leftCols(r);
  Eigen::MatrixXd y = centered * vbasis;  // m x r

  if (r == 1) {
    int lo = 0, hi = 0;
    for (int w = 1; w < m; ++w) {
      if (y(w, 0) < y(lo, 0)) lo = w;
      if (y(w, 0) > y(hi, 0)) hi = w;
    }
    finish_vertex({lo, hi});
    for (int w = 0; w < m; ++w) {
      if (w == lo || w == hi) continue;
      p.input_class[kept[w]] = {PointClass::on_face, -1};
    }
    p.edges = {{0, 1}};
    for (int end = 0; end < 2; ++end) {
      Facet f;
      double sgn = end == 0 ? -1.0 : 1.0;
      f.normal = sgn * vbasis.col(0);
      f.offset = f.normal.dot(p.vertices.row(end)) ;
      f.vertices = {end};
      p.facets.push_back(std::move(f));
    }
    return p;
  }

  HullCore core = hull_core(y, p.tol_abs);

  // collect hull vertices in ascending work order
  std::vector<char> is_vertex(m, 0);
  for (const auto& f : core.facets)
    for (int v : f.vtx) is_vertex[v] = 1;
  std::vector<int> vtx_work;
  std::vector<int> compact(m, -1);
  for (int w = 0; w < m; ++w) {
    if (is_vertex[w]) {
      compact[w] = static_cast<int>(vtx_work.size());
      vtx_work.push_back(w);
    }
  }
  finish_vertex(vtx_work);
  const int nv = static_cast<int>(vtx_work.size());

  // classify the remaining kept points against the final hull
  for (int w = 0; w < m; ++w) {
    if (is_vertex[w]) continue;
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& f : core.facets)
      worst = std::max(worst, f.normal.dot(y.row(w)) - f.offset);
    p.worst_margin = std::max(p.worst_margin, worst);
    p.input_class[kept[w]] = {worst >= -p.tol_abs ? PointClass::on_face : PointClass::interior, -1};
  }
  if (p.worst_margin > p.tol_abs)
    p.warning = "point classification margin " + std::to_string(p.worst_margin) +
                " exceeds coplanarity tolerance";

  // merge coplanar simplicial facets into proper facets (union-find over
  // ridge-adjacent pairs with matching planes)
  const int nf = static_cast<int>(core.facets.size());
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  {
    std::map<std::vector<int>, std::vector<int>> by_ridge;
    for (int f = 0; f < nf; ++f) {
      const auto& vtx = core.facets[f].vtx;
      for (size_t skip = 0; skip < vtx.size(); ++skip) {
        std::vector<int> ridge;
        for (size_t k = 0; k < vtx.size(); ++k)
          if (k != skip) ridge.push_back(vtx[k]);
        by_ridge[std::move(ridge)].push_back(f);
      }
    }
    for (auto& [ridge, fs] : by_ridge) {
      if (fs.size() != 2) continue;
      const SFacet& a = core.facets[fs[0]];
      const SFacet& b = core.facets[fs[1]];
      if (1.0 - a.normal.dot(b.normal) <= 1e-9 &&
          std::abs(a.offset - b.offset) <= std::max(50.0 * p.tol_abs, 1e-12))
        parent[find(fs[0])] = find(fs[1]);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int f = 0; f < nf; ++f) groups[find(f)].push_back(f);

  for (auto& [root, members] : groups) {
    std::vector<int> vset;
    for (int f : members)
      for (int v : core.facets[f].vtx) vset.push_back(compact[v]);
    std::sort(vset.begin(), vset.end());
    vset.erase(std::unique(vset.begin(), vset.end()), vset.end());

    // refit the plane over the group's vertices for a stable normal
    Eigen::MatrixXd q(static_cast<int>(vset.size()), r);
    for (size_t t = 0; t < vset.size(); ++t) q.row(static_cast<int>(t)) = y.row(vtx_work[vset[t]]);
    Eigen::RowVectorXd fc = q.colwise().mean();
    Eigen::JacobiSVD<Eigen::MatrixXd> fit(q.rowwise() - fc, Eigen::ComputeFullV);
    Eigen::VectorXd nrm = fit.matrixV().col(r - 1);
    double off = nrm.dot(fc);
    if (off - nrm.dot(core.interior) < 0) {
      nrm = -nrm;
      off = -off;
    }
    Facet facet;
    facet.normal = vbasis * nrm;  // back to ambient frame
    facet.offset = off + facet.normal.dot(center.transpose());
    facet.vertices = std::move(vset);
    int fid = static_cast<int>(p.facets.size());
    p.facets.push_back(std::move(facet));
    for (int f : members) {
      std::vector<int> tri;
      for (int v : core.facets[f].vtx) tri.push_back(compact[v]);
      p.triangulation.push_back(std::move(tri));
      p.tri_facet.push_back(fid);
    }
  }

  if (r == 2) {
    for (const auto& f : p.facets) {
      if (f.vertices.size() != 2)
        throw std::runtime_error("convex_hull: polygon facet with unexpected vertex count");
      p.edges.emplace_back(f.vertices[0], f.vertices[1]);
    }
    std::sort(p.edges.begin(), p.edges.end());
  } else {
    p.edges = edges_from_facets(nv, p.facets);
  }
  return p;
}

Polytope polar_dual(const Polytope& p) {
  return polar_dual(p, Eigen::VectorXd::Ones(p.n_vertices()));
}

Polytope polar_dual(const Polytope& p, const Eigen::VectorXd& c) {
  if (p.dim != p.ambient || p.dim < 2)
    throw std::invalid_argument("polar_dual: polytope must be full-dimensional");
  if (c.size() != p.n_vertices())
    throw std::invalid_argument("polar_dual: offset vector length mismatch");
  if ((c.array() <= 0.0).any())
    throw std::invalid_argument("polar_dual: offsets must be positive");
  for (const auto& f : p.facets)
    if (f.offset <= p.tol_abs)
      throw std::invalid_argument("polar_dual: origin not strictly interior");

  Eigen::MatrixXd scaled = p.vertices;
  for (int i = 0; i < scaled.rows(); ++i) scaled.row(i) /= c(i);
  Polytope q = convex_hull(PointConfiguration(scaled), 1e-9);
  if (q.dim != q.ambient)
    throw std::runtime_error("polar_dual: scaled hull degenerated");

  Eigen::MatrixXd dual_pts(static_cast<int>(q.facets.size()), p.ambient);
  for (size_t f = 0; f < q.facets.size(); ++f) {
    if (q.facets[f].offset <= q.tol_abs)
      throw std::runtime_error("polar_dual: origin left the interior");
    dual_pts.row(static_cast<int>(f)) = q.facets[f].normal / q.facets[f].offset;
  }
  return convex_hull(PointConfiguration(dual_pts), 1e-9);
}

double volume(const Polytope& p) {
  if (p.dim != p.ambient)
    throw std::invalid_argument("volume: affine dimension " + std::to_string(p.dim) +
                                " below ambient " + std::to_string(p.ambient));
  if (p.dim == 0) return 0.0;
  if (p.dim == 1) return std::abs(p.vertices(1, 0) - p.vertices(0, 0));
  const int d = p.dim;
  Eigen::RowVectorXd g = p.vertices.colwise().mean();
  double fact = 1.0;
  for (int k = 2; k <= d; ++k) fact *= k;
  double vol = 0.0;
  Eigen::MatrixXd mmat(d, d);
  for (const auto& tri : p.triangulation) {
    for (int k = 0; k < d; ++k) mmat.row(k) = p.vertices.row(tri[k]) - g;
    vol += std::abs(mmat.determinant()) / fact;
  }
  return vol;
}

double ridge_volume(const Polytope& p, int f1, int f2) {
  if (p.dim != p.ambient)
    throw std::invalid_argument("ridge_volume: polytope not full-dimensional");
  if (f1 == f2 || f1 < 0 || f2 < 0 || f1 >= static_cast<int>(p.facets.size()) ||
      f2 >= static_cast<int>(p.facets.size()))
    throw std::invalid_argument("ridge_volume: invalid facet pair");
  std::vector<int> common;
  std::set_intersection(p.facets[f1].vertices.begin(), p.facets[f1].vertices.end(),
                        p.facets[f2].vertices.begin(), p.facets[f2].vertices.end(),
                        std::back_inserter(common));
  const int want = p.dim - 2;
  if (static_cast<int>(common.size()) < want + 1)
    throw std::invalid_argument("ridge_volume: facets not adjacent");
  if (want == 0) return 1.0;  // vertex ridge: counting measure

  Eigen::MatrixXd pts(static_cast<int>(common.size()), p.ambient);
  for (size_t t = 0; t < common.size(); ++t) pts.row(static_cast<int>(t)) = p.vertices.row(common[t]);
  Eigen::RowVectorXd center = pts.colwise().mean();
  Eigen::MatrixXd centered = pts.rowwise() - center;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  int rank = 0;
  double cut = std::max(1e-9 * std::max(1.0, svd.singularValues()(0)), 1e-13);
  for (int k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()(k) > cut) ++rank;
  if (rank != want) throw std::invalid_argument("ridge_volume: facets not adjacent");

  Eigen::MatrixXd reduced = centered * svd.matrixV().leftCols(want);
  if (want == 1) {
    double lo = reduced.col(0).minCoeff(), hi = reduced.col(0).maxCoeff();
    return hi - lo;
  }
  return volume(convex_hull(PointConfiguration(reduced), 1e-9));
}

Graph skeleton_graph(const Polytope& p) {
  return Graph(p.n_vertices(), p.edges, "skeleton");
}

}  // namespace eigenpoly
