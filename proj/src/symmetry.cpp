#include "eigenpoly/symmetry.hpp"

#include <map>
#include <random>
#include <stdexcept>

#include "eigenpoly/certify.hpp"

namespace eigenpoly {

namespace {

bool is_automorphism(const Graph& g, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != g.n()) return false;
  std::vector<char> seen(g.n(), 0);
  for (int v : sigma) {
    if (v < 0 || v >= g.n() || seen[v]) return false;
    seen[v] = 1;
  }
  for (auto [i, j] : g.edges())
    if (!g.has_edge(sigma[i], sigma[j])) return false;
  return true;
}

Eigen::MatrixXd permuted_rows(const Eigen::MatrixXd& phi, const std::vector<int>& sigma) {
  Eigen::MatrixXd out(phi.rows(), phi.cols());
  for (int i = 0; i < phi.rows(); ++i) out.row(sigma[i]) = phi.row(i);
  return out;
}

// quantized key for matrix dedup
std::vector<long long> matrix_key(const Eigen::MatrixXd& t) {
  std::vector<long long> key;
  key.reserve(t.size());
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j)
      key.push_back(llround(t(i, j) * 1e8));
  return key;
}

}  // namespace

RealizedSymmetry induced_symmetry(const Eigenmatrix& phi, const std::vector<int>& sigma,
                                  const Graph& g) {
  if (!is_automorphism(g, sigma))
    throw std::invalid_argument("induced_symmetry: sigma is not an automorphism");
  RealizedSymmetry r;
  r.sigma = sigma;
  r.T = phi.entries.transpose() * permuted_rows(phi.entries, sigma);
  const int d = static_cast<int>(phi.entries.cols());
  r.orthogonality_gap = (r.T.transpose() * r.T - Eigen::MatrixXd::Identity(d, d)).norm();
  double gap = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    Eigen::VectorXd img = r.T * phi.entries.row(i).transpose();
    gap = std::max(gap, (img - phi.entries.row(sigma[i]).transpose()).norm());
  }
  r.equivariance_gap = gap;
  return r;
}

GroupReport realize_group(const Graph& g, int k, std::uint64_t cap) {
  GroupReport rep;
  Spectrum s = spectrum(g);
  Eigenmatrix phi = eigenmatrix(s, k);
  AutGroup aut = automorphisms(g);
  rep.group_order = aut.order;
  rep.spectral = is_spectral_graph(g, k).kind == CertKind::spectral_graph;

  for (const auto& gen : aut.generators) {
    rep.generators.push_back(induced_symmetry(phi, gen, g));
    rep.max_equivariance_gap =
        std::max(rep.max_equivariance_gap, rep.generators.back().equivariance_gap);
  }

  auto realize = [&](const std::vector<int>& sigma) -> Eigen::MatrixXd {
    return phi.entries.transpose() * permuted_rows(phi.entries, sigma);
  };
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];  // (a o b)(i) = a(b(i))
    return out;
  };

  const int n = g.n();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  const int d = static_cast<int>(phi.entries.cols());
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);

  double hom_gap = 0.0;
  bool injective = true;

  if (aut.order <= cap) {
    rep.enumerated = true;
    auto elements = closure(aut, cap);
    std::map<std::vector<long long>, int> images;
    for (const auto& sigma : elements) {
      Eigen::MatrixXd t = realize(sigma);
      images.emplace(matrix_key(t), 1);
      if (sigma != id && (t - eye).norm() <= 1e-7) injective = false;
    }
    rep.image_count = images.size();
    if (rep.image_count != elements.size()) injective = false;

    // homomorphism spot-check on deterministic random pairs
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<size_t> pick(0, elements.size() - 1);
    size_t samples = std::min<size_t>(1000, elements.size() * elements.size());
    for (size_t t = 0; t < samples; ++t) {
      const auto& sa = elements[pick(rng)];
      const auto& sb = elements[pick(rng)];
      Eigen::MatrixXd lhs = realize(compose(sa, sb));
      Eigen::MatrixXd rhs = realize(sa) * realize(sb);
      hom_gap = std::max(hom_gap, (lhs - rhs).norm());
    }
  } else {
    // sampled mode: random words in the generators
    rep.enumerated = false;
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<size_t> pick(0, aut.generators.size() - 1);
    std::uniform_int_distribution<int> len(1, 8);
    auto word = [&]() {
      std::vector<int> w = id;
      int l = len(rng);
      for (int t = 0; t < l; ++t) w = compose(w, aut.generators[pick(rng)]);
      return w;
    };
    std::uint64_t distinct = 0;
    std::map<std::vector<long long>, int> images;
    for (int t = 0; t < 1000; ++t) {
      auto sa = word(), sb = word();
      Eigen::MatrixXd ta = realize(sa), tb = realize(sb);
      hom_gap = std::max(hom_gap, (realize(compose(sa, sb)) - ta * tb).norm());
      if (sa != id && (ta - eye).norm() <= 1e-7) injective = false;
      if (images.emplace(matrix_key(ta), 1).second) ++distinct;
    }
    rep.image_count = distinct;
  }

  rep.max_hom_gap = hom_gap;
  rep.homomorphism_ok = hom_gap <= 1e-7;
  rep.injective = injective;
  return rep;
}

CongruenceResult congruence_check(const Polytope& p, const Polytope& q,
                                  const std::vector<int>& matching, double tol) {
  if (p.n_vertices() != q.n_vertices())
    throw std::invalid_argument("congruence_check: vertex count mismatch");
  if (static_cast<int>(matching.size()) != p.n_vertices())
    throw std::invalid_argument("congruence_check: matching length mismatch");
  if (p.ambient != q.ambient)
    throw std::invalid_argument("congruence_check: ambient dimension mismatch");

  auto normalize = [](const Eigen::MatrixXd& v) {
    Eigen::MatrixXd c = v.rowwise() - v.colwise().mean();
    double r = c.rowwise().norm().maxCoeff();
    return Eigen::MatrixXd(c / std::max(r, 1e-300));
  };
  Eigen::MatrixXd a = normalize(p.vertices);
  Eigen::MatrixXd b = normalize(q.vertices);

  const int d = p.ambient;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < a.rows(); ++i)
    h += a.row(i).transpose() * b.row(matching[i]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  CongruenceResult out;
  out.map = svd.matrixV() * svd.matrixU().transpose();

  double sq = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    sq += (out.map * a.row(i).transpose() - b.row(matching[i]).transpose()).squaredNorm();
  out.residual = std::sqrt(sq / a.rows());
  out.congruent = out.residual <= tol;
  return out;
}

}  // namespace eigenpoly
