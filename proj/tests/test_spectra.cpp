#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "eigenpoly/spectra.hpp"

using namespace eigenpoly;

namespace {

void check_groups(const Spectrum& s, const std::vector<std::pair<double, int>>& expect,
                  double tol = 1e-9) {
  REQUIRE(s.groups.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(s.groups[i].theta == doctest::Approx(expect[i].first).epsilon(tol));
    CHECK(s.groups[i].multiplicity == expect[i].second);
  }
}

}  // namespace

TEST_CASE("spectra of the small catalog graphs") {
  check_groups(spectrum(generate("hypercube", {3})), {{3, 1}, {1, 3}, {-1, 3}, {-3, 1}});
  check_groups(spectrum(generate("complete", {5})), {{4, 1}, {-1, 4}});
  check_groups(spectrum(generate("prism", {3})), {{3, 1}, {1, 1}, {0, 2}, {-2, 2}});
  double t2 = 2.0 * std::cos(2.0 * std::numbers::pi / 5.0);
  double t3 = 2.0 * std::cos(4.0 * std::numbers::pi / 5.0);
  check_groups(spectrum(generate("cycle", {5})), {{2, 1}, {t2, 2}, {t3, 2}});
}

TEST_CASE("group bases are orthonormal eigenbases") {
  for (const char* name : {"hypercube:3", "petersen", "johnson:5,2"}) {
    Graph g = generate_spec(name);
    Spectrum s = spectrum(g);
    Eigen::MatrixXd a = adjacency_matrix(g);
    double anorm = std::max(1.0, std::abs(s.groups.front().theta));

    int total = 0;
    Eigen::MatrixXd resolved = Eigen::MatrixXd::Zero(g.n(), g.n());
    for (const auto& grp : s.groups) {
      total += grp.multiplicity;
      const Eigen::MatrixXd& b = grp.basis;
      CHECK((b.transpose() * b - Eigen::MatrixXd::Identity(b.cols(), b.cols())).norm() <= 1e-10);
      CHECK((a * b - grp.theta * b).norm() <= s.tol * anorm * 10);
      resolved += grp.theta * b * b.transpose();
    }
    CHECK(total == g.n());
    // decomposition completeness, entrywise
    CHECK((resolved - a).cwiseAbs().maxCoeff() <= 1e-8);
    // eigenspace orthogonality across groups
    for (size_t i = 0; i < s.groups.size(); ++i)
      for (size_t j = i + 1; j < s.groups.size(); ++j)
        CHECK((s.groups[i].basis.transpose() * s.groups[j].basis).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("cube eigenmatrix Gram matches the closed form") {
  Spectrum s = spectrum(generate("hypercube", {3}));
  Eigenmatrix phi = eigenmatrix(s, 2);
  REQUIRE(phi.entries.cols() == 3);
  CHECK(phi.theta == doctest::Approx(1.0).epsilon(1e-12));
  Eigen::MatrixXd gram = phi.entries * phi.entries.transpose();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int h = __builtin_popcount(i ^ j);  // Hamming distance in binary labels
      CHECK(gram(i, j) == doctest::Approx((3.0 - 2.0 * h) / 8.0).epsilon(1e-10));
    }
}

TEST_CASE("pentagram eigenmatrix Gram matches the trigonometric projector") {
  Spectrum s = spectrum(generate("cycle", {5}));
  Eigenmatrix phi = eigenmatrix(s, 3);
  REQUIRE(phi.entries.cols() == 2);
  Eigen::MatrixXd gram = phi.entries * phi.entries.transpose();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      double expect = 0.4 * std::cos(4.0 * std::numbers::pi * (i - j) / 5.0);
      CHECK(gram(i, j) == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("Perron embedding of a regular graph is a single point") {
  Eigenmatrix phi = eigenmatrix(spectrum(generate("complete", {4})), 1);
  REQUIRE(phi.entries.cols() == 1);
  for (int i = 1; i < 4; ++i)
    CHECK(std::abs(phi.entries(i, 0) - phi.entries(0, 0)) <= 1e-12);
}

TEST_CASE("basis canonicalization is deterministic and basis independent") {
  Graph g = generate("petersen", {});
  Spectrum s1 = spectrum(g);
  Spectrum s2 = spectrum(g);
  for (size_t k = 0; k < s1.groups.size(); ++k) {
    const auto& a = s1.groups[k].basis;
    const auto& b = s2.groups[k].basis;
    REQUIRE(a.size() == b.size());
    CHECK(std::memcmp(a.data(), b.data(), sizeof(double) * a.size()) == 0);
  }
  // the Gram (projector) agrees with a raw eigensolver run
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> raw(adjacency_matrix(g));
  Eigen::MatrixXd raw_basis = raw.eigenvectors().rightCols(1);  // Perron
  Eigen::MatrixXd lib_basis = s1.groups.front().basis;
  CHECK((raw_basis * raw_basis.transpose() - lib_basis * lib_basis.transpose()).norm() <= 1e-10);
}

TEST_CASE("laplacian gap") {
  CHECK(laplacian_gap(spectrum(generate("hypercube", {3})), 3) == doctest::Approx(2.0));
  CHECK(laplacian_gap(spectrum(generate("complete", {5})), 4) == doctest::Approx(5.0));
  CHECK(laplacian_gap(spectrum(generate("cycle", {4})), 2) == doctest::Approx(2.0));
  CHECK_THROWS_AS(laplacian_gap(spectrum(generate("cycle", {4})), 3), std::invalid_argument);
}

TEST_CASE("eigenmatrix index range") {
  Spectrum s = spectrum(generate("cycle", {5}));
  CHECK_THROWS_AS(eigenmatrix(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(eigenmatrix(s, 4), std::invalid_argument);
  CHECK(s.index_of(2.0) == 1);
}
