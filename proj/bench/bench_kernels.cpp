// Wall-time comparison of the serial and OpenMP flavors of the
// finite-difference dual-volume Hessian, the dominant kernel.

#include <chrono>
#include <cstdio>

#include "eigenpoly/geometry.hpp"
#include "eigenpoly/izmestiev.hpp"
#include "eigenpoly/parallel.hpp"
#include "eigenpoly/spectra.hpp"

using namespace eigenpoly;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Polytope eigenpolytope(const std::string& gen) {
  Graph g = generate_spec(gen);
  Eigenmatrix phi = eigenmatrix(spectrum(g), 2);
  return convex_hull(PointConfiguration(phi.entries));
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", max_threads());
  std::printf("%-18s %6s %12s %12s %8s %10s\n", "polytope", "n", "serial ms", "openmp ms",
              "speedup", "max |diff|");

  for (const char* gen : {"hypercube:3", "icosahedron", "rhombic_dodecahedron_skeleton",
                          "dodecahedron"}) {
    Polytope p = eigenpolytope(gen);
    IzmestievMatrix xs, xp;
    double ts = time_ms([&] { xs = izmestiev_fd_serial(p); });
    double tp = time_ms([&] { xp = izmestiev_fd(p); });
    double diff = (xs.X - xp.X).cwiseAbs().maxCoeff();
    std::printf("%-18s %6d %12.1f %12.1f %7.2fx %10.3g\n", gen, p.n_vertices(), ts, tp, ts / tp,
                diff);
  }
  return 0;
}
