// Command-line frontend: spectrum table, eigenpolytope coordinates and hull,
// certification, dual-volume Hessian audit, metric identities, catalog runs.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "eigenpoly/catalog.hpp"
#include "eigenpoly/io.hpp"
#include "eigenpoly/parallel.hpp"

namespace ep = eigenpoly;
namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string gen;
  std::string in_file;
  std::string format = "edges";
  int k = 2;
  double tol_grouping = 1e-8;
  double tol_hull = 1e-9;
  double tol_criterion = 1e-6;
  std::string emit = "json";
  std::string out_dir;
};

void add_input_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--gen", cfg.gen, "generator spec, e.g. hypercube:3 or johnson:5,2");
  cmd->add_option("--in", cfg.in_file, "input graph file");
  cmd->add_option("--format", cfg.format, "input format: graph6|edges")
      ->check(CLI::IsMember({"graph6", "edges"}));
  cmd->add_option("--k", cfg.k, "1-based eigenvalue index (largest first)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-grouping", cfg.tol_grouping, "eigenvalue grouping tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-hull", cfg.tol_hull, "hull coplanarity tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-criterion", cfg.tol_criterion, "criterion spread tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--emit", cfg.emit, "artifact format: json|off|csv")
      ->check(CLI::IsMember({"json", "off", "csv"}));
  cmd->add_option("--out", cfg.out_dir, "output directory (default: stdout)");
}

ep::Graph load_graph(const RunConfig& cfg) {
  if (!cfg.gen.empty()) return ep::generate_spec(cfg.gen);
  if (cfg.in_file.empty()) throw CLI::ValidationError("need --gen or --in");
  std::ifstream in(cfg.in_file);
  if (!in) throw std::runtime_error("cannot read " + cfg.in_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return ep::parse_graph(buf.str(),
                         cfg.format == "graph6" ? ep::GraphFormat::graph6
                                                : ep::GraphFormat::edge_list);
}

ep::Json artifact_header(const RunConfig& cfg) {
  ep::Json j;
  j["version"] = std::string(ep::kVersion);
  j["tolerances"] = ep::Json{{"grouping", cfg.tol_grouping},
                             {"hull", cfg.tol_hull},
                             {"criterion", cfg.tol_criterion}};
  j["k"] = cfg.k;
  return j;
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& payload) {
  if (cfg.out_dir.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  fs::create_directories(cfg.out_dir);
  fs::path path = fs::path(cfg.out_dir) / name;
  std::ofstream out(path);
  out << payload;
  std::cerr << "wrote " << path.string() << '\n';
}

void print_spectrum(const ep::Spectrum& s) {
  std::cout << "theta            mult\n";
  for (const auto& g : s.groups) {
    char line[64];
    std::snprintf(line, sizeof(line), "%-16.10g %d\n", g.theta, g.multiplicity);
    std::cout << line;
  }
}

int cmd_spectrum(const RunConfig& cfg) {
  ep::Graph g = load_graph(cfg);
  ep::Spectrum s = ep::spectrum(g, cfg.tol_grouping);
  print_spectrum(s);
  if (cfg.emit == "csv") {
    emit(cfg, "spectrum.csv", ep::spectrum_csv(s));
  } else {
    ep::Json j = artifact_header(cfg);
    j["graph"] = ep::to_json(g);
    j["spectrum"] = ep::to_json(s);
    emit(cfg, "spectrum.json", j.dump(2));
  }
  return 0;
}

int cmd_polytope(const RunConfig& cfg) {
  ep::Graph g = load_graph(cfg);
  ep::Spectrum s = ep::spectrum(g, cfg.tol_grouping);
  print_spectrum(s);
  ep::Eigenmatrix phi = ep::eigenmatrix(s, cfg.k);
  int d = static_cast<int>(phi.entries.cols());
  if (d < 2) {
    std::cout << "status: dimension " << d << " too low, no polytope emitted\n";
    return 0;
  }
  ep::Polytope p = ep::convex_hull(ep::PointConfiguration(phi.entries), cfg.tol_hull);
  std::cout << "eigenpolytope: dim " << p.dim << ", " << p.n_vertices() << " vertices, "
            << p.edges.size() << " edges, " << p.facets.size() << " facets\n";

  ep::Json j = artifact_header(cfg);
  j["graph"] = ep::to_json(g);
  j["theta"] = phi.theta;
  j["coordinates"] = ep::to_json(phi)["entries"];
  j["polytope"] = ep::to_json(p);
  if (cfg.emit == "off") {
    if (p.dim <= 3) {
      emit(cfg, "polytope.off", ep::to_off(p));
    } else {
      std::cout << "status: dimension " << p.dim
                << " too high for OFF, emitting JSON and a 3-coordinate projection\n";
      emit(cfg, "polytope.json", j.dump(2));
      emit(cfg, "projection3.csv", ep::matrix_csv(phi.entries.leftCols(3)));
    }
  } else if (cfg.emit == "csv") {
    emit(cfg, "coordinates.csv", ep::matrix_csv(phi.entries));
  } else {
    emit(cfg, "polytope.json", j.dump(2));
  }
  if (!ep::is_spectral_graph(g, cfg.k).ok())
    std::cout << "warning: input edges not realized as hull edges at this index\n";
  return 0;
}

int cmd_certify(const RunConfig& cfg) {
  ep::Graph g = load_graph(cfg);
  ep::Certificate cert = ep::is_spectral_graph(g, cfg.k);
  ep::Json j = artifact_header(cfg);
  j["graph"] = ep::to_json(g);
  j["certificate"] = ep::to_json(cert);
  emit(cfg, "certificate.json", j.dump(2));
  std::cout << "verdict: " << ep::to_string(cert.kind) << '\n';
  return 0;
}

int cmd_izmestiev(const RunConfig& cfg, const std::string& scheme) {
  ep::Graph g = load_graph(cfg);
  ep::Spectrum s = ep::spectrum(g, cfg.tol_grouping);
  ep::Eigenmatrix phi = ep::eigenmatrix(s, cfg.k);
  ep::Polytope p = ep::convex_hull(ep::PointConfiguration(phi.entries), cfg.tol_hull);
  if (p.dim != p.ambient || p.dim < 2) {
    std::cerr << "eigenpolytope is degenerate (dim " << p.dim << "); no matrix computed\n";
    return 1;
  }
  ep::IzmestievMatrix x =
      scheme == "fd" ? ep::izmestiev_fd(p) : ep::izmestiev_ridge(p);
  ep::AuditReport rep = ep::audit(x, p);
  ep::Certificate crit = ep::theta2_criterion(x, ep::skeleton_graph(p), cfg.tol_criterion);

  ep::Json j = artifact_header(cfg);
  j["graph"] = ep::to_json(g);
  j["izmestiev"] = ep::to_json(x);
  j["audit"] = ep::to_json(rep);
  j["criterion"] = ep::to_json(crit);
  if (cfg.emit == "csv")
    emit(cfg, "izmestiev.csv", ep::matrix_csv(x.X));
  else
    emit(cfg, "izmestiev.json", j.dump(2));
  std::cout << "audit: " << (rep.all_pass() ? "all five properties pass" : "FAILED") << '\n';
  std::cout << "criterion: " << ep::to_string(crit.kind);
  if (crit.theta) std::cout << " (theta_2 = " << *crit.theta << ")";
  std::cout << '\n';
  return 0;
}

int cmd_metrics(const RunConfig& cfg) {
  ep::Graph g = load_graph(cfg);
  ep::Spectrum s = ep::spectrum(g, cfg.tol_grouping);
  ep::Eigenmatrix phi = ep::eigenmatrix(s, cfg.k);
  ep::Polytope p = ep::convex_hull(ep::PointConfiguration(phi.entries), cfg.tol_hull);
  ep::MetricReport m = ep::metric_report(p, ep::spectrum(ep::skeleton_graph(p)));
  ep::Json j = artifact_header(cfg);
  j["graph"] = ep::to_json(g);
  j["metrics"] = ep::to_json(m);
  if (cfg.emit == "csv")
    emit(cfg, "metrics.csv", ep::metrics_csv(m));
  else
    emit(cfg, "metrics.json", j.dump(2));
  std::cout << "l/r = " << m.ratio << " (predicted " << m.predicted_ratio << "), cos(alpha) = "
            << std::cos(m.dihedral_mean) << " (predicted " << std::cos(m.predicted_angle)
            << ")\n";
  return 0;
}

int cmd_catalog(const RunConfig& cfg, const std::string& scale, bool manifest_only) {
  if (manifest_only) {
    emit(cfg, "catalog_manifest.json", ep::catalog_manifest().dump(2));
    return 0;
  }
  ep::Scale sc = scale == "stretch" ? ep::Scale::stretch
                : scale == "slow"   ? ep::Scale::slow
                                    : ep::Scale::fast;
  ep::CatalogSummary sum = ep::run_catalog(sc);
  std::cout << ep::summary_table(sum);
  emit(cfg, "catalog_summary.json", ep::to_json(sum).dump(2));
  return sum.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eigenpolytopes, spectral certification and dual-volume Hessian audits"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string scheme = "ridge";
  std::string scale = "slow";
  bool manifest_only = false;

  auto* c_spec = app.add_subcommand("spectrum", "adjacency spectrum with multiplicities");
  add_input_flags(c_spec, cfg);
  auto* c_poly = app.add_subcommand("polytope", "eigenpolytope coordinates and hull");
  add_input_flags(c_poly, cfg);
  auto* c_cert = app.add_subcommand("certify", "spectral graph certification at index k");
  add_input_flags(c_cert, cfg);
  auto* c_izm = app.add_subcommand("izmestiev", "dual-volume Hessian, audit and criterion");
  add_input_flags(c_izm, cfg);
  c_izm->add_option("--scheme", scheme, "fd|ridge")->check(CLI::IsMember({"fd", "ridge"}));
  auto* c_met = app.add_subcommand("metrics", "edge-length/circumradius and dual dihedral report");
  add_input_flags(c_met, cfg);
  auto* c_cat = app.add_subcommand("catalog", "run the classification harness");
  add_input_flags(c_cat, cfg);
  c_cat->add_option("--scale", scale, "fast|slow|stretch")
      ->check(CLI::IsMember({"fast", "slow", "stretch"}));
  c_cat->add_flag("--manifest", manifest_only, "emit the catalog manifest and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_spec->parsed()) return cmd_spectrum(cfg);
    if (c_poly->parsed()) return cmd_polytope(cfg);
    if (c_cert->parsed()) return cmd_certify(cfg);
    if (c_izm->parsed()) return cmd_izmestiev(cfg, scheme);
    if (c_met->parsed()) return cmd_metrics(cfg);
    if (c_cat->parsed()) return cmd_catalog(cfg, scale, manifest_only);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
