#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenpoly/io.hpp"

namespace eigenpoly {

enum class Scale { fast, slow, stretch };

/// One registry row. Expected values are checked against the pipeline's
/// own output; nothing here is asserted ad hoc at run time.
struct CatalogEntry {
  std::string name;
  std::string gen;  // generator spec for graph entries; empty for polytope entries
  Scale scale = Scale::fast;
  bool expect_spectral = false;            // theta_2-spectral
  bool expect_distance_transitive = false;
  std::optional<int> expect_dim;
  std::optional<int> expect_vertices;
  std::optional<int> expect_edges;
  std::optional<int> expect_facets;
  bool expect_balanced = false;            // for balanced-but-not-spectral controls
  bool run_criterion = false;
  bool expect_criterion = false;           // expected criterion outcome when run
  bool run_metrics = false;
  std::string note;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Coordinates for the polytope-side entries (rhombic pair, the trig
/// neighborly 4-polytope); throws for unknown names.
Polytope catalog_polytope(const std::string& name);

struct EntryResult {
  std::string name;
  bool ok = false;
  bool error = false;
  std::vector<std::string> messages;
  std::string verdict;       // certificate kind observed
  int dim = 0, vertices = 0, edges = 0, facets = 0;
  double theta2 = 0.0;
  bool distance_transitive = false;
  std::string criterion;     // observed criterion verdict, empty if skipped
  double metric_ratio_gap = -1.0, metric_angle_gap = -1.0;
  double elapsed_ms = 0.0;
};

struct CatalogSummary {
  std::vector<EntryResult> results;
  bool all_ok = true;
};

/// Runs each entry up to `max_scale` through the full pipeline (spectrum,
/// eigenpolytope, certification, transitivity, criterion and metrics where
/// flagged) and compares against the expectations. Per-entry failures are
/// collected; the run continues. Entries are independent and run under
/// OpenMP when `parallel`.
CatalogSummary run_catalog(Scale max_scale, bool parallel = true);

std::string summary_table(const CatalogSummary& s);
Json to_json(const CatalogSummary& s);
Json catalog_manifest();

}  // namespace eigenpoly
