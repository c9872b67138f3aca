#pragma once

#include <json.hpp>
#include <string>

#include "eigenpoly/autgroup.hpp"
#include "eigenpoly/certify.hpp"
#include "eigenpoly/geometry.hpp"
#include "eigenpoly/graph.hpp"
#include "eigenpoly/izmestiev.hpp"
#include "eigenpoly/metrics.hpp"
#include "eigenpoly/spectra.hpp"
#include "eigenpoly/symmetry.hpp"

namespace eigenpoly {

inline constexpr std::string_view kVersion = "1.0.0";

// All artifact dumps use ordered JSON and fixed field names, so repeated
// runs with the same configuration are byte-identical.
using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);                 // {name, n, edges}
Json to_json(const Spectrum& s);              // {n, tol, groups:[{theta, multiplicity}]}
Json to_json(const Eigenmatrix& phi);
Json to_json(const Polytope& p);              // {dim, vertices, edges, facets}
Json to_json(const Certificate& c);           // {kind, theta, k, residuals, witness, reasons}
Json to_json(const AuditReport& a);           // {property: {pass, margin}}
Json to_json(const IzmestievMatrix& x);
Json to_json(const MetricReport& m);
Json to_json(const GroupReport& r);           // {generators, group_order, injective}
Json to_json(const TransitivityProfile& t);

std::string spectrum_csv(const Spectrum& s);
std::string matrix_csv(const Eigen::MatrixXd& m);
std::string metrics_csv(const MetricReport& m);

/// OFF mesh of a 2- or 3-dimensional polytope; facet polygons are emitted
/// in cyclic order, counterclockwise seen from outside.
std::string to_off(const Polytope& p);

}  // namespace eigenpoly
