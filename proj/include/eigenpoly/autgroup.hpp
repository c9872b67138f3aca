#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigenpoly/graph.hpp"

namespace eigenpoly {

/// Automorphism group given by a generating set of vertex permutations.
/// `order` is exact (orbit-stabilizer counting along a fixed base); the
/// group itself is never materialized unless closure() is called.
struct AutGroup {
  int n = 0;
  std::vector<std::vector<int>> generators;
  std::uint64_t order = 1;
};

/// Backtracking search over candidate vertex images with equitable-partition
/// refinement as the initial invariant (keyed on degree and sorted distance
/// profile) and distance-consistency pruning at every branch.
/// Throws if g.n() exceeds `search_bound`.
AutGroup automorphisms(const Graph& g, int search_bound = 128);

/// All group elements by BFS closure of the generators.
/// Throws if the group order exceeds `cap`.
std::vector<std::vector<int>> closure(const AutGroup& aut, std::uint64_t cap = 100000);

struct TransitivityProfile {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  bool distance_transitive = false;
  bool half_transitive = false;  // vertex && edge && !arc
  std::vector<int> orbit_counts;   // orbit count on each distance class D_1..D_diam
  bool connected = true;
  std::string reason;  // set when distance transitivity is vacuously false
};

/// Orbit computation uses generator closure only (seeded unions of images),
/// never group element enumeration.
TransitivityProfile transitivity(const Graph& g, const AutGroup& aut);

}  // namespace eigenpoly
