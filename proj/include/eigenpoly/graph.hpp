#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eigenpoly {

/// A finite simple undirected graph. Vertices are 0-based internally;
/// every text format (edge lists, graph6, JSON) uses 1-based labels,
/// and the parser/formatter is the only place the shift happens.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges, std::string name = "");

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::string& name() const { return name_; }

  /// Edges as (i, j) with i < j, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  bool has_edge(int i, int j) const;
  int degree(int i) const { return static_cast<int>(adj_[i].size()); }

  /// Returns true iff all degrees agree; the common degree goes to *deg.
  bool regular(int* deg = nullptr) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::string name_;
};

/// All-pairs shortest path lengths (BFS from every vertex).
/// dist[i][j] == kUnreachable for vertices in different components.
struct DistanceMatrix {
  static constexpr int kUnreachable = -1;
  std::vector<std::vector<int>> dist;
  int diameter = 0;   // max finite entry
  bool connected = true;
};

DistanceMatrix distances(const Graph& g);

enum class GraphFormat { graph6, edge_list };

/// Parses `text` in the declared format. Edge lists are "n" on the first
/// line followed by "i j" pairs (1-based); duplicate edges collapse,
/// loops and out-of-range endpoints throw std::invalid_argument.
Graph parse_graph(std::string_view text, GraphFormat format);

/// graph6 encoding; short form for n <= 62, long form up to n < 258048.
std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

/// Named generator, e.g. generate("johnson", {5, 2}) or generate("petersen", {}).
/// Known generators: cycle(n), complete(n), hypercube(n), complete_multipartite(parts...),
/// johnson(n,k), hamming(d,q), halved_cube(n), prism(n), cocktail_party(m),
/// and the embedded named graphs petersen, dodecahedron, icosahedron, holt,
/// schlafli, gosset, rhombic_dodecahedron_skeleton, rhombic_triacontahedron_skeleton.
Graph generate(const std::string& name, const std::vector<int>& params);

/// Parses "name:p1,p2" shorthand used by the CLI, e.g. "hypercube:3".
Graph generate_spec(const std::string& spec);

}  // namespace eigenpoly
