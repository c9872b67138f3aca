#include "eigenpoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eigenpoly {

namespace {
#include "named_graphs.inc"
}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::string name)
    : n_(n), name_(std::move(name)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::set<std::pair<int, int>> dedup;
  for (auto [i, j] : edges) {
    if (i == j) throw std::invalid_argument("graph: loop at vertex " + std::to_string(i + 1));
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    dedup.emplace(std::min(i, j), std::max(i, j));
  }
  edges_.assign(dedup.begin(), dedup.end());
  adj_.assign(n, {});
  for (auto [i, j] : edges_) {
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int i, int j) const {
  if (i == j) return false;
  const auto& a = adj_[i];
  return std::binary_search(a.begin(), a.end(), j);
}

bool Graph::regular(int* deg) const {
  if (n_ == 0) return true;
  int d = degree(0);
  for (int i = 1; i < n_; ++i)
    if (degree(i) != d) return false;
  if (deg) *deg = d;
  return true;
}

DistanceMatrix distances(const Graph& g) {
  DistanceMatrix r;
  const int n = g.n();
  r.dist.assign(n, std::vector<int>(n, DistanceMatrix::kUnreachable));
  for (int s = 0; s < n; ++s) {
    auto& d = r.dist[s];
    d[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (d[v] == DistanceMatrix::kUnreachable) {
          d[v] = d[u] + 1;
          q.push(v);
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      if (d[t] == DistanceMatrix::kUnreachable)
        r.connected = false;
      else
        r.diameter = std::max(r.diameter, d[t]);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

Graph parse_edge_list(std::string_view text, std::string name = "") {
  std::istringstream in{std::string(text)};
  long long n = -1;
  if (!(in >> n) || n < 0) throw std::invalid_argument("edge list: malformed header");
  std::vector<std::pair<int, int>> edges;
  long long a, b;
  while (in >> a) {
    if (!(in >> b)) throw std::invalid_argument("edge list: dangling endpoint");
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("edge list: vertex index out of range");
    if (a == b) throw std::invalid_argument("edge list: loop encountered");
    edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (!in.eof()) throw std::invalid_argument("edge list: trailing garbage");
  return Graph(static_cast<int>(n), std::move(edges), std::move(name));
}

Graph parse_g6(std::string_view text) {
  // strip optional header and whitespace
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw std::invalid_argument("graph6: empty input");

  size_t pos = 0;
  auto byte = [&](size_t k) -> int {
    if (k >= s.size()) throw std::invalid_argument("graph6: truncated input");
    int v = static_cast<unsigned char>(s[k]) - 63;
    if (v < 0 || v > 63) throw std::invalid_argument("graph6: invalid character");
    return v;
  };

  long long n;
  if (s[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (s.size() > 1 && s[1] != '~') {
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    throw std::invalid_argument("graph6: 8-byte order not supported");
  }

  std::vector<std::pair<int, int>> edges;
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t need = (nbits + 5) / 6;
  if (s.size() - pos != need) throw std::invalid_argument("graph6: wrong length");
  size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int v = byte(pos + bit / 6);
      if ((v >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_g6(text);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.n();
  if (n >= 258048) throw std::invalid_argument("graph6: graph too large");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  std::vector<int> bits(((nbits + 5) / 6) * 6, 0);
  size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) bits[bit] = 1;
  for (size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = (v << 1) | bits[k + t];
    out += static_cast<char>(v + 63);
  }
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << '\n';
  for (auto [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Generators

namespace {

Graph from_resource(std::string_view res, std::string name) {
  return parse_edge_list(res, std::move(name));
}

int popcount(unsigned x) { return __builtin_popcount(x); }

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e), "cycle(" + std::to_string(n) + ")");
}

Graph gen_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: need n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e), "complete(" + std::to_string(n) + ")");
}

Graph gen_hypercube(int h) {
  if (h < 1 || h > 20) throw std::invalid_argument("hypercube: need 1 <= n <= 20");
  int n = 1 << h;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < h; ++b)
      if (!(v & (1 << b))) e.emplace_back(v, v | (1 << b));
  return Graph(n, std::move(e), "hypercube(" + std::to_string(h) + ")");
}

Graph gen_complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("complete_multipartite: no parts");
  int n = 0;
  std::vector<int> cls;
  for (size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw std::invalid_argument("complete_multipartite: bad part size");
    for (int t = 0; t < parts[p]; ++t) cls.push_back(static_cast<int>(p));
    n += parts[p];
  }
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cls[i] != cls[j]) e.emplace_back(i, j);
  return Graph(n, std::move(e), "complete_multipartite");
}

// k-subsets of {0..n-1} in lexicographic order; adjacency |A cap B| = k-1.
Graph gen_johnson(int n, int k) {
  if (k < 1 || k > n || n > 30) throw std::invalid_argument("johnson: invalid parameters");
  std::vector<unsigned> subsets;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    unsigned mask = 0;
    for (int p : pick) mask |= 1u << p;
    subsets.push_back(mask);
    int t = k - 1;
    while (t >= 0 && pick[t] == n - k + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int u = t + 1; u < k; ++u) pick[u] = pick[u - 1] + 1;
  }
  std::vector<std::pair<int, int>> e;
  for (size_t a = 0; a < subsets.size(); ++a)
    for (size_t b = a + 1; b < subsets.size(); ++b)
      if (popcount(subsets[a] & subsets[b]) == k - 1)
        e.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Graph(static_cast<int>(subsets.size()), std::move(e),
               "johnson(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

// words of length d over q symbols; adjacency at Hamming distance 1
Graph gen_hamming(int d, int q) {
  if (d < 1 || q < 1) throw std::invalid_argument("hamming: invalid parameters");
  long long nn = 1;
  for (int t = 0; t < d; ++t) {
    nn *= q;
    if (nn > 4096) throw std::invalid_argument("hamming: too many words");
  }
  int n = static_cast<int>(nn);
  auto digit = [&](int w, int pos) {
    for (int t = 0; t < pos; ++t) w /= q;
    return w % q;
  };
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int diff = 0;
      for (int t = 0; t < d && diff < 2; ++t) diff += digit(a, t) != digit(b, t);
      if (diff == 1) e.emplace_back(a, b);
    }
  return Graph(n, std::move(e), "hamming(" + std::to_string(d) + "," + std::to_string(q) + ")");
}

// even-weight words of Q_n, adjacency at Hamming distance 2
Graph gen_halved_cube(int h) {
  if (h < 2 || h > 12) throw std::invalid_argument("halved_cube: need 2 <= n <= 12");
  std::vector<unsigned> words;
  for (unsigned v = 0; v < (1u << h); ++v)
    if (popcount(v) % 2 == 0) words.push_back(v);
  std::vector<std::pair<int, int>> e;
  for (size_t a = 0; a < words.size(); ++a)
    for (size_t b = a + 1; b < words.size(); ++b)
      if (popcount(words[a] ^ words[b]) == 2)
        e.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Graph(static_cast<int>(words.size()), std::move(e),
               "halved_cube(" + std::to_string(h) + ")");
}

Graph gen_prism(int n) {
  if (n < 3) throw std::invalid_argument("prism: need n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(n + i, n + (i + 1) % n);
    e.emplace_back(i, n + i);
  }
  return Graph(2 * n, std::move(e), "prism(" + std::to_string(n) + ")");
}

// complement of m disjoint edges: vertices 2i, 2i+1 non-adjacent
Graph gen_cocktail_party(int m) {
  if (m < 2) throw std::invalid_argument("cocktail_party: need m >= 2");
  int n = 2 * m;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(j == i + 1 && i % 2 == 0)) e.emplace_back(i, j);
  return Graph(n, std::move(e), "cocktail_party(" + std::to_string(m) + ")");
}

}  // namespace

Graph generate(const std::string& name, const std::vector<int>& params) {
  auto arity = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("generator " + name + ": expected " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (name == "cycle") { arity(1); return gen_cycle(params[0]); }
  if (name == "complete") { arity(1); return gen_complete(params[0]); }
  if (name == "hypercube") { arity(1); return gen_hypercube(params[0]); }
  if (name == "complete_multipartite") return gen_complete_multipartite(params);
  if (name == "johnson") { arity(2); return gen_johnson(params[0], params[1]); }
  if (name == "hamming") { arity(2); return gen_hamming(params[0], params[1]); }
  if (name == "halved_cube") { arity(1); return gen_halved_cube(params[0]); }
  if (name == "prism") { arity(1); return gen_prism(params[0]); }
  if (name == "cocktail_party") { arity(1); return gen_cocktail_party(params[0]); }

  static const std::pair<std::string_view, std::string_view> named[] = {
      {"petersen", k_petersen},
      {"dodecahedron", k_dodecahedron},
      {"icosahedron", k_icosahedron},
      {"holt", k_holt},
      {"schlafli", k_schlafli},
      {"gosset", k_gosset},
      {"rhombic_dodecahedron_skeleton", k_rhombic_dodecahedron_skeleton},
      {"rhombic_triacontahedron_skeleton", k_rhombic_triacontahedron_skeleton},
  };
  for (auto& [nm, res] : named) {
    if (name == nm) {
      arity(0);
      return from_resource(res, std::string(nm));
    }
  }
  throw std::invalid_argument("unknown generator: " + name);
}

Graph generate_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (!tok.empty()) params.push_back(std::stoi(tok));
    }
  }
  return generate(name, params);
}

}  // namespace eigenpoly
