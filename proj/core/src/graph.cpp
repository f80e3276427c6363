#include "fmmc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "fmmc/eigen.hpp"
#include "fmmc/errors.hpp"

namespace fmmc {
namespace {

constexpr int kMaxFamilyVertices = 4096;

std::string pair_text(int u, int v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n) {
  if (n < 0) throw InvalidInput("graph: negative vertex count");
  std::set<Edge> seen;
  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InvalidInput("graph: edge " + pair_text(e.u, e.v) + " has an endpoint outside [0," +
                         std::to_string(n) + ")");
    if (e.u == e.v) throw InvalidInput("graph: self-loop " + pair_text(e.u, e.v));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert(e).second) throw InvalidInput("graph: duplicate edge " + pair_text(e.u, e.v));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    max_degree_ = std::max(max_degree_, static_cast<int>(nb.size()));
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, std::move(list));
}

Embedding::Embedding(int n, int dim, std::vector<double> coords)
    : n_(n), dim_(dim), coords_(std::move(coords)) {
  if (n < 0 || dim < 0) throw InvalidInput("embedding: negative size");
  if (coords_.size() != static_cast<std::size_t>(n) * dim)
    throw InvalidInput("embedding: expected " + std::to_string(static_cast<std::size_t>(n) * dim) +
                       " coordinates, got " + std::to_string(coords_.size()));
  for (double x : coords_)
    if (!std::isfinite(x)) throw InvalidInput("embedding: non-finite coordinate");
}

WeightedGraph::WeightedGraph(Graph g, std::vector<double> w, double exponent)
    : graph(std::move(g)), weights(std::move(w)), q(exponent) {
  if (weights.size() != graph.num_edges())
    throw InvalidInput("weighted graph: " + std::to_string(weights.size()) + " weights for " +
                       std::to_string(graph.num_edges()) + " edges");
  for (double x : weights)
    if (!(x >= 0.0) || !std::isfinite(x))
      throw InvalidInput("weighted graph: weights must be finite and nonnegative");
}

double WeightedGraph::total_edge_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double distance_pow(std::span<const double> a, std::span<const double> b, double q) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  if (q == 2.0) return s;
  return std::pow(std::sqrt(s), q);
}

WeightedGraph weights_from_embedding(const Graph& g, const Embedding& f, double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw InvalidInput("weights_from_embedding: need q >= 1");
  if (f.num_points() != g.num_vertices())
    throw InvalidInput("weights_from_embedding: embedding has " + std::to_string(f.num_points()) +
                       " points for " + std::to_string(g.num_vertices()) + " vertices");
  std::vector<double> w;
  w.reserve(g.num_edges());
  for (const Edge& e : g.edges()) w.push_back(distance_pow(f.point(e.u), f.point(e.v), q));
  return WeightedGraph(g, std::move(w), q);
}

double total_pair_weight(const Embedding& f, double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw InvalidInput("total_pair_weight: need q >= 1");
  double s = 0.0;
  for (int u = 0; u < f.num_points(); ++u)
    for (int v = u + 1; v < f.num_points(); ++v) s += distance_pow(f.point(u), f.point(v), q);
  return 2.0 * s;
}

Embedding center_embedding(const Embedding& f) {
  const int n = f.num_points();
  const int dim = f.dim();
  if (n == 0) return f;
  std::vector<double> centroid(dim, 0.0);
  for (int v = 0; v < n; ++v) {
    auto p = f.point(v);
    for (int k = 0; k < dim; ++k) centroid[k] += p[k];
  }
  for (double& c : centroid) c /= n;
  std::vector<double> coords = f.coords();
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < dim; ++k) coords[static_cast<std::size_t>(v) * dim + k] -= centroid[k];
  return Embedding(n, dim, std::move(coords));
}

GraphWithEmbedding gen_star_union(int delta, int k) {
  if (delta < 1 || k < 1) throw InvalidInput("gen_star_union: need delta >= 1 and k >= 1");
  const int n = k * (delta + 1);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * delta);
  for (int s = 0; s < k; ++s) {
    const int centre = s * (delta + 1);
    for (int leaf = 1; leaf <= delta; ++leaf) edges.push_back({centre, centre + leaf});
  }
  return {Graph(n, std::move(edges)), basis_embedding(n)};
}

Graph gen_family(GraphFamily kind, int size) {
  if (size < 0) throw InvalidInput("gen_family: negative size");
  std::vector<Edge> edges;
  int n = size;
  switch (kind) {
    case GraphFamily::kPath:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case GraphFamily::kCycle:
      if (n < 3) throw InvalidInput("gen_family: a cycle needs at least 3 vertices");
      for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
      break;
    case GraphFamily::kComplete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      break;
    case GraphFamily::kHypercube:
      if (size > 12) throw CapExceeded("gen_family: hypercube dimension above 12");
      n = 1 << size;
      for (int v = 0; v < n; ++v)
        for (int b = 0; b < size; ++b)
          if (const int w = v ^ (1 << b); v < w) edges.push_back({v, w});
      break;
  }
  if (n > kMaxFamilyVertices)
    throw CapExceeded("gen_family: " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(kMaxFamilyVertices));
  return Graph(n, std::move(edges));
}

GraphFamily parse_graph_family(std::string_view name) {
  if (name == "path") return GraphFamily::kPath;
  if (name == "cycle") return GraphFamily::kCycle;
  if (name == "complete") return GraphFamily::kComplete;
  if (name == "hypercube") return GraphFamily::kHypercube;
  throw InvalidInput("unknown graph family '" + std::string(name) + "'");
}

Embedding basis_embedding(int n) {
  std::vector<double> coords(static_cast<std::size_t>(n) * n, 0.0);
  for (int v = 0; v < n; ++v) coords[static_cast<std::size_t>(v) * n + v] = 1.0;
  return Embedding(n, n, std::move(coords));
}

Embedding gaussian_embedding(int n, int dim, unsigned long long seed) {
  if (n < 0 || dim < 1) throw InvalidInput("gaussian_embedding: need dim >= 1");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> coords(static_cast<std::size_t>(n) * dim);
  for (double& x : coords) x = normal(gen);
  return Embedding(n, dim, std::move(coords));
}

Embedding spectral_embedding(const Graph& g, int dims) {
  const int n = g.num_vertices();
  if (dims < 1 || dims > n - 1)
    throw InvalidInput("spectral_embedding: need 1 <= dims <= n-1");
  DenseMatrix lap(n, n);
  for (const Edge& e : g.edges()) {
    lap(e.u, e.v) -= 1.0;
    lap(e.v, e.u) -= 1.0;
    lap(e.u, e.u) += 1.0;
    lap(e.v, e.v) += 1.0;
  }
  // Eigenvalues come back descending; the smallest sit at the end.
  const EigenSystem es = sym_eigensystem(lap);
  std::vector<double> coords(static_cast<std::size_t>(n) * dims);
  for (int k = 0; k < dims; ++k) {
    const int col = n - 2 - k;
    for (int v = 0; v < n; ++v) coords[static_cast<std::size_t>(v) * dims + k] = es.vectors(v, col);
  }
  return Embedding(n, dims, std::move(coords));
}

}  // namespace fmmc
