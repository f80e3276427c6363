#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace fmmc {

// Unordered pair stored canonically with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Edges keep their insertion
// order, which fixes variable order in every LP built on top of the graph.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  int max_degree() const { return max_degree_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  // Neighbours of v in increasing order.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool has_edge(int u, int v) const;
  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  int max_degree_ = 0;
};

// Rejects self-loops, duplicates and out-of-range endpoints, naming the
// offending pair.
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);

// One point per vertex in R^dim, stored row-major.
class Embedding {
 public:
  Embedding() = default;
  Embedding(int n, int dim, std::vector<double> coords);

  int num_points() const { return n_; }
  int dim() const { return dim_; }
  std::span<const double> point(int v) const {
    return {coords_.data() + static_cast<std::size_t>(v) * dim_,
            static_cast<std::size_t>(dim_)};
  }
  const std::vector<double>& coords() const { return coords_; }

 private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<double> coords_;
};

// w = restriction of ||f(u)-f(v)||^q to the edges of `graph`; one weight
// per edge, aligned with graph.edges().
struct WeightedGraph {
  WeightedGraph() = default;
  WeightedGraph(Graph g, std::vector<double> w, double exponent = 1.0);

  Graph graph;
  std::vector<double> weights;
  double q = 1.0;

  double total_edge_weight() const;
};

double distance_pow(std::span<const double> a, std::span<const double> b, double q);

WeightedGraph weights_from_embedding(const Graph& g, const Embedding& f, double q);

// Sum of ||f(u)-f(v)||^q over ordered pairs (u, v); every unordered pair is
// counted twice.
double total_pair_weight(const Embedding& f, double q);

Embedding center_embedding(const Embedding& f);

struct GraphWithEmbedding {
  Graph graph;
  Embedding embedding;
};

// k disjoint stars K_{1,delta}; vertex v is mapped to the basis vector e_v.
// Star j has centre j*(delta+1) and leaves j*(delta+1)+1 .. j*(delta+1)+delta.
GraphWithEmbedding gen_star_union(int delta, int k);

enum class GraphFamily { kPath, kCycle, kComplete, kHypercube };

// `size` is the vertex count, except for the hypercube where it is the
// dimension (2^size vertices).
Graph gen_family(GraphFamily kind, int size);
GraphFamily parse_graph_family(std::string_view name);

Embedding basis_embedding(int n);
Embedding gaussian_embedding(int n, int dim, unsigned long long seed);
// Rows are the Laplacian eigenvectors 2..dims+1 (ascending eigenvalue order).
Embedding spectral_embedding(const Graph& g, int dims);

}  // namespace fmmc
