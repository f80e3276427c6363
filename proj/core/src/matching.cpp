#include "fmmc/matching.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "fmmc/errors.hpp"
#include "fmmc/simplex.hpp"

namespace fmmc {
namespace {

constexpr std::size_t kMaxLpEdges = 100'000;
constexpr std::size_t kMaxExactEdges = 40;
constexpr int kMaxExactDegreeUnbounded = 3;
constexpr std::size_t kMaxOracleEdges = 13;
constexpr double kDualityGapTol = 1e-8;

double max_weight(const std::vector<double>& w) {
  double m = 0.0;
  for (double x : w) m = std::max(m, x);
  return m;
}

void check_lp_size(const WeightedGraph& w, const char* who) {
  if (w.graph.num_edges() > kMaxLpEdges)
    throw CapExceeded(std::string(who) + ": " + std::to_string(w.graph.num_edges()) +
                      " edges exceeds the dense LP cap of " + std::to_string(kMaxLpEdges));
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void clamp_matching(std::vector<double>& h) {
  for (double& x : h) x = std::clamp(x, 0.0, 1.0);
}

void clamp_cover(std::vector<double>& g) {
  for (double& x : g) x = std::max(x, 0.0);
}

// Status is optimal only when both sides are feasible and the gap closes.
LpSolveStatus certify(const WeightedGraph& w, const std::vector<double>& h,
                      const std::vector<double>& g, const LpSolveReport& report, LpStatus lp) {
  if (lp != LpStatus::kOptimal) return LpSolveStatus::kInfeasibleNumerics;
  const double scale = 1.0 + max_weight(w.weights);
  if (matching_violation(w.graph, h) > kLpTolerance) return LpSolveStatus::kInfeasibleNumerics;
  if (cover_violation(w, g) > kLpTolerance * scale) return LpSolveStatus::kInfeasibleNumerics;
  if (std::abs(report.primal_value - report.dual_value) >
      kDualityGapTol * (1.0 + std::abs(report.primal_value)))
    return LpSolveStatus::kInfeasibleNumerics;
  return LpSolveStatus::kOptimal;
}

// Fractional matching number of the subgraph spanned by `edge_ids`.
double residual_lp_bound(const WeightedGraph& w, const std::vector<std::size_t>& edge_ids) {
  const auto& edges = w.graph.edges();
  std::vector<int> label(w.graph.num_vertices(), -1);
  int rows = 0;
  for (std::size_t id : edge_ids) {
    if (label[edges[id].u] < 0) label[edges[id].u] = rows++;
    if (label[edges[id].v] < 0) label[edges[id].v] = rows++;
  }
  const double scale = max_weight(w.weights);
  DenseMatrix a(rows, static_cast<int>(edge_ids.size()));
  std::vector<double> c(edge_ids.size());
  for (std::size_t k = 0; k < edge_ids.size(); ++k) {
    const Edge& e = edges[edge_ids[k]];
    a(label[e.u], static_cast<int>(k)) = 1.0;
    a(label[e.v], static_cast<int>(k)) = 1.0;
    c[k] = w.weights[edge_ids[k]] / scale;
  }
  const LpSolution sol = solve_lp(a, std::vector<double>(rows, 1.0), c);
  if (sol.status != LpStatus::kOptimal)
    throw NumericalFailure("max_matching_exact: bounding LP failed");
  return sol.objective * scale;
}

class BranchAndBound {
 public:
  BranchAndBound(const WeightedGraph& w, std::vector<std::size_t> edge_ids)
      : w_(w), edges_(w.graph.edges()) {
    std::stable_sort(edge_ids.begin(), edge_ids.end(), [&](std::size_t a, std::size_t b) {
      return w.weights[a] > w.weights[b];
    });
    order_ = std::move(edge_ids);
    seed_with_greedy();
  }

  std::vector<std::size_t> solve() {
    std::vector<std::size_t> chosen;
    search(order_, 0.0, chosen);
    return best_set_;
  }

 private:
  void seed_with_greedy() {
    std::vector<char> used(w_.graph.num_vertices(), 0);
    for (std::size_t id : order_) {
      const Edge& e = edges_[id];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = 1;
      best_set_.push_back(id);
      best_ += w_.weights[id];
    }
  }

  bool cannot_beat(double current, double bound) const {
    return current + bound * (1.0 + 1e-9) + 1e-12 <= best_;
  }

  void search(const std::vector<std::size_t>& remaining, double current,
              std::vector<std::size_t>& chosen) {
    if (remaining.empty()) {
      if (current > best_) {
        best_ = current;
        best_set_ = chosen;
      }
      return;
    }

    double sum = 0.0;
    for (std::size_t id : remaining) sum += w_.weights[id];
    if (cannot_beat(current, sum)) return;
    if (remaining.size() >= 3 && cannot_beat(current, residual_lp_bound(w_, remaining))) return;

    const std::size_t head = remaining.front();
    const Edge& e = edges_[head];

    std::vector<std::size_t> rest;
    rest.reserve(remaining.size());
    for (std::size_t id : remaining) {
      const Edge& f = edges_[id];
      if (f.u != e.u && f.u != e.v && f.v != e.u && f.v != e.v) rest.push_back(id);
    }
    chosen.push_back(head);
    search(rest, current + w_.weights[head], chosen);
    chosen.pop_back();

    std::vector<std::size_t> without(remaining.begin() + 1, remaining.end());
    search(without, current, chosen);
  }

  const WeightedGraph& w_;
  const std::vector<Edge>& edges_;
  std::vector<std::size_t> order_;
  double best_ = 0.0;
  std::vector<std::size_t> best_set_;
};

}  // namespace

std::string_view to_string(LpSolveStatus status) {
  switch (status) {
    case LpSolveStatus::kOptimal:
      return "optimal";
    case LpSolveStatus::kInfeasibleNumerics:
      return "infeasibleNumerics";
  }
  return "unknown";
}

double matching_violation(const Graph& g, const std::vector<double>& h) {
  double worst = 0.0;
  std::vector<double> load(g.num_vertices(), 0.0);
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    worst = std::max({worst, -h[k], h[k] - 1.0});
    load[g.edges()[k].u] += h[k];
    load[g.edges()[k].v] += h[k];
  }
  for (double l : load) worst = std::max(worst, l - 1.0);
  return worst;
}

double cover_violation(const WeightedGraph& w, const std::vector<double>& g) {
  double worst = 0.0;
  for (double x : g) worst = std::max(worst, -x);
  for (std::size_t k = 0; k < w.graph.num_edges(); ++k) {
    const Edge& e = w.graph.edges()[k];
    worst = std::max(worst, w.weights[k] - g[e.u] - g[e.v]);
  }
  return worst;
}

FractionalMatchingResult fractional_matching(const WeightedGraph& w) {
  check_lp_size(w, "fractional_matching");
  const int n = w.graph.num_vertices();
  const auto m = static_cast<int>(w.graph.num_edges());
  FractionalMatchingResult out;
  out.matching.values.assign(m, 0.0);
  std::vector<double> cover(n, 0.0);

  const double scale = max_weight(w.weights);
  if (scale == 0.0) return out;

  DenseMatrix a(n, m);
  std::vector<double> c(m);
  for (int k = 0; k < m; ++k) {
    const Edge& e = w.graph.edges()[k];
    a(e.u, k) = 1.0;
    a(e.v, k) = 1.0;
    c[k] = w.weights[k] / scale;
  }
  const LpSolution sol = solve_lp(a, std::vector<double>(n, 1.0), c);

  out.matching.values = sol.x;
  clamp_matching(out.matching.values);
  out.matching.total_weight = dot(out.matching.values, w.weights);
  for (int v = 0; v < n; ++v) cover[v] = sol.dual[v] * scale;
  clamp_cover(cover);

  out.report.primal_value = out.matching.total_weight;
  out.report.dual_value = std::accumulate(cover.begin(), cover.end(), 0.0);
  out.report.iterations = sol.iterations;
  out.report.status = certify(w, out.matching.values, cover, out.report, sol.status);
  return out;
}

VertexCoverResult min_vertex_cover_lp(const WeightedGraph& w) {
  check_lp_size(w, "min_vertex_cover_lp");
  const int n = w.graph.num_vertices();
  const auto m = static_cast<int>(w.graph.num_edges());
  VertexCoverResult out;
  out.cover.values.assign(n, 0.0);
  std::vector<double> h(m, 0.0);

  const double scale = max_weight(w.weights);
  if (scale == 0.0) return out;

  // max -sum g  s.t.  -g_u - g_v <= -w_uv,  g >= 0
  DenseMatrix a(m, n);
  std::vector<double> b(m);
  for (int k = 0; k < m; ++k) {
    const Edge& e = w.graph.edges()[k];
    a(k, e.u) = -1.0;
    a(k, e.v) = -1.0;
    b[k] = -w.weights[k] / scale;
  }
  const LpSolution sol = solve_lp(a, b, std::vector<double>(n, -1.0));

  for (int v = 0; v < n; ++v) out.cover.values[v] = sol.x[v] * scale;
  clamp_cover(out.cover.values);
  out.cover.total = std::accumulate(out.cover.values.begin(), out.cover.values.end(), 0.0);
  h = sol.dual;
  clamp_matching(h);

  out.report.primal_value = dot(h, w.weights);
  out.report.dual_value = out.cover.total;
  out.report.iterations = sol.iterations;
  out.report.status = certify(w, h, out.cover.values, out.report, sol.status);
  return out;
}

bool exact_matching_within_cap(const Graph& g) {
  return g.num_edges() <= kMaxExactEdges || g.max_degree() <= kMaxExactDegreeUnbounded;
}

ExactMatching max_matching_exact(const WeightedGraph& w) {
  const Graph& g = w.graph;
  if (!exact_matching_within_cap(g))
    throw CapExceeded("max_matching_exact: " + std::to_string(g.num_edges()) +
                      " edges with max degree " + std::to_string(g.max_degree()) +
                      " exceeds the cap (|E| <= 40, or max degree <= 3)");

  // Components by union-find over positive-weight edges; zero-weight edges
  // never improve a matching.
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < g.num_edges(); ++k)
    if (w.weights[k] > 0.0) parent[find(g.edges()[k].u)] = find(g.edges()[k].v);

  std::vector<std::vector<std::size_t>> groups(g.num_vertices());
  for (std::size_t k = 0; k < g.num_edges(); ++k)
    if (w.weights[k] > 0.0) groups[find(g.edges()[k].u)].push_back(k);

  ExactMatching out;
  for (auto& group : groups) {
    if (group.empty()) continue;
    BranchAndBound bb(w, std::move(group));
    auto chosen = bb.solve();
    out.edges.insert(out.edges.end(), chosen.begin(), chosen.end());
  }
  std::sort(out.edges.begin(), out.edges.end());
  for (std::size_t k : out.edges) out.value += w.weights[k];
  return out;
}

double fractional_matching_oracle(const WeightedGraph& w) {
  const Graph& g = w.graph;
  if (g.num_edges() > kMaxOracleEdges)
    throw CapExceeded("fractional_matching_oracle: " + std::to_string(g.num_edges()) +
                      " edges exceeds the enumeration cap of " + std::to_string(kMaxOracleEdges));
  // Loads and values are counted in halves.
  std::vector<int> load(g.num_vertices(), 0);
  double best = 0.0;
  std::function<void(std::size_t, double)> dfs = [&](std::size_t k, double value) {
    if (k == g.num_edges()) {
      best = std::max(best, value);
      return;
    }
    const Edge& e = g.edges()[k];
    for (int halves = 0; halves <= 2; ++halves) {
      if (load[e.u] + halves > 2 || load[e.v] + halves > 2) break;
      load[e.u] += halves;
      load[e.v] += halves;
      dfs(k + 1, value + halves * w.weights[k]);
      load[e.u] -= halves;
      load[e.v] -= halves;
    }
  };
  dfs(0, 0.0);
  return best / 2.0;
}

}  // namespace fmmc
