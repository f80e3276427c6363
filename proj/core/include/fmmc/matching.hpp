#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fmmc/graph.hpp"

namespace fmmc {

// h : E -> [0,1] with sum_{e ∋ v} h(e) <= 1; values aligned with graph.edges().
struct FractionalMatching {
  std::vector<double> values;
  double total_weight = 0.0;
};

// g : V -> R_{>=0} with g(u) + g(v) >= w(u,v) on every edge.
struct VertexCover {
  std::vector<double> values;
  double total = 0.0;
};

enum class LpSolveStatus { kOptimal, kInfeasibleNumerics };
std::string_view to_string(LpSolveStatus status);

struct LpSolveReport {
  double primal_value = 0.0;  // matching side, sum h(e) w(e)
  double dual_value = 0.0;    // cover side, sum g(u)
  int iterations = 0;
  LpSolveStatus status = LpSolveStatus::kOptimal;
};

// Tolerance used for feasibility and duality-gap certification.
inline constexpr double kLpTolerance = 1e-9;

struct FractionalMatchingResult {
  FractionalMatching matching;
  LpSolveReport report;
};

struct VertexCoverResult {
  VertexCover cover;
  LpSolveReport report;
};

// Maximum weight fractional matching by primal simplex on the vertex-capacity
// LP; the cover side of the report comes from the same tableau's multipliers.
// Throws CapExceeded above 1e5 edges.
FractionalMatchingResult fractional_matching(const WeightedGraph& w);

// Minimum fractional vertex cover, solved as its own LP (two-phase simplex);
// the matching side of the report comes from that solve's multipliers.
VertexCoverResult min_vertex_cover_lp(const WeightedGraph& w);

struct ExactMatching {
  std::vector<std::size_t> edges;  // indices into graph.edges(), ascending
  double value = 0.0;
};

// Maximum weight matching by branch and bound with fractional-LP pruning,
// run per connected component. Accepts |E| <= 40, or any size when Δ <= 3;
// otherwise throws CapExceeded.
ExactMatching max_matching_exact(const WeightedGraph& w);
bool exact_matching_within_cap(const Graph& g);

// Exact fractional matching number by enumerating h ∈ {0, 1/2, 1}^E (the
// polytope's vertices are half-integral). |E| <= 13.
double fractional_matching_oracle(const WeightedGraph& w);

// Residual checks; both return the largest violation found (0 if feasible).
double matching_violation(const Graph& g, const std::vector<double>& h);
double cover_violation(const WeightedGraph& w, const std::vector<double>& g);

}  // namespace fmmc
