#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fmmc/graph.hpp"
#include "fmmc/matrix.hpp"

namespace fmmc {

// Symmetric stochastic matrix whose off-diagonal support lies inside the
// edge set of its graph. The constructor enforces every invariant.
class MarkovMatrix {
 public:
  MarkovMatrix(Graph g, DenseMatrix entries);

  const Graph& graph() const { return graph_; }
  const DenseMatrix& entries() const { return entries_; }
  int size() const { return entries_.rows(); }

 private:
  Graph graph_;
  DenseMatrix entries_;
};

// Empty when p satisfies the M(G) invariants, otherwise a description of the
// first violation found.
std::string markov_violation(const Graph& g, const DenseMatrix& p);

struct SpectralSummary {
  std::vector<double> eigenvalues;  // descending
  double slem = 0.0;                // max_{i>=2} |λ_i|
  double gap = 0.0;                 // 1 - slem
};

SpectralSummary spectral_summary(const MarkovMatrix& p);

// P0 = I - L/(Δ+1) with L the combinatorial Laplacian.
MarkovMatrix max_degree_lazy_walk(const Graph& g);

struct ProjectionResult {
  MarkovMatrix matrix;
  int iterations = 0;
  bool converged = false;
};

// Nearest point of M(G) in Frobenius norm, by Dykstra's alternating
// projections between the affine set {symmetric, support ⊆ E ∪ diag, unit
// row sums} and the nonnegative cone. Reuse one instance per graph.
class FeasibleProjector {
 public:
  explicit FeasibleProjector(Graph g, int max_iterations = 20000, double tolerance = 1e-13);

  ProjectionResult project(const DenseMatrix& m) const;
  const Graph& graph() const { return graph_; }

 private:
  DenseMatrix project_affine(const DenseMatrix& x) const;
  MarkovMatrix cleanup(const DenseMatrix& x) const;

  Graph graph_;
  int max_iterations_;
  double tolerance_;
  DenseMatrix cholesky_;  // lower factor of 2I + D + A
};

ProjectionResult project_to_feasible(const DenseMatrix& m, const Graph& g);

enum class StepRule {
  kInverseSqrt,  // a * mu0 / sqrt(t)
  kInverse,      // a * mu0 / t
};

struct StepSchedule {
  StepRule rule = StepRule::kInverseSqrt;
  double scale = 1.0;
};

struct FmmcOptions {
  int max_iterations = 5000;
  StepSchedule steps;
  // Solver is deterministic; the seed is carried for provenance only.
  std::uint64_t seed = 0;
  // Stop once the best SLEM improves by less than this over `patience`
  // consecutive iterations.
  double stall_tolerance = 1e-7;
  int patience = 200;
};

struct FmmcHistoryEntry {
  int iteration = 0;
  double mu = 0.0;
  double gap = 0.0;
  double step = 0.0;
  int multiplicity = 1;
};

enum class FmmcStatus { kConverged, kIterationBudget };
std::string_view to_string(FmmcStatus status);

struct FmmcResult {
  MarkovMatrix matrix;  // best iterate
  SpectralSummary summary;
  std::vector<FmmcHistoryEntry> history;
  FmmcStatus status = FmmcStatus::kIterationBudget;
};

// Projected subgradient descent on the SLEM over M(G), started from the
// max-degree lazy walk. The returned gap is a feasible lower bound on the
// optimal gap. Throws InvalidInput for a disconnected graph.
FmmcResult fmmc_solve(const Graph& g, const FmmcOptions& options = {});

}  // namespace fmmc
