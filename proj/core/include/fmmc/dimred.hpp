#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "fmmc/graph.hpp"
#include "fmmc/matrix.hpp"

namespace fmmc {

enum class ProjectorLaw { kGaussian, kRademacher };
std::string_view to_string(ProjectorLaw law);
ProjectorLaw parse_projector_law(std::string_view name);

// Realised d x n random matrix with i.i.d. centred entries of variance 1/d:
// N(0, 1/d) or uniform on {±1/sqrt(d)}. Rebuilding from (law, seed, d, n)
// reproduces it bit for bit.
struct Projector {
  DenseMatrix entries;
  ProjectorLaw law = ProjectorLaw::kGaussian;
  std::uint64_t seed = 0;

  int rows() const { return entries.rows(); }
  int cols() const { return entries.cols(); }
};

Projector sample_projector(int n, int d, ProjectorLaw law, std::uint64_t seed);

// Row v of the result is π f(v).
Embedding apply_projector(const Projector& p, const Embedding& f);

struct GoodnessEstimate {
  double epsilon = 0.0;
  double q = 0.0;
  int trials = 0;
  double delta_hat = 0.0;
  double rho_hat = 0.0;
  double delta_se = 0.0;
  double rho_se = 0.0;

  // Upper confidence bounds used wherever δ, ρ enter a threshold. A zero
  // failure count falls back to the rule-of-three bound 3/trials.
  double delta_upper() const;
  double rho_upper() const;
};

inline constexpr double kConfidenceZ = 3.0;

// Monte-Carlo estimates of the two failure quantities of a random dimension
// reduction:
//   δ̂ = frequency of ||πx - πy|| outside e^{±ε} ||x - y||,
//   ρ̂ = mean of 1{||πx-πy|| >= e^ε ||x-y||} (||πx-πy||^q/||x-y||^q - e^{εq}).
// Gaussian projectors are rotation invariant, so one fixed unit direction is
// used; Rademacher trials draw a fresh random unit direction in R^n.
GoodnessEstimate estimate_goodness(ProjectorLaw law, int n, int d, double eps, double q,
                                   int trials, std::uint64_t seed);

struct HeavyLightThresholds {
  double diff_h = 0.0;   // sqrt(ρ)(Δ+1) w(M)
  double cost_l1 = 0.0;  // sqrt(δ)(Δ+1) w(M)
  double cost_l2 = 0.0;  // sqrt(δ) · sum over unordered pairs of w̃
};

struct HeavyLightReport {
  double epsilon = 0.0;
  double q = 0.0;
  std::vector<Edge> heavy;        // edges with w_π >= e^{εq} w
  std::vector<Edge> light_edges;  // edges with w_π <= e^{-εq} w
  std::vector<Edge> light_pairs;  // vertex pairs with w̃_π <= e^{-εq} w̃
  double diff_h = 0.0;
  double cost_l1 = 0.0;
  double cost_l2 = 0.0;
  HeavyLightThresholds thresholds;
  bool event_g = false;
};

// Classifies edges and vertex pairs by their distortion under the projection
// fOrig -> fProj and tests the three threshold inequalities. Pairs with
// w̃ = 0 are skipped. `delta_hat` and `rho_hat` should already be upper
// confidence bounds.
HeavyLightReport heavy_light_report(const WeightedGraph& w_orig, const Embedding& f_orig,
                                    const Embedding& f_proj, double eps, double q,
                                    double delta_hat, double rho_hat,
                                    double matching_weight_orig);

}  // namespace fmmc
