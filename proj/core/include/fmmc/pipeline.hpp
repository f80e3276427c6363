#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fmmc/dimred.hpp"
#include "fmmc/graph.hpp"
#include "fmmc/spectral.hpp"

namespace fmmc {

// Σ g(u) / Σ ||f(u)||² at a fixed centred embedding, with g the optimal
// fractional cover for the weights ||f(u)-f(v)||² on E.
struct LambdaValue {
  double value = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  int dim = 0;
};

// Centres f before evaluating. Throws InvalidInput when all points coincide
// and NumericalFailure when the cover LP cannot be certified.
LambdaValue lambda_eval(const Graph& g, const Embedding& f);

// d = ceil(multiplier * factor * max(log(argument), 1) / eps²).
int reduced_dimension(double multiplier, double factor, double argument, double eps);

struct Theorem1Config {
  double q = 2.0;
  double eps = 0.09;
  double dim_multiplier = 1.0;
  ProjectorLaw law = ProjectorLaw::kGaussian;
  int trials = 200;
  std::uint64_t seed = 1;
  int goodness_trials = 2000;
  // Test hooks: a fixed target dimension, or the identity map in place of π.
  std::optional<int> forced_dim;
  bool identity_projection = false;
};

struct Theorem1Trial {
  std::optional<double> matching;  // w_π(M^π); empty when over the exact cap
  double fractional = 0.0;         // w_π(M^π_frac)
  double pair_total = 0.0;         // ordered-pair sum of w̃_π
  bool event_g = false;
  std::optional<bool> matching_ok;
  bool fractional_ok = false;
  bool pair_total_ok = false;
  // Deterministic consequences of event G; checked only when it holds.
  int sandwich_violations = 0;
  HeavyLightReport heavy_light;
};

struct Theorem1Report {
  int n = 0;
  int max_degree = 0;
  int d = 0;
  Theorem1Config config;
  GoodnessEstimate goodness;
  std::optional<double> matching_orig;  // w(M)
  double fractional_orig = 0.0;         // w(M_frac)
  double pair_total_orig = 0.0;         // ordered-pair sum of w̃
  std::vector<Theorem1Trial> trials;
  std::optional<double> matching_success;
  double fractional_success = 0.0;
  double pair_total_success = 0.0;
  // Trials where every evaluated conclusion held.
  double all_success = 0.0;
  double event_g_frequency = 0.0;
  int event_g_trials = 0;
  int sandwich_violations = 0;
};

Theorem1Report run_theorem1_experiment(const Graph& g, const Embedding& f,
                                       const Theorem1Config& config);

struct MultiplierSweep {
  std::optional<double> multiplier;  // smallest candidate meeting the target
  std::vector<Theorem1Report> runs;  // one per candidate tried, in order
};

// Tries candidates in increasing order and stops at the first whose
// all-conclusions success frequency reaches `target`.
MultiplierSweep sweep_theorem1_multiplier(const Graph& g, const Embedding& f,
                                          Theorem1Config config,
                                          const std::vector<double>& candidates,
                                          double target = 0.95);

struct Theorem2Config {
  double eps = 0.01;
  double dim_multiplier = 1.0;
  ProjectorLaw law = ProjectorLaw::kGaussian;
  int trials = 100;
  std::uint64_t seed = 1;
  int goodness_trials = 2000;
  std::optional<int> forced_dim;
  bool identity_projection = false;
};

struct Theorem2Trial {
  LambdaValue lambda;
  double ratio = 0.0;  // λ(πF)/λ(F)
  bool ratio_ok = false;
  double pair_total = 0.0;  // S'_f, ordered pairs
  bool normalization_ok = false;
  bool event_g = false;
};

struct Theorem2Report {
  int n = 0;
  int num_edges = 0;
  int max_degree = 0;
  int d = 0;
  Theorem2Config config;
  GoodnessEstimate goodness;
  LambdaValue lambda_base;
  double pair_total_base = 0.0;  // S_F, ordered pairs
  std::vector<Theorem2Trial> trials;
  double ratio_success = 0.0;
  double event_g_frequency = 0.0;
  int event_g_trials = 0;
  int event_g_ratio_ok = 0;
  // Event-G trials violating S'_f >= e^{-2ε} S_F.
  int event_g_normalization_failures = 0;
};

Theorem2Report run_theorem2_experiment(const Graph& g, const Embedding& base,
                                       const Theorem2Config& config);

struct PipelineConfig {
  Theorem2Config theorem2;
  FmmcOptions fmmc;
  // Embedding used for the λ experiment; basis when empty.
  std::optional<Embedding> embedding;
  std::string embedding_label = "basis";
};

// Runs conductance, the FMMC solve, the bound-chain report and the λ
// experiment; each component records its own status, so a failure in one
// leaves the rest intact. The FMMC iteration history is copied to `history`
// when given.
nlohmann::json run_full_pipeline(const Graph& g, const PipelineConfig& config,
                                 std::vector<FmmcHistoryEntry>* history = nullptr);

}  // namespace fmmc
