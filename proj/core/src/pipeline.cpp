#include "fmmc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fmmc/conductance.hpp"
#include "fmmc/errors.hpp"
#include "fmmc/matching.hpp"
#include "fmmc/parallel.hpp"
#include "fmmc/random.hpp"
#include "fmmc/serialize.hpp"

namespace fmmc {
namespace {

constexpr std::uint64_t kGoodnessStream = 100;
constexpr std::uint64_t kTrialStream = 1;
constexpr double kSandwichTol = 1e-9;

void check_eps(double eps, const char* who) {
  if (!(eps > 0.0 && eps < 0.1)) throw InvalidInput(std::string(who) + ": need eps in (0, 1/10)");
}

bool all_points_equal(const Embedding& f) {
  for (int v = 1; v < f.num_points(); ++v)
    if (!std::equal(f.point(v).begin(), f.point(v).end(), f.point(0).begin())) return false;
  return true;
}

double certified_fractional(const WeightedGraph& w) {
  const auto r = fractional_matching(w);
  if (r.report.status != LpSolveStatus::kOptimal)
    throw NumericalFailure("fractional matching LP could not be certified");
  return r.matching.total_weight;
}

bool within(double value, double ref, double factor) {
  return value >= ref / factor && value <= ref * factor;
}

// w(M) when the exact matcher applies; otherwise the largest cheap lower
// bound, which only makes the event-G thresholds stricter.
double matching_weight_for_thresholds(const std::optional<double>& exact, const WeightedGraph& w,
                                      double fractional) {
  if (exact) return *exact;
  return std::max(w.total_edge_weight() / (w.graph.max_degree() + 1.0), fractional / 2.0);
}

Embedding project_trial(const Embedding& f, int d, ProjectorLaw law, std::uint64_t seed,
                        bool identity) {
  if (identity) return f;
  return apply_projector(sample_projector(f.dim(), d, law, seed), f);
}

}  // namespace

LambdaValue lambda_eval(const Graph& g, const Embedding& f) {
  if (f.num_points() != g.num_vertices())
    throw InvalidInput("lambda_eval: embedding and graph disagree on the vertex count");
  if (f.num_points() == 0 || all_points_equal(f))
    throw InvalidInput("lambda_eval: degenerate embedding (all points identical)");
  const Embedding centred = center_embedding(f);

  LambdaValue out;
  out.dim = f.dim();
  for (double x : centred.coords()) out.denominator += x * x;
  if (!(out.denominator > 0.0))
    throw InvalidInput("lambda_eval: degenerate embedding (zero spread)");

  const auto cover = min_vertex_cover_lp(weights_from_embedding(g, centred, 2.0));
  if (cover.report.status != LpSolveStatus::kOptimal)
    throw NumericalFailure("lambda_eval: cover LP could not be certified");
  out.numerator = cover.cover.total;
  out.value = out.numerator / out.denominator;
  return out;
}

int reduced_dimension(double multiplier, double factor, double argument, double eps) {
  if (!(multiplier > 0.0) || !(eps > 0.0)) throw InvalidInput("reduced_dimension: bad parameters");
  const double d = std::ceil(multiplier * factor * log_floor(argument) / (eps * eps));
  return std::max(1, static_cast<int>(d));
}

Theorem1Report run_theorem1_experiment(const Graph& g, const Embedding& f,
                                       const Theorem1Config& config) {
  check_eps(config.eps, "run_theorem1_experiment");
  if (config.trials < 1) throw InvalidInput("run_theorem1_experiment: need trials >= 1");
  if (f.num_points() != g.num_vertices())
    throw InvalidInput("run_theorem1_experiment: embedding and graph sizes differ");

  Theorem1Report rep;
  rep.config = config;
  rep.n = g.num_vertices();
  rep.max_degree = g.max_degree();

  const double q = config.q;
  const double eps = config.eps;
  const WeightedGraph w = weights_from_embedding(g, f, q);
  const bool exact = exact_matching_within_cap(g);
  if (exact) rep.matching_orig = max_matching_exact(w).value;
  rep.fractional_orig = certified_fractional(w);
  rep.pair_total_orig = total_pair_weight(f, q);
  const double wm = matching_weight_for_thresholds(rep.matching_orig, w, rep.fractional_orig);

  if (config.identity_projection) {
    rep.d = f.dim();
  } else if (config.forced_dim) {
    rep.d = *config.forced_dim;
  } else {
    rep.d = reduced_dimension(config.dim_multiplier, q, rep.max_degree / (eps * q), eps);
  }
  rep.goodness = estimate_goodness(config.law, f.dim(), rep.d, eps, q, config.goodness_trials,
                                   derive_seed(config.seed, kGoodnessStream, 0));
  const double delta_u = rep.goodness.delta_upper();
  const double rho_u = rep.goodness.rho_upper();

  const double up = std::exp(eps * q);
  const double down = std::exp(-eps * q);
  const double degree_factor = rep.max_degree + 1.0;

  rep.trials.resize(config.trials);
  parallel_for(rep.trials.size(), [&](std::size_t t) {
    Theorem1Trial& tr = rep.trials[t];
    const Embedding fp = project_trial(f, rep.d, config.law,
                                       derive_seed(config.seed, kTrialStream, t),
                                       config.identity_projection);
    const WeightedGraph wp = weights_from_embedding(g, fp, q);
    if (exact) tr.matching = max_matching_exact(wp).value;
    tr.fractional = certified_fractional(wp);
    tr.pair_total = total_pair_weight(fp, q);
    tr.heavy_light = heavy_light_report(w, f, fp, eps, q, delta_u, rho_u, wm);
    tr.event_g = tr.heavy_light.event_g;

    if (tr.matching) tr.matching_ok = within(*tr.matching, *rep.matching_orig, up);
    tr.fractional_ok = within(tr.fractional, rep.fractional_orig, up);
    tr.pair_total_ok = within(tr.pair_total, rep.pair_total_orig, up);

    if (tr.event_g) {
      const auto& th = tr.heavy_light.thresholds;
      auto violated = [&](double lhs, double rhs, double scale) {
        return lhs > rhs + kSandwichTol * (1.0 + scale);
      };
      const double frac = rep.fractional_orig;
      // Upper: w_π(M') <= e^{εq} w(M') + Diff(H) for every fractional M'.
      if (violated(tr.fractional, up * frac + th.diff_h, frac)) ++tr.sandwich_violations;
      // Lower: w_π(M_frac) >= e^{-εq} w(M_frac) - Cost(L1), in both forms.
      if (violated(down * frac - th.cost_l1, tr.fractional, frac)) ++tr.sandwich_violations;
      if (violated((down - std::sqrt(delta_u) * degree_factor) * frac, tr.fractional, frac))
        ++tr.sandwich_violations;
      if (tr.matching) {
        const double m = *rep.matching_orig;
        if (violated(*tr.matching, (up + std::sqrt(rho_u) * degree_factor) * m, m))
          ++tr.sandwich_violations;
        if (violated((down - std::sqrt(delta_u) * degree_factor) * m, *tr.matching, m))
          ++tr.sandwich_violations;
      }
      const double s = rep.pair_total_orig;
      if (violated((down - std::sqrt(delta_u)) * s, tr.pair_total, s)) ++tr.sandwich_violations;
    }
  });

  int matching_hits = 0;
  int fractional_hits = 0;
  int pair_hits = 0;
  int all_hits = 0;
  for (const auto& tr : rep.trials) {
    matching_hits += tr.matching_ok.value_or(false);
    fractional_hits += tr.fractional_ok;
    pair_hits += tr.pair_total_ok;
    all_hits += tr.matching_ok.value_or(true) && tr.fractional_ok && tr.pair_total_ok;
    rep.event_g_trials += tr.event_g;
    rep.sandwich_violations += tr.sandwich_violations;
  }
  const double count = config.trials;
  if (exact) rep.matching_success = matching_hits / count;
  rep.fractional_success = fractional_hits / count;
  rep.pair_total_success = pair_hits / count;
  rep.all_success = all_hits / count;
  rep.event_g_frequency = rep.event_g_trials / count;
  return rep;
}

MultiplierSweep sweep_theorem1_multiplier(const Graph& g, const Embedding& f,
                                          Theorem1Config config,
                                          const std::vector<double>& candidates, double target) {
  std::vector<double> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  MultiplierSweep sweep;
  for (double c : sorted) {
    config.dim_multiplier = c;
    sweep.runs.push_back(run_theorem1_experiment(g, f, config));
    if (sweep.runs.back().all_success >= target) {
      sweep.multiplier = c;
      break;
    }
  }
  return sweep;
}

Theorem2Report run_theorem2_experiment(const Graph& g, const Embedding& base,
                                       const Theorem2Config& config) {
  check_eps(config.eps, "run_theorem2_experiment");
  if (config.trials < 1) throw InvalidInput("run_theorem2_experiment: need trials >= 1");
  if (base.num_points() != g.num_vertices())
    throw InvalidInput("run_theorem2_experiment: embedding and graph sizes differ");

  Theorem2Report rep;
  rep.config = config;
  rep.n = g.num_vertices();
  rep.num_edges = static_cast<int>(g.num_edges());
  rep.max_degree = g.max_degree();

  const double eps = config.eps;
  const Embedding f = center_embedding(base);
  rep.lambda_base = lambda_eval(g, f);
  rep.pair_total_base = total_pair_weight(f, 2.0);
  const WeightedGraph w = weights_from_embedding(g, f, 2.0);
  std::optional<double> exact_m;
  if (exact_matching_within_cap(g)) exact_m = max_matching_exact(w).value;
  const double wm = matching_weight_for_thresholds(exact_m, w, certified_fractional(w));

  if (config.identity_projection) {
    rep.d = f.dim();
  } else if (config.forced_dim) {
    rep.d = *config.forced_dim;
  } else {
    rep.d = reduced_dimension(config.dim_multiplier, 2.0, rep.max_degree / (2.0 * eps), eps);
  }
  rep.goodness = estimate_goodness(config.law, f.dim(), rep.d, eps, 2.0, config.goodness_trials,
                                   derive_seed(config.seed, kGoodnessStream, 0));
  const double delta_u = rep.goodness.delta_upper();
  const double rho_u = rep.goodness.rho_upper();
  const double shrink = std::exp(-2.0 * eps);

  rep.trials.resize(config.trials);
  parallel_for(rep.trials.size(), [&](std::size_t t) {
    Theorem2Trial& tr = rep.trials[t];
    const Embedding fp = project_trial(f, rep.d, config.law,
                                       derive_seed(config.seed, kTrialStream, t),
                                       config.identity_projection);
    tr.lambda = lambda_eval(g, fp);
    const double base_value = rep.lambda_base.value;
    tr.ratio = base_value > 0.0 ? tr.lambda.value / base_value : (tr.lambda.value == 0.0 ? 1.0 : INFINITY);
    tr.ratio_ok = tr.lambda.value <= 2.0 * base_value;
    tr.pair_total = total_pair_weight(fp, 2.0);
    tr.normalization_ok = tr.pair_total >= shrink * rep.pair_total_base;
    tr.event_g = heavy_light_report(w, f, fp, eps, 2.0, delta_u, rho_u, wm).event_g;
  });

  int ratio_hits = 0;
  for (const auto& tr : rep.trials) {
    ratio_hits += tr.ratio_ok;
    if (tr.event_g) {
      ++rep.event_g_trials;
      rep.event_g_ratio_ok += tr.ratio_ok;
      rep.event_g_normalization_failures += !tr.normalization_ok;
    }
  }
  rep.ratio_success = static_cast<double>(ratio_hits) / config.trials;
  rep.event_g_frequency = static_cast<double>(rep.event_g_trials) / config.trials;
  return rep;
}

namespace {

template <typename Fn>
nlohmann::json guarded(Fn&& fn) {
  try {
    nlohmann::json j = fn();
    j["status"] = "ok";
    return j;
  } catch (const CapExceeded& e) {
    return {{"status", "cap_exceeded"}, {"message", e.what()}};
  } catch (const NumericalFailure& e) {
    return {{"status", "numerical_failure"}, {"message", e.what()}};
  } catch (const InvalidInput& e) {
    return {{"status", "rejected"}, {"message", e.what()}};
  }
}

}  // namespace

nlohmann::json run_full_pipeline(const Graph& g, const PipelineConfig& config,
                                 std::vector<FmmcHistoryEntry>* history) {
  nlohmann::json out;
  out["graph"] = {{"n", g.num_vertices()},
                  {"num_edges", g.num_edges()},
                  {"max_degree", g.max_degree()},
                  {"connected", g.is_connected()}};
  out["seeds"] = {{"theorem2", config.theorem2.seed}, {"fmmc", config.fmmc.seed}};

  std::optional<double> psi;
  out["conductance"] = guarded([&] {
    const auto cert = vertex_conductance_exact(g);
    psi = cert.psi_star.value();
    return nlohmann::json(cert);
  });

  std::optional<MarkovMatrix> chain;
  out["fmmc"] = guarded([&] {
    const FmmcResult r = fmmc_solve(g, config.fmmc);
    chain = r.matrix;
    if (history) *history = r.history;
    return fmmc_result_json(r);
  });
  // A disconnected graph has γ(P) = 0 for every P; the lazy walk stands in.
  if (!chain && g.num_vertices() > 0 && !g.is_connected()) chain = max_degree_lazy_walk(g);

  if (chain && psi) {
    out["bound_chain"] = guarded([&] { return nlohmann::json(bound_chain_report(g, *chain, psi)); });
  } else {
    out["bound_chain"] = {{"status", "skipped"},
                          {"message", "needs both a conductance value and a chain"}};
  }

  out["theorem2"] = guarded([&] {
    const Embedding f = config.embedding ? *config.embedding : basis_embedding(g.num_vertices());
    nlohmann::json j = run_theorem2_experiment(g, f, config.theorem2);
    j["embedding"] = config.embedding_label;
    return j;
  });
  return out;
}

}  // namespace fmmc
