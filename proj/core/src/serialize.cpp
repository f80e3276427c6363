#include "fmmc/serialize.hpp"

#include <ostream>

#include "fmmc/io.hpp"

namespace fmmc {
namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json matrix_json(const DenseMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return rows;
}

}  // namespace

void to_json(nlohmann::json& j, const Edge& e) { j = nlohmann::json::array({e.u, e.v}); }

void to_json(nlohmann::json& j, const LpSolveReport& r) {
  j = {{"primal", r.primal_value},
       {"dual", r.dual_value},
       {"iterations", r.iterations},
       {"status", to_string(r.status)}};
}

void to_json(nlohmann::json& j, const HeavyLightReport& r) {
  j = {{"epsilon", r.epsilon},     {"q", r.q},
       {"heavy", r.heavy},         {"light_edges", r.light_edges},
       {"light_pairs", r.light_pairs}, {"diff_h", r.diff_h},
       {"cost_l1", r.cost_l1},     {"cost_l2", r.cost_l2},
       {"event_g", r.event_g}};
}

void to_json(nlohmann::json& j, const GoodnessEstimate& g) {
  j = {{"epsilon", g.epsilon},         {"q", g.q},
       {"trials", g.trials},           {"delta_hat", g.delta_hat},
       {"rho_hat", g.rho_hat},         {"delta_se", g.delta_se},
       {"rho_se", g.rho_se},           {"delta_upper", g.delta_upper()},
       {"rho_upper", g.rho_upper()},   {"confidence_z", kConfidenceZ}};
}

void to_json(nlohmann::json& j, const SpectralSummary& s) {
  j = {{"eigenvalues", s.eigenvalues}, {"slem", s.slem}, {"gap", s.gap}};
}

void to_json(nlohmann::json& j, const ConductanceCertificate& c) {
  j = {{"psi_star", c.psi_star.value()},
       {"psi_star_num", c.psi_star.num},
       {"psi_star_den", c.psi_star.den},
       {"witness", c.witness},
       {"boundary_size", c.boundary_size}};
}

void to_json(nlohmann::json& j, const BoundChainReport& r) {
  j = {{"psi_star", r.psi_star},
       {"gap_lower", r.gap_lower},
       {"delta", r.delta},
       {"n", r.n},
       {"cheeger_lhs", r.cheeger_lhs},
       {"tz_lhs", r.tz_lhs},
       {"thm_lhs", r.thm_lhs},
       {"cheeger_ratio", optional_json(r.cheeger_ratio)},
       {"tz_ratio", optional_json(r.tz_ratio)},
       {"thm_ratio", optional_json(r.thm_ratio)},
       {"cheeger_constant", optional_json(r.cheeger_constant)},
       {"tz_constant", optional_json(r.tz_constant)},
       {"thm_constant", optional_json(r.thm_constant)},
       {"upper_constant", r.upper_constant},
       {"upper_holds", r.upper_holds},
       {"log_convention", "max(ln x, 1)"}};
}

void to_json(nlohmann::json& j, const LambdaValue& v) {
  j = {{"value", v.value}, {"numerator", v.numerator}, {"denominator", v.denominator}, {"dim", v.dim}};
}

void to_json(nlohmann::json& j, const Theorem1Report& r) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"matching", optional_json(t.matching)},
                      {"fractional", t.fractional},
                      {"pair_total", t.pair_total},
                      {"event_g", t.event_g},
                      {"matching_ok", optional_json(t.matching_ok)},
                      {"fractional_ok", t.fractional_ok},
                      {"pair_total_ok", t.pair_total_ok},
                      {"sandwich_violations", t.sandwich_violations},
                      {"diff_h", t.heavy_light.diff_h},
                      {"cost_l1", t.heavy_light.cost_l1},
                      {"cost_l2", t.heavy_light.cost_l2}});
  }
  const auto& c = r.config;
  j = {{"config",
        {{"n", r.n},
         {"max_degree", r.max_degree},
         {"q", c.q},
         {"epsilon", c.eps},
         {"d", r.d},
         {"dim_multiplier", c.dim_multiplier},
         {"distribution", to_string(c.law)},
         {"trials", c.trials},
         {"seed", c.seed},
         {"goodness_trials", c.goodness_trials},
         {"forced_dim", optional_json(c.forced_dim)},
         {"identity_projection", c.identity_projection}}},
       {"goodness", r.goodness},
       {"event_g_note", "event G is evaluated with upper confidence bounds of the estimated delta and rho"},
       {"matching_orig", optional_json(r.matching_orig)},
       {"fractional_orig", r.fractional_orig},
       {"pair_total_orig", r.pair_total_orig},
       {"matching_success", optional_json(r.matching_success)},
       {"fractional_success", r.fractional_success},
       {"pair_total_success", r.pair_total_success},
       {"all_success", r.all_success},
       {"event_g_frequency", r.event_g_frequency},
       {"event_g_trials", r.event_g_trials},
       {"sandwich_violations", r.sandwich_violations},
       {"trials", trials}};
}

void to_json(nlohmann::json& j, const Theorem2Report& r) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"lambda", t.lambda},
                      {"ratio", t.ratio},
                      {"ratio_ok", t.ratio_ok},
                      {"pair_total", t.pair_total},
                      {"normalization_ok", t.normalization_ok},
                      {"event_g", t.event_g}});
  }
  const auto& c = r.config;
  j = {{"config",
        {{"n", r.n},
         {"num_edges", r.num_edges},
         {"max_degree", r.max_degree},
         {"epsilon", c.eps},
         {"d", r.d},
         {"dim_multiplier", c.dim_multiplier},
         {"distribution", to_string(c.law)},
         {"trials", c.trials},
         {"seed", c.seed},
         {"goodness_trials", c.goodness_trials},
         {"forced_dim", optional_json(c.forced_dim)},
         {"identity_projection", c.identity_projection}}},
       {"goodness", r.goodness},
       {"lambda_base", r.lambda_base},
       {"pair_total_base", r.pair_total_base},
       {"ratio_success", r.ratio_success},
       {"event_g_frequency", r.event_g_frequency},
       {"event_g_trials", r.event_g_trials},
       {"event_g_ratio_ok", r.event_g_ratio_ok},
       {"event_g_normalization_failures", r.event_g_normalization_failures},
       {"trials", trials}};
}

nlohmann::json fmmc_result_json(const FmmcResult& r) {
  return {{"status", to_string(r.status)},
          {"iterations", r.history.empty() ? 0 : r.history.back().iteration},
          {"summary", r.summary},
          {"matrix", matrix_json(r.matrix.entries())}};
}

void write_history_csv(std::ostream& out, const std::vector<FmmcHistoryEntry>& history) {
  out << "iter,mu,gap,step\n";
  for (const auto& h : history)
    out << h.iteration << ',' << format_double(h.mu) << ',' << format_double(h.gap) << ','
        << format_double(h.step) << '\n';
}

}  // namespace fmmc
