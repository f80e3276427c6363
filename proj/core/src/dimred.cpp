#include "fmmc/dimred.hpp"

#include <cmath>
#include <random>
#include <string>

#include "fmmc/errors.hpp"
#include "fmmc/random.hpp"

namespace fmmc {

std::string_view to_string(ProjectorLaw law) {
  return law == ProjectorLaw::kGaussian ? "gaussian" : "rademacher";
}

ProjectorLaw parse_projector_law(std::string_view name) {
  if (name == "gaussian") return ProjectorLaw::kGaussian;
  if (name == "rademacher") return ProjectorLaw::kRademacher;
  throw InvalidInput("unknown projector distribution '" + std::string(name) + "'");
}

Projector sample_projector(int n, int d, ProjectorLaw law, std::uint64_t seed) {
  if (n < 1 || d < 1) throw InvalidInput("sample_projector: need n >= 1 and d >= 1");
  Projector p{DenseMatrix(d, n), law, seed};
  std::mt19937_64 gen(seed);
  const double sd = 1.0 / std::sqrt(static_cast<double>(d));
  auto& cells = p.entries.data();
  if (law == ProjectorLaw::kGaussian) {
    std::normal_distribution<double> normal(0.0, sd);
    for (double& x : cells) x = normal(gen);
  } else {
    std::uint64_t bits = 0;
    int left = 0;
    for (double& x : cells) {
      if (left == 0) {
        bits = gen();
        left = 64;
      }
      x = (bits & 1U) ? sd : -sd;
      bits >>= 1;
      --left;
    }
  }
  return p;
}

Embedding apply_projector(const Projector& p, const Embedding& f) {
  if (p.cols() != f.dim())
    throw InvalidInput("apply_projector: projector has " + std::to_string(p.cols()) +
                       " columns, embedding dimension is " + std::to_string(f.dim()));
  const int d = p.rows();
  std::vector<double> out(static_cast<std::size_t>(f.num_points()) * d, 0.0);
  for (int v = 0; v < f.num_points(); ++v) {
    auto x = f.point(v);
    double* y = out.data() + static_cast<std::size_t>(v) * d;
    for (int r = 0; r < d; ++r) {
      auto row = p.entries.row(r);
      double s = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) s += row[k] * x[k];
      y[r] = s;
    }
  }
  return Embedding(f.num_points(), d, std::move(out));
}

double GoodnessEstimate::delta_upper() const {
  if (delta_hat == 0.0) return std::min(1.0, 3.0 / trials);
  return std::min(1.0, delta_hat + kConfidenceZ * delta_se);
}

double GoodnessEstimate::rho_upper() const { return rho_hat + kConfidenceZ * rho_se; }

GoodnessEstimate estimate_goodness(ProjectorLaw law, int n, int d, double eps, double q,
                                   int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidInput("estimate_goodness: need at least one trial");
  if (n < 1 || d < 1) throw InvalidInput("estimate_goodness: need n >= 1 and d >= 1");
  if (!(eps > 0.0)) throw InvalidInput("estimate_goodness: need eps > 0");
  if (!(q >= 1.0)) throw InvalidInput("estimate_goodness: need q >= 1");

  const double upper = std::exp(eps);
  const double lower = std::exp(-eps);
  const double excess_floor = std::exp(eps * q);
  const int cols = law == ProjectorLaw::kGaussian ? 1 : n;

  long failures = 0;
  double rho_sum = 0.0;
  double rho_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, 0, static_cast<std::uint64_t>(t));
    std::vector<double> x(cols, 0.0);
    if (law == ProjectorLaw::kGaussian) {
      x[0] = 1.0;
    } else {
      std::mt19937_64 gen(derive_seed(seed, 1, static_cast<std::uint64_t>(t)));
      std::normal_distribution<double> normal(0.0, 1.0);
      double norm = 0.0;
      for (double& xi : x) {
        xi = normal(gen);
        norm += xi * xi;
      }
      norm = std::sqrt(norm);
      for (double& xi : x) xi /= norm;
    }
    const Projector p = sample_projector(cols, d, law, trial_seed);
    double sq = 0.0;
    for (int r = 0; r < d; ++r) {
      auto row = p.entries.row(r);
      double s = 0.0;
      for (int k = 0; k < cols; ++k) s += row[k] * x[k];
      sq += s * s;
    }
    const double ratio = std::sqrt(sq);
    if (ratio > upper || ratio < lower) ++failures;
    double excess = 0.0;
    if (ratio >= upper) excess = std::pow(ratio, q) - excess_floor;
    rho_sum += excess;
    rho_sq += excess * excess;
  }

  GoodnessEstimate est;
  est.epsilon = eps;
  est.q = q;
  est.trials = trials;
  est.delta_hat = static_cast<double>(failures) / trials;
  est.delta_se = std::sqrt(est.delta_hat * (1.0 - est.delta_hat) / trials);
  est.rho_hat = rho_sum / trials;
  const double var = trials > 1 ? std::max(0.0, (rho_sq - trials * est.rho_hat * est.rho_hat) /
                                                    (trials - 1))
                                : 0.0;
  est.rho_se = std::sqrt(var / trials);
  return est;
}

HeavyLightReport heavy_light_report(const WeightedGraph& w_orig, const Embedding& f_orig,
                                    const Embedding& f_proj, double eps, double q,
                                    double delta_hat, double rho_hat,
                                    double matching_weight_orig) {
  const Graph& g = w_orig.graph;
  const int n = g.num_vertices();
  if (f_orig.num_points() != n || f_proj.num_points() != n)
    throw InvalidInput("heavy_light_report: embeddings and graph disagree on the vertex count");
  if (!(eps > 0.0 && eps < 0.1)) throw InvalidInput("heavy_light_report: need eps in (0, 1/10)");
  if (!(q >= 1.0)) throw InvalidInput("heavy_light_report: need q >= 1");
  if (delta_hat < 0.0 || rho_hat < 0.0)
    throw InvalidInput("heavy_light_report: delta and rho must be nonnegative");

  HeavyLightReport r;
  r.epsilon = eps;
  r.q = q;
  const double up = std::exp(eps * q);
  const double down = std::exp(-eps * q);

  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edges()[k];
    const double w = w_orig.weights[k];
    if (w == 0.0) continue;
    const double wp = distance_pow(f_proj.point(e.u), f_proj.point(e.v), q);
    if (wp >= up * w) {
      r.heavy.push_back(e);
      r.diff_h += wp - up * w;
    } else if (wp <= down * w) {
      r.light_edges.push_back(e);
      r.cost_l1 += w;
    }
  }

  double pair_total = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double wt = distance_pow(f_orig.point(u), f_orig.point(v), q);
      pair_total += wt;
      if (wt == 0.0) continue;
      const double wp = distance_pow(f_proj.point(u), f_proj.point(v), q);
      if (wp <= down * wt) {
        r.light_pairs.push_back({u, v});
        r.cost_l2 += wt;
      }
    }
  }

  const double degree_factor = g.max_degree() + 1.0;
  r.thresholds.diff_h = std::sqrt(rho_hat) * degree_factor * matching_weight_orig;
  r.thresholds.cost_l1 = std::sqrt(delta_hat) * degree_factor * matching_weight_orig;
  r.thresholds.cost_l2 = std::sqrt(delta_hat) * pair_total;
  r.event_g = r.diff_h <= r.thresholds.diff_h && r.cost_l1 <= r.thresholds.cost_l1 &&
              r.cost_l2 <= r.thresholds.cost_l2;
  return r;
}

}  // namespace fmmc
