#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "fmmc/dimred.hpp"
#include "fmmc/errors.hpp"
#include "fmmc/graph.hpp"
#include "fmmc/matching.hpp"
#include "fmmc/random.hpp"

namespace {

using fmmc::Embedding;
using fmmc::Graph;
using fmmc::GraphFamily;
using fmmc::ProjectorLaw;

// P(chi2_d / d outside [e^{-2 eps}, e^{2 eps}]): the exact two-sided failure
// probability of a Gaussian projector on a fixed unit vector.
double gaussian_delta(int d, double eps) {
  boost::math::chi_squared chi(d);
  return boost::math::cdf(chi, d * std::exp(-2 * eps)) +
         boost::math::cdf(boost::math::complement(chi, d * std::exp(2 * eps)));
}

struct Moments {
  double mean = 0.0;
  double se = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  for (double x : xs) m.mean += x;
  m.mean /= xs.size();
  double var = 0.0;
  for (double x : xs) var += (x - m.mean) * (x - m.mean);
  m.se = std::sqrt(var / (xs.size() - 1) / xs.size());
  return m;
}

TEST(Projector, Deterministic) {
  for (auto law : {ProjectorLaw::kGaussian, ProjectorLaw::kRademacher}) {
    const auto a = fmmc::sample_projector(9, 5, law, 1234);
    const auto b = fmmc::sample_projector(9, 5, law, 1234);
    EXPECT_EQ(a.entries, b.entries);
    EXPECT_NE(a.entries, fmmc::sample_projector(9, 5, law, 1235).entries);
  }
}

TEST(Projector, RademacherSupport) {
  const auto p = fmmc::sample_projector(40, 7, ProjectorLaw::kRademacher, 5);
  const double s = 1.0 / std::sqrt(7.0);
  int plus = 0;
  for (double x : p.entries.data()) {
    EXPECT_TRUE(x == s || x == -s);
    plus += x > 0;
  }
  EXPECT_GT(plus, 100);
  EXPECT_LT(plus, 180);
}

TEST(Projector, GaussianEntryMean) {
  const auto p = fmmc::sample_projector(16, 64, ProjectorLaw::kGaussian, 77);
  double mean = 0.0, var = 0.0;
  for (double x : p.entries.data()) mean += x;
  mean /= 1024;
  for (double x : p.entries.data()) var += (x - mean) * (x - mean);
  var /= 1023;
  EXPECT_LE(std::abs(mean), 4.0 / std::sqrt(1024.0 * 64.0));
  EXPECT_NEAR(var, 1.0 / 64, 0.25 / 64);
}

TEST(Projector, Errors) {
  EXPECT_THROW(fmmc::sample_projector(0, 3, ProjectorLaw::kGaussian, 1), fmmc::InvalidInput);
  EXPECT_THROW(fmmc::sample_projector(3, 0, ProjectorLaw::kGaussian, 1), fmmc::InvalidInput);
  EXPECT_THROW(fmmc::parse_projector_law("cauchy"), fmmc::InvalidInput);
  const auto p = fmmc::sample_projector(3, 2, ProjectorLaw::kGaussian, 1);
  EXPECT_THROW(fmmc::apply_projector(p, Embedding(2, 4, std::vector<double>(8, 0.0))), fmmc::InvalidInput);
}

TEST(ApplyProjector, ZeroAndHomogeneity) {
  const auto p = fmmc::sample_projector(4, 6, ProjectorLaw::kGaussian, 3);
  const auto zero = fmmc::apply_projector(p, Embedding(3, 4, std::vector<double>(12, 0.0)));
  for (double x : zero.coords()) EXPECT_EQ(x, 0.0);

  const auto f = fmmc::gaussian_embedding(3, 4, 8);
  std::vector<double> doubled = f.coords();
  for (double& x : doubled) x *= 2;
  const auto a = fmmc::apply_projector(p, f);
  const auto b = fmmc::apply_projector(p, Embedding(3, 4, doubled));
  EXPECT_EQ(b.dim(), 6);
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    EXPECT_NEAR(b.coords()[i], 2 * a.coords()[i], 1e-12 * std::abs(2 * a.coords()[i]) + 1e-300);
}

TEST(ApplyProjector, Linearity) {
  const auto p = fmmc::sample_projector(5, 4, ProjectorLaw::kRademacher, 10);
  const auto f = fmmc::gaussian_embedding(2, 5, 2);
  std::vector<double> sum(5);
  for (int k = 0; k < 5; ++k) sum[k] = f.point(0)[k] + f.point(1)[k];
  const auto pf = fmmc::apply_projector(p, f);
  const auto ps = fmmc::apply_projector(p, Embedding(1, 5, sum));
  for (int r = 0; r < 4; ++r) EXPECT_NEAR(ps.point(0)[r], pf.point(0)[r] + pf.point(1)[r], 1e-12);
}

TEST(ApplyProjector, NormPreservedInExpectation) {
  const int d = 256;
  const int reps = 10000;
  const std::vector<double> x = {0.3, -1.2, 0.5, 2.0};
  const double norm2 = 0.09 + 1.44 + 0.25 + 4.0;
  double mean = 0.0;
  for (int t = 0; t < reps; ++t) {
    const auto p = fmmc::sample_projector(4, d, ProjectorLaw::kGaussian, fmmc::derive_seed(5, 0, t));
    const auto y = fmmc::apply_projector(p, Embedding(1, 4, x));
    double s = 0.0;
    for (double v : y.coords()) s += v * v;
    mean += s / norm2;
  }
  mean /= reps;
  EXPECT_NEAR(mean, 1.0, 5.0 * std::sqrt(2.0 / d) / 100.0);
}

TEST(Goodness, GaussianTailBand) {
  const int d = 2000;
  const double eps = 0.1;
  const auto est = fmmc::estimate_goodness(ProjectorLaw::kGaussian, 16, d, eps, 2.0, 10000, 3);
  const double exact = gaussian_delta(d, eps);
  const double se = std::sqrt(exact * (1 - exact) / 10000);
  EXPECT_NEAR(est.delta_hat, exact, 5 * se + 1e-4);
  // Band 2 exp(-c d eps^2) for c in [1/8, 1/2].
  EXPECT_LE(est.delta_hat, 2 * std::exp(-d * eps * eps / 8));
  EXPECT_GE(est.delta_upper(), 2 * std::exp(-d * eps * eps / 2));
  EXPECT_GE(est.rho_hat, 0.0);
}

TEST(Goodness, WideEpsilonNeverFails) {
  const auto est = fmmc::estimate_goodness(ProjectorLaw::kGaussian, 8, 50, 1.0, 2.0, 2000, 4);
  EXPECT_LE(est.delta_hat, 1e-3);
  EXPECT_DOUBLE_EQ(est.delta_upper(), std::max(est.delta_hat + 3 * est.delta_se, 3.0 / 2000));
}

TEST(Goodness, OneDimensionFailsOften) {
  const double eps = 0.05;
  const auto normal_cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
  const double exact = 1.0 - 2.0 * (normal_cdf(std::exp(eps)) - normal_cdf(std::exp(-eps)));
  EXPECT_NEAR(exact, gaussian_delta(1, eps), 1e-10);
  EXPECT_GT(exact, 0.1);
  const auto est = fmmc::estimate_goodness(ProjectorLaw::kGaussian, 4, 1, eps, 2.0, 4000, 6);
  EXPECT_GT(est.delta_hat, 0.1);
  EXPECT_NEAR(est.delta_hat, exact, 5 * std::sqrt(exact * (1 - exact) / 4000));
}

TEST(Goodness, RademacherComparableToGaussian) {
  const int d = 200;
  const double eps = 0.09;
  const auto est = fmmc::estimate_goodness(ProjectorLaw::kRademacher, 12, d, eps, 2.0, 4000, 9);
  const double exact = gaussian_delta(d, eps);
  EXPECT_LE(est.delta_hat, 1.5 * exact + 5 * std::sqrt(exact / 4000));
  EXPECT_GE(est.delta_hat, 0.5 * exact - 5 * std::sqrt(exact / 4000));
}

TEST(Goodness, Deterministic) {
  const auto a = fmmc::estimate_goodness(ProjectorLaw::kRademacher, 6, 30, 0.09, 2.0, 500, 42);
  const auto b = fmmc::estimate_goodness(ProjectorLaw::kRademacher, 6, 30, 0.09, 2.0, 500, 42);
  EXPECT_EQ(a.delta_hat, b.delta_hat);
  EXPECT_EQ(a.rho_hat, b.rho_hat);
}

TEST(HeavyLight, IdentityProjection) {
  const auto s = fmmc::gen_star_union(3, 2);
  const auto w = fmmc::weights_from_embedding(s.graph, s.embedding, 2.0);
  const auto r = fmmc::heavy_light_report(w, s.embedding, s.embedding, 0.09, 2.0, 0.01, 0.01, 4.0);
  EXPECT_TRUE(r.heavy.empty());
  EXPECT_TRUE(r.light_edges.empty());
  EXPECT_TRUE(r.light_pairs.empty());
  EXPECT_EQ(r.diff_h, 0.0);
  EXPECT_EQ(r.cost_l1, 0.0);
  EXPECT_EQ(r.cost_l2, 0.0);
  EXPECT_TRUE(r.event_g);
}

TEST(HeavyLight, SingleHeavyEdge) {
  const double eps = 0.05, q = 2.0;
  const Graph g(2, {{0, 1}});
  const Embedding f(2, 1, {0.0, 1.0});
  const Embedding fp(2, 1, {0.0, std::exp(eps * q)});  // w_π = e^{2εq}
  const auto w = fmmc::weights_from_embedding(g, f, q);
  const auto r = fmmc::heavy_light_report(w, f, fp, eps, q, 0.0, 0.0, 1.0);
  ASSERT_EQ(r.heavy.size(), 1u);
  EXPECT_NEAR(r.diff_h, std::exp(2 * eps * q) - std::exp(eps * q), 1e-14);
  EXPECT_FALSE(r.event_g);
  const auto loose = fmmc::heavy_light_report(w, f, fp, eps, q, 0.0, 1.0, 1.0);
  EXPECT_TRUE(loose.event_g);
}

TEST(HeavyLight, ZeroWeightPairsSkipped) {
  const Graph g(3, {{0, 1}, {1, 2}});
  const Embedding f(3, 1, {0.0, 0.0, 1.0});
  const Embedding fp(3, 1, {0.0, 0.0, 0.5});
  const auto w = fmmc::weights_from_embedding(g, f, 2.0);
  const auto r = fmmc::heavy_light_report(w, f, fp, 0.05, 2.0, 0.1, 0.1, 1.0);
  EXPECT_EQ(r.light_edges, (std::vector<fmmc::Edge>{{1, 2}}));
  EXPECT_EQ(r.light_pairs, (std::vector<fmmc::Edge>{{0, 2}, {1, 2}}));
}

TEST(HeavyLight, Errors) {
  const Graph g(2, {{0, 1}});
  const Embedding f(2, 1, {0.0, 1.0});
  const auto w = fmmc::weights_from_embedding(g, f, 2.0);
  EXPECT_THROW(fmmc::heavy_light_report(w, f, Embedding(3, 1, {0, 1, 2}), 0.05, 2, 0, 0, 1), fmmc::InvalidInput);
  EXPECT_THROW(fmmc::heavy_light_report(w, f, f, 0.2, 2, 0, 0, 1), fmmc::InvalidInput);
}

TEST(HeavyLight, PartitionAndRecomputation) {
  const Graph g = fmmc::gen_family(GraphFamily::kHypercube, 3);
  const auto f = fmmc::gaussian_embedding(8, 8, 11);
  const auto w = fmmc::weights_from_embedding(g, f, 2.0);
  const double eps = 0.09, q = 2.0;
  for (int t = 0; t < 20; ++t) {
    const auto p = fmmc::sample_projector(8, 12, ProjectorLaw::kGaussian, fmmc::derive_seed(1, 2, t));
    const auto fp = fmmc::apply_projector(p, f);
    const auto r = fmmc::heavy_light_report(w, f, fp, eps, q, 0.05, 0.05, 1.0);
    const std::set<fmmc::Edge> heavy(r.heavy.begin(), r.heavy.end());
    const std::set<fmmc::Edge> light(r.light_edges.begin(), r.light_edges.end());
    const std::set<fmmc::Edge> pairs(r.light_pairs.begin(), r.light_pairs.end());
    double diff = 0.0;
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
      const auto e = g.edges()[k];
      EXPECT_FALSE(heavy.count(e) && light.count(e));
      EXPECT_EQ(light.count(e), pairs.count(e));
      const double wp = fmmc::distance_pow(fp.point(e.u), fp.point(e.v), q);
      if (heavy.count(e)) diff += wp - std::exp(eps * q) * w.weights[k];
    }
    EXPECT_NEAR(r.diff_h, diff, 1e-10 * (1 + diff));
    EXPECT_GE(r.diff_h, 0.0);
    EXPECT_EQ(r.event_g, r.diff_h <= r.thresholds.diff_h && r.cost_l1 <= r.thresholds.cost_l1 &&
                             r.cost_l2 <= r.thresholds.cost_l2);
  }
}

TEST(HeavyLight, ExpectationBounds) {
  const Graph g = fmmc::gen_family(GraphFamily::kCycle, 6);
  const auto f = fmmc::gaussian_embedding(6, 6, 21);
  const double eps = 0.09, q = 2.0;
  const int d = 20, reps = 3000;
  const auto w = fmmc::weights_from_embedding(g, f, q);
  const auto est = fmmc::estimate_goodness(ProjectorLaw::kGaussian, 6, d, eps, q, 20000, 5);
  std::vector<double> diff, cost1, cost2;
  double pair_sum = 0.0;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) pair_sum += fmmc::distance_pow(f.point(u), f.point(v), q);
  for (int t = 0; t < reps; ++t) {
    const auto p = fmmc::sample_projector(6, d, ProjectorLaw::kGaussian, fmmc::derive_seed(9, 0, t));
    const auto r = fmmc::heavy_light_report(w, f, fmmc::apply_projector(p, f), eps, q, 0, 0, 1);
    diff.push_back(r.diff_h);
    cost1.push_back(r.cost_l1);
    cost2.push_back(r.cost_l2);
  }
  const double wsum = w.total_edge_weight();
  const auto md = moments(diff), m1 = moments(cost1), m2 = moments(cost2);
  // Standard errors combine the trial average with the δ̂, ρ̂ estimates.
  EXPECT_LE(md.mean, est.rho_hat * wsum + 4 * std::hypot(md.se, est.rho_se * wsum));
  EXPECT_LE(m1.mean, est.delta_hat * wsum + 4 * std::hypot(m1.se, est.delta_se * wsum));
  EXPECT_LE(m2.mean, est.delta_hat * pair_sum + 4 * std::hypot(m2.se, est.delta_se * pair_sum));
  EXPECT_GT(md.mean, 0.0);
  EXPECT_GT(m1.mean, 0.0);
}

TEST(HeavyLight, DecompositionBoundWithExactMatcher) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = fmmc::gen_family(rep % 2 ? GraphFamily::kHypercube : GraphFamily::kCycle, rep % 2 ? 3 : 7);
    const auto f = fmmc::gaussian_embedding(g.num_vertices(), 3, rng());
    const auto w = fmmc::weights_from_embedding(g, f, 2.0);
    EXPECT_GE(fmmc::max_matching_exact(w).value, w.total_edge_weight() / (g.max_degree() + 1.0) - 1e-12);
  }
}

}  // namespace
