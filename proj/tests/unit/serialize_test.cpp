#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "fmmc/graph.hpp"
#include "fmmc/serialize.hpp"

namespace {

TEST(Serialize, HeavyLightFieldNames) {
  const auto s = fmmc::gen_star_union(2, 1);
  const auto w = fmmc::weights_from_embedding(s.graph, s.embedding, 2.0);
  const nlohmann::json j = fmmc::heavy_light_report(w, s.embedding, s.embedding, 0.05, 2.0, 0.1, 0.1, 2.0);
  for (const char* key : {"epsilon", "q", "heavy", "light_edges", "light_pairs", "diff_h", "cost_l1",
                          "cost_l2", "event_g"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Serialize, LpReportFieldNames) {
  const fmmc::WeightedGraph w(fmmc::Graph(2, {{0, 1}}), {1.0});
  const nlohmann::json j = fmmc::fractional_matching(w).report;
  EXPECT_EQ(j.size(), 4u);
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_DOUBLE_EQ(j["primal"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["dual"].get<double>(), 1.0);
  EXPECT_TRUE(j.contains("iterations"));
}

TEST(Serialize, CertificateWitnessSorted) {
  const nlohmann::json j = fmmc::vertex_conductance_exact(fmmc::gen_family(fmmc::GraphFamily::kCycle, 6));
  EXPECT_EQ(j["witness"], nlohmann::json::array({0, 1, 2}));
  EXPECT_EQ(j["boundary_size"], 2);
}

TEST(Serialize, HistoryCsv) {
  std::ostringstream out;
  fmmc::write_history_csv(out, {{1, 0.5, 0.5, 0.25, 1}, {2, 0.4, 0.6, 0.125, 2}});
  EXPECT_EQ(out.str(), "iter,mu,gap,step\n1,0.5,0.5,0.25\n2,0.40000000000000002,0.59999999999999998,0.125\n");
}

}  // namespace
