#include <gtest/gtest.h>

#include <sstream>

#include "fmmc/errors.hpp"
#include "fmmc/graph.hpp"
#include "fmmc/io.hpp"

namespace {

TEST(GraphIo, RoundTrip) {
  const auto g = fmmc::gen_family(fmmc::GraphFamily::kHypercube, 3);
  std::stringstream s;
  fmmc::write_graph(s, g);
  const auto back = fmmc::read_graph(s);
  EXPECT_EQ(back.num_vertices(), g.num_vertices());
  EXPECT_EQ(back.edges(), g.edges());
}

TEST(GraphIo, Malformed) {
  std::istringstream missing("3 2\n0 1\n");
  EXPECT_THROW(fmmc::read_graph(missing), fmmc::InvalidInput);
  std::istringstream loop("2 1\n1 1\n");
  EXPECT_THROW(fmmc::read_graph(loop), fmmc::InvalidInput);
}

TEST(EmbeddingIo, BitExactRoundTrip) {
  const auto f = fmmc::gaussian_embedding(9, 4, 77);
  std::stringstream s;
  fmmc::write_embedding_csv(s, f);
  const auto back = fmmc::read_embedding_csv(s);
  EXPECT_EQ(back.num_points(), 9);
  EXPECT_EQ(back.dim(), 4);
  EXPECT_EQ(back.coords(), f.coords());
}

TEST(EmbeddingIo, RaggedRowsRejected) {
  std::istringstream s("1,2\n3\n");
  EXPECT_THROW(fmmc::read_embedding_csv(s), fmmc::InvalidInput);
}

TEST(FormatDouble, SeventeenDigits) {
  EXPECT_EQ(fmmc::format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(fmmc::format_double(2.0), "2");
}

}  // namespace
