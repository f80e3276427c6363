#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <random>
#include <vector>

#include "fmmc/eigen.hpp"
#include "fmmc/errors.hpp"
#include "fmmc/matrix.hpp"
#include "support/oracles.hpp"

namespace {

using fmmc::DenseMatrix;

DenseMatrix random_symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = normal(rng);
  return m;
}

TEST(SymEigs, Examples) {
  EXPECT_EQ(fmmc::sym_eigs(DenseMatrix::identity(3)), (std::vector<double>{1, 1, 1}));
  DenseMatrix d(3, 3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  EXPECT_EQ(fmmc::sym_eigs(d), (std::vector<double>{3, 2, 1}));
  DenseMatrix r(2, 2);
  r(0, 1) = r(1, 0) = 1;
  const auto ev = fmmc::sym_eigs(r);
  EXPECT_NEAR(ev[0], 1.0, 1e-15);
  EXPECT_NEAR(ev[1], -1.0, 1e-15);
}

TEST(SymEigs, Errors) {
  EXPECT_THROW(fmmc::sym_eigs(DenseMatrix(2, 3)), fmmc::InvalidInput);
  DenseMatrix a(2, 2);
  a(0, 1) = 1.0;
  EXPECT_THROW(fmmc::sym_eigs(a), fmmc::InvalidInput);
  EXPECT_THROW(fmmc::sym_eigs(DenseMatrix(2049, 2049)), fmmc::CapExceeded);
}

TEST(SymEigs, MatchesEigenAndReconstructs) {
  std::mt19937_64 rng(99);
  for (int n : {1, 2, 5, 17, 50}) {
    for (int rep = 0; rep < 4; ++rep) {
      const DenseMatrix m = random_symmetric(n, rng);
      const auto sys = fmmc::sym_eigensystem(m);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::to_eigen(m));
      double trace = 0.0, sum = 0.0;
      for (int i = 0; i < n; ++i) {
        EXPECT_NEAR(sys.values[i], es.eigenvalues()(n - 1 - i), 1e-10);
        trace += m(i, i);
        sum += sys.values[i];
      }
      EXPECT_NEAR(sum, trace, 1e-8 * n);
      EXPECT_LE(sys.off_diagonal, 1e-12 * m.frobenius_norm());

      Eigen::MatrixXd v = oracle::to_eigen(sys.vectors);
      Eigen::VectorXd lam = Eigen::Map<const Eigen::VectorXd>(sys.values.data(), n);
      const Eigen::MatrixXd rebuilt = v * lam.asDiagonal() * v.transpose();
      EXPECT_LE((rebuilt - oracle::to_eigen(m)).norm(), 1e-8 * oracle::to_eigen(m).norm());
      EXPECT_LE((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-10);
    }
  }
}

}  // namespace
