#pragma once

#include <vector>

#include "fmmc/matrix.hpp"

namespace fmmc {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::kIterationLimit;
  double objective = 0.0;
  std::vector<double> x;     // primal variables
  std::vector<double> dual;  // one multiplier per constraint row, >= 0
  int iterations = 0;
  bool used_bland = false;
};

struct SimplexOptions {
  double tolerance = 1e-9;
  // Consecutive degenerate pivots tolerated before switching from the
  // most-negative reduced cost rule to Bland's rule for good.
  int degenerate_pivot_limit = 50;
  int max_iterations = 1'000'000;
};

// Dense tableau simplex for   max c^T x  s.t.  A x <= b,  x >= 0.
// A negative b triggers an auxiliary-variable phase one. Ties in both the
// entering and leaving choice go to the lowest variable index.
LpSolution solve_lp(const DenseMatrix& a, const std::vector<double>& b,
                    const std::vector<double>& c, const SimplexOptions& options = {});

}  // namespace fmmc
