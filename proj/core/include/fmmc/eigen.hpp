#pragma once

#include <vector>

#include "fmmc/matrix.hpp"

namespace fmmc {

// Eigenvalues sorted in descending order; column k of `vectors` is a unit
// eigenvector for values[k].
struct EigenSystem {
  std::vector<double> values;
  DenseMatrix vectors;
  int sweeps = 0;
  // Off-diagonal Frobenius norm of the rotated matrix at exit.
  double off_diagonal = 0.0;
};

// Cyclic Jacobi rotations. Throws InvalidInput when m is not square or not
// symmetric to 1e-10 (relative to max(1, max|m_ij|)), CapExceeded when
// n > 2048 and NumericalFailure when the off-diagonal mass does not fall
// below 1e-12 * ||m||_F.
EigenSystem sym_eigensystem(const DenseMatrix& m);

std::vector<double> sym_eigs(const DenseMatrix& m);

}  // namespace fmmc
