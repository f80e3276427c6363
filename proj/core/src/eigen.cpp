#include "fmmc/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fmmc/errors.hpp"

namespace fmmc {
namespace {

constexpr int kMaxDimension = 2048;
constexpr int kMaxSweeps = 100;
constexpr double kSymmetryTol = 1e-10;
constexpr double kTargetOff = 1e-14;
constexpr double kAcceptOff = 1e-12;

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenSystem sym_eigensystem(const DenseMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw InvalidInput("sym_eigensystem: matrix is not square");
  if (n > kMaxDimension)
    throw CapExceeded("sym_eigensystem: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxDimension));

  double scale = 1.0;
  for (double x : m.data()) scale = std::max(scale, std::abs(x));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > kSymmetryTol * scale)
        throw InvalidInput("sym_eigensystem: matrix is not symmetric at (" + std::to_string(i) +
                           "," + std::to_string(j) + ")");

  DenseMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));
  DenseMatrix v = DenseMatrix::identity(n);
  const double fro = a.frobenius_norm();

  EigenSystem out;
  double off = off_diagonal_norm(a);
  while (off > kTargetOff * fro && out.sweeps < kMaxSweeps) {
    ++out.sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        }
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = off_diagonal_norm(a);
  }
  out.off_diagonal = off;
  if (off > kAcceptOff * fro)
    throw NumericalFailure("sym_eigensystem: Jacobi sweeps did not converge (off-diagonal " +
                           std::to_string(off / fro) + " relative)");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });

  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> sym_eigs(const DenseMatrix& m) { return sym_eigensystem(m).values; }

}  // namespace fmmc
