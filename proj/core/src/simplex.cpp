#include "fmmc/simplex.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "fmmc/errors.hpp"

namespace fmmc {
namespace {

// Tableau layout: rows 0..m-1 are constraints, row m the objective, row
// m+1 the phase-one objective. Column n is the auxiliary variable, column
// n+1 the right-hand side. Variable ids: 0..n-1 structural, n..n+m-1 slack,
// -1 auxiliary.
class Tableau {
 public:
  Tableau(const DenseMatrix& a, const std::vector<double>& b, const std::vector<double>& c,
          const SimplexOptions& opt)
      : m_(a.rows()), n_(a.cols()), opt_(opt), basis_(m_), nonbasis_(n_ + 1),
        d_(m_ + 2, n_ + 2) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) d_(i, j) = a(i, j);
      basis_[i] = n_ + i;
      d_(i, n_) = -1.0;
      d_(i, n_ + 1) = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasis_[j] = j;
      d_(m_, j) = -c[j];
    }
    nonbasis_[n_] = -1;
    d_(m_ + 1, n_) = 1.0;
  }

  LpSolution solve() {
    LpSolution out;
    int r = 0;
    for (int i = 1; i < m_; ++i)
      if (d_(i, n_ + 1) < d_(r, n_ + 1)) r = i;
    if (m_ > 0 && d_(r, n_ + 1) < -opt_.tolerance) {
      pivot(r, n_);
      const LpStatus phase1 = run(2);
      if (phase1 == LpStatus::kIterationLimit) return finish(out, phase1);
      if (d_(m_ + 1, n_ + 1) < -opt_.tolerance) return finish(out, LpStatus::kInfeasible);
      for (int i = 0; i < m_; ++i) {
        if (basis_[i] != -1) continue;
        int s = 0;
        for (int j = 1; j <= n_; ++j)
          if (d_(i, j) < d_(i, s) || (d_(i, j) == d_(i, s) && nonbasis_[j] < nonbasis_[s])) s = j;
        pivot(i, s);
      }
    }
    return finish(out, run(1));
  }

 private:
  LpStatus run(int phase) {
    const int obj = m_ + phase - 1;
    for (;;) {
      if (iterations_ >= opt_.max_iterations) return LpStatus::kIterationLimit;
      const int s = entering(obj, phase);
      if (s < 0) return LpStatus::kOptimal;

      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (d_(i, s) <= opt_.tolerance) continue;
        if (r == -1) {
          r = i;
          continue;
        }
        const double ri = d_(i, n_ + 1) / d_(i, s);
        const double rr = d_(r, n_ + 1) / d_(r, s);
        if (ri < rr || (ri == rr && basis_[i] < basis_[r])) r = i;
      }
      if (r == -1) return LpStatus::kUnbounded;

      if (d_(r, n_ + 1) / d_(r, s) <= opt_.tolerance) {
        if (++degenerate_run_ >= opt_.degenerate_pivot_limit) bland_ = true;
      } else {
        degenerate_run_ = 0;
      }
      pivot(r, s);
    }
  }

  int entering(int obj, int phase) const {
    int s = -1;
    for (int j = 0; j <= n_; ++j) {
      if (nonbasis_[j] == -phase) continue;  // auxiliary never re-enters in the final phase
      const double rc = d_(obj, j);
      if (rc >= -opt_.tolerance) continue;
      if (s == -1) {
        s = j;
      } else if (bland_) {
        if (nonbasis_[j] < nonbasis_[s]) s = j;
      } else if (rc < d_(obj, s) || (rc == d_(obj, s) && nonbasis_[j] < nonbasis_[s])) {
        s = j;
      }
    }
    return s;
  }

  void pivot(int r, int s) {
    ++iterations_;
    const double inv = 1.0 / d_(r, s);
    auto pr = d_.row(r);
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(d_(i, s)) <= 1e-300) continue;
      auto pi = d_.row(i);
      const double factor = pi[s] * inv;
      for (int j = 0; j < n_ + 2; ++j) pi[j] -= pr[j] * factor;
      pi[s] = pr[s] * factor;
    }
    for (int j = 0; j < n_ + 2; ++j)
      if (j != s) pr[j] *= inv;
    for (int i = 0; i < m_ + 2; ++i)
      if (i != r) d_(i, s) *= -inv;
    d_(r, s) = inv;
    std::swap(basis_[r], nonbasis_[s]);
  }

  LpSolution& finish(LpSolution& out, LpStatus status) {
    out.status = status;
    out.iterations = iterations_;
    out.used_bland = bland_;
    out.x.assign(n_, 0.0);
    out.dual.assign(m_, 0.0);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= 0 && basis_[i] < n_) out.x[basis_[i]] = d_(i, n_ + 1);
    for (int j = 0; j <= n_; ++j)
      if (nonbasis_[j] >= n_) out.dual[nonbasis_[j] - n_] = d_(m_, j);
    out.objective = d_(m_, n_ + 1);
    return out;
  }

  int m_;
  int n_;
  SimplexOptions opt_;
  std::vector<int> basis_;
  std::vector<int> nonbasis_;
  DenseMatrix d_;
  int iterations_ = 0;
  int degenerate_run_ = 0;
  bool bland_ = false;
};

}  // namespace

LpSolution solve_lp(const DenseMatrix& a, const std::vector<double>& b,
                    const std::vector<double>& c, const SimplexOptions& options) {
  if (static_cast<int>(b.size()) != a.rows() || static_cast<int>(c.size()) != a.cols())
    throw InvalidInput("solve_lp: dimension mismatch");
  Tableau t(a, b, c, options);
  return t.solve();
}

}  // namespace fmmc
