#include "fmmc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fmmc/eigen.hpp"
#include "fmmc/errors.hpp"

namespace fmmc {
namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kRowSumTol = 1e-10;
constexpr double kTieTol = 1e-9;

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double d = a.data()[i] - b.data()[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

std::string markov_violation(const Graph& g, const DenseMatrix& p) {
  const int n = g.num_vertices();
  if (p.rows() != n || p.cols() != n)
    return "matrix is " + std::to_string(p.rows()) + "x" + std::to_string(p.cols()) +
           " for a graph on " + std::to_string(n) + " vertices";
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = p(i, j);
      if (!(x >= 0.0)) return "negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (x > 0.0 && i != j && !g.has_edge(i, j))
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside the edge set";
      if (std::abs(x - p(j, i)) > kSymmetryTol)
        return "asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      row += x;
    }
    if (std::abs(row - 1.0) > kRowSumTol) return "row " + std::to_string(i) + " does not sum to 1";
  }
  return {};
}

MarkovMatrix::MarkovMatrix(Graph g, DenseMatrix entries)
    : graph_(std::move(g)), entries_(std::move(entries)) {
  if (auto why = markov_violation(graph_, entries_); !why.empty())
    throw InvalidInput("MarkovMatrix: " + why);
}

SpectralSummary spectral_summary(const MarkovMatrix& p) {
  SpectralSummary s;
  s.eigenvalues = sym_eigs(p.entries());
  for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
    s.slem = std::max(s.slem, std::abs(s.eigenvalues[i]));
  s.gap = 1.0 - s.slem;
  return s;
}

MarkovMatrix max_degree_lazy_walk(const Graph& g) {
  const int n = g.num_vertices();
  const double h = 1.0 / (g.max_degree() + 1);
  DenseMatrix p(n, n);
  for (const Edge& e : g.edges()) {
    p(e.u, e.v) = h;
    p(e.v, e.u) = h;
  }
  for (int i = 0; i < n; ++i) p(i, i) = 1.0 - g.degree(i) * h;
  return MarkovMatrix(g, std::move(p));
}

FeasibleProjector::FeasibleProjector(Graph g, int max_iterations, double tolerance)
    : graph_(std::move(g)), max_iterations_(max_iterations), tolerance_(tolerance) {
  const int n = graph_.num_vertices();
  DenseMatrix k(n, n);
  for (int i = 0; i < n; ++i) k(i, i) = 2.0 + graph_.degree(i);
  for (const Edge& e : graph_.edges()) {
    k(e.u, e.v) = 1.0;
    k(e.v, e.u) = 1.0;
  }
  cholesky_ = DenseMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    double d = k(j, j);
    for (int s = 0; s < j; ++s) d -= cholesky_(j, s) * cholesky_(j, s);
    cholesky_(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double x = k(i, j);
      for (int s = 0; s < j; ++s) x -= cholesky_(i, s) * cholesky_(j, s);
      cholesky_(i, j) = x / cholesky_(j, j);
    }
  }
}

// Closed-form projection onto symmetric matrices supported on E ∪ diag with
// unit row sums. With z the symmetrised input and multipliers ν solving
// (2I + D + A) ν = 4 (rowsum(z) - 1):  y_uv = z_uv - (ν_u + ν_v)/4,
// y_ii = z_ii - ν_i/2.
DenseMatrix FeasibleProjector::project_affine(const DenseMatrix& x) const {
  const int n = graph_.num_vertices();
  DenseMatrix y(n, n);
  std::vector<double> rhs(n);
  for (int i = 0; i < n; ++i) {
    y(i, i) = x(i, i);
    double r = x(i, i);
    for (int j : graph_.neighbors(i)) r += 0.5 * (x(i, j) + x(j, i));
    rhs[i] = 4.0 * (r - 1.0);
  }
  for (int i = 0; i < n; ++i) {
    double s = rhs[i];
    for (int k = 0; k < i; ++k) s -= cholesky_(i, k) * rhs[k];
    rhs[i] = s / cholesky_(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = rhs[i];
    for (int k = i + 1; k < n; ++k) s -= cholesky_(k, i) * rhs[k];
    rhs[i] = s / cholesky_(i, i);
  }
  for (const Edge& e : graph_.edges()) {
    const double z = 0.5 * (x(e.u, e.v) + x(e.v, e.u)) - 0.25 * (rhs[e.u] + rhs[e.v]);
    y(e.u, e.v) = z;
    y(e.v, e.u) = z;
  }
  for (int i = 0; i < n; ++i) y(i, i) -= 0.5 * rhs[i];
  return y;
}

// Rounds an approximate projection onto M(G) exactly: clamp edges at zero,
// shrink any edge whose endpoint row overflows, then fill the diagonal.
MarkovMatrix FeasibleProjector::cleanup(const DenseMatrix& x) const {
  const int n = graph_.num_vertices();
  std::vector<double> edge(graph_.num_edges());
  std::vector<double> load(n, 0.0);
  for (std::size_t k = 0; k < edge.size(); ++k) {
    const Edge& e = graph_.edges()[k];
    edge[k] = std::max(0.0, 0.5 * (x(e.u, e.v) + x(e.v, e.u)));
    load[e.u] += edge[k];
    load[e.v] += edge[k];
  }
  DenseMatrix p(n, n);
  for (std::size_t k = 0; k < edge.size(); ++k) {
    const Edge& e = graph_.edges()[k];
    const double over = std::max({1.0, load[e.u], load[e.v]});
    p(e.u, e.v) = p(e.v, e.u) = edge[k] / over;
  }
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j : graph_.neighbors(i)) off += p(i, j);
    p(i, i) = std::max(0.0, 1.0 - off);
  }
  return MarkovMatrix(graph_, std::move(p));
}

ProjectionResult FeasibleProjector::project(const DenseMatrix& m) const {
  const int n = graph_.num_vertices();
  if (m.rows() != n || m.cols() != n)
    throw InvalidInput("project_to_feasible: matrix size does not match the graph");

  DenseMatrix x = m;
  DenseMatrix p_corr(n, n);
  DenseMatrix q_corr(n, n);
  DenseMatrix shifted(n, n);
  int it = 0;
  bool converged = false;
  for (; it < max_iterations_ && !converged; ++it) {
    for (std::size_t i = 0; i < shifted.data().size(); ++i)
      shifted.data()[i] = x.data()[i] + p_corr.data()[i];
    const DenseMatrix y = project_affine(shifted);
    for (std::size_t i = 0; i < shifted.data().size(); ++i)
      p_corr.data()[i] = shifted.data()[i] - y.data()[i];

    DenseMatrix next(n, n);
    for (std::size_t i = 0; i < next.data().size(); ++i) {
      const double v = y.data()[i] + q_corr.data()[i];
      next.data()[i] = std::max(0.0, v);
      q_corr.data()[i] = v - next.data()[i];
    }
    const double change = frobenius_distance(next, x);
    const double gap = frobenius_distance(next, y);
    x = std::move(next);
    converged = change <= tolerance_ * std::max(1.0, x.frobenius_norm()) && gap <= 1e-12;
  }
  return {cleanup(x), it, converged};
}

ProjectionResult project_to_feasible(const DenseMatrix& m, const Graph& g) {
  return FeasibleProjector(g).project(m);
}

std::string_view to_string(FmmcStatus status) {
  switch (status) {
    case FmmcStatus::kConverged:
      return "converged";
    case FmmcStatus::kIterationBudget:
      return "iteration_budget";
  }
  return "unknown";
}

FmmcResult fmmc_solve(const Graph& g, const FmmcOptions& options) {
  const int n = g.num_vertices();
  if (n == 0) throw InvalidInput("fmmc_solve: empty graph");
  if (!g.is_connected())
    throw InvalidInput("fmmc_solve: graph is disconnected, so every chain has SLEM 1");
  if (options.max_iterations < 0) throw InvalidInput("fmmc_solve: negative iteration budget");

  const FeasibleProjector projector(g);
  MarkovMatrix current = max_degree_lazy_walk(g);

  FmmcResult out{current, spectral_summary(current), {}, FmmcStatus::kIterationBudget};
  double best_mu = out.summary.slem;
  const double mu0 = best_mu;
  if (n == 1 || mu0 == 0.0) {
    out.history.push_back({0, mu0, 1.0 - mu0, 0.0, 1});
    out.status = FmmcStatus::kConverged;
    return out;
  }

  double anchor = best_mu;
  int stalled = 0;
  for (int t = 1; t <= options.max_iterations; ++t) {
    // SLEM of P equals the spectral norm of P - J/n; the extreme eigenvectors
    // of the deflated matrix are orthogonal to the all-ones vector.
    DenseMatrix deflated = current.entries();
    for (double& x : deflated.data()) x -= 1.0 / n;
    const EigenSystem es = sym_eigensystem(deflated);
    const double top = es.values.front();
    const double bottom = es.values.back();
    const bool upper = top >= -bottom;
    const double mu = upper ? top : -bottom;
    int multiplicity = 0;
    for (double v : es.values)
      if (std::abs(std::abs(v) - mu) <= kTieTol) ++multiplicity;

    if (mu < best_mu) {
      best_mu = mu;
      out.matrix = current;
    }

    const double t_d = static_cast<double>(t);
    const double step = options.steps.scale * mu0 *
                        (options.steps.rule == StepRule::kInverseSqrt ? 1.0 / std::sqrt(t_d) : 1.0 / t_d);
    out.history.push_back({t, mu, 1.0 - mu, step, multiplicity});

    if (anchor - best_mu >= options.stall_tolerance) {
      anchor = best_mu;
      stalled = 0;
    } else if (++stalled >= options.patience) {
      out.status = FmmcStatus::kConverged;
      break;
    }
    if (mu == 0.0) {
      out.status = FmmcStatus::kConverged;
      break;
    }

    const int col = upper ? 0 : n - 1;
    const double sign = upper ? 1.0 : -1.0;
    DenseMatrix moved = current.entries();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        moved(i, j) -= step * sign * es.vectors(i, col) * es.vectors(j, col);
    current = projector.project(moved).matrix;
  }

  out.summary = spectral_summary(out.matrix);
  return out;
}

}  // namespace fmmc
