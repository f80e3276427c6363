#include "fmmc/conductance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "fmmc/errors.hpp"

namespace fmmc {
namespace {

constexpr int kMaxConductanceVertices = 24;

// Lexicographic order of the sorted element lists of two distinct masks.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  const int bit = std::countr_zero(diff);
  const std::uint32_t above = ~((std::uint32_t{2} << bit) - 1);
  if (a & (std::uint32_t{1} << bit)) return (b & above) != 0;
  return (a & above) == 0;
}

class SubsetSearch {
 public:
  explicit SubsetSearch(const Graph& g) : n_(g.num_vertices()), limit_(n_ / 2), adj_(n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= std::uint32_t{1} << e.v;
      adj_[e.v] |= std::uint32_t{1} << e.u;
    }
  }

  void run() { extend(0, 0, 0, 0); }

  std::uint32_t best_set = 0;
  int best_boundary = 0;
  int best_size = 0;

 private:
  void consider(std::uint32_t set, std::uint32_t reach, int size) {
    const int boundary = std::popcount(reach & ~set);
    if (best_size == 0) {
      take(set, boundary, size);
      return;
    }
    const std::int64_t lhs = std::int64_t{boundary} * best_size;
    const std::int64_t rhs = std::int64_t{best_boundary} * size;
    if (lhs < rhs || (lhs == rhs && lex_less(set, best_set))) take(set, boundary, size);
  }

  void take(std::uint32_t set, int boundary, int size) {
    best_set = set;
    best_boundary = boundary;
    best_size = size;
  }

  // Adds vertices >= next to `set`, keeping |set| <= floor(n/2).
  void extend(int next, std::uint32_t set, std::uint32_t reach, int size) {
    for (int v = next; v < n_; ++v) {
      const std::uint32_t s = set | (std::uint32_t{1} << v);
      const std::uint32_t r = reach | adj_[v];
      consider(s, r, size + 1);
      if (size + 1 < limit_) extend(v + 1, s, r, size + 1);
    }
  }

  int n_;
  int limit_;
  std::vector<std::uint32_t> adj_;
};

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw InvalidInput("Rational: need num >= 0 and den > 0");
  const std::int64_t g = std::gcd(num, den);
  if (num == 0) return {0, 1};
  return {num / g, den / g};
}

int vertex_boundary_size(const Graph& g, const std::vector<int>& set) {
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : set) in[v] = 1;
  std::vector<char> outside(g.num_vertices(), 0);
  for (int u : set)
    for (int v : g.neighbors(u))
      if (!in[v]) outside[v] = 1;
  return static_cast<int>(std::count(outside.begin(), outside.end(), 1));
}

ConductanceCertificate vertex_conductance_exact(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxConductanceVertices)
    throw CapExceeded("vertex_conductance_exact: n=" + std::to_string(n) +
                      " exceeds the enumeration cap of " +
                      std::to_string(kMaxConductanceVertices));
  if (n < 2) throw InvalidInput("vertex_conductance_exact: need at least 2 vertices");

  SubsetSearch search(g);
  search.run();

  ConductanceCertificate cert;
  cert.boundary_size = search.best_boundary;
  cert.psi_star = Rational::make(search.best_boundary, search.best_size);
  for (int v = 0; v < n; ++v)
    if (search.best_set & (std::uint32_t{1} << v)) cert.witness.push_back(v);
  return cert;
}

double log_floor(double x) { return x > 0.0 ? std::max(std::log(x), 1.0) : 1.0; }

BoundChainReport bound_chain_report(const Graph& g, const MarkovMatrix& p,
                                    std::optional<double> psi_star) {
  if (p.size() != g.num_vertices())
    throw InvalidInput("bound_chain_report: chain and graph sizes differ");
  BoundChainReport r;
  r.psi_star = psi_star ? *psi_star : vertex_conductance_exact(g).psi_star.value();
  r.gap_lower = spectral_summary(p).gap;
  r.delta = g.max_degree();
  r.n = g.num_vertices();

  const double psi2 = r.psi_star * r.psi_star;
  r.cheeger_lhs = r.delta > 0 ? psi2 / (static_cast<double>(r.delta) * r.delta) : 0.0;
  r.tz_lhs = psi2 / log_floor(r.n);
  r.thm_lhs = psi2 / log_floor(r.delta);

  auto ratio = [&](double lhs) -> std::optional<double> {
    if (lhs > 0.0) return r.gap_lower / lhs;
    return std::nullopt;
  };
  auto constant = [&](double lhs) -> std::optional<double> {
    if (r.gap_lower > 0.0) return lhs / r.gap_lower;
    return std::nullopt;
  };
  r.cheeger_ratio = ratio(r.cheeger_lhs);
  r.tz_ratio = ratio(r.tz_lhs);
  r.thm_ratio = ratio(r.thm_lhs);
  r.cheeger_constant = constant(r.cheeger_lhs);
  r.tz_constant = constant(r.tz_lhs);
  r.thm_constant = constant(r.thm_lhs);
  r.upper_holds = r.gap_lower <= r.upper_constant * r.psi_star + 1e-12;
  return r;
}

}  // namespace fmmc
