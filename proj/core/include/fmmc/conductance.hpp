#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fmmc/graph.hpp"
#include "fmmc/spectral.hpp"

namespace fmmc {

// Nonnegative rational in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
};

struct ConductanceCertificate {
  Rational psi_star;
  std::vector<int> witness;  // sorted
  int boundary_size = 0;
};

// Outer vertex boundary {v ∉ S : v has a neighbour in S}.
int vertex_boundary_size(const Graph& g, const std::vector<int>& set);

// Exact vertex conductance by enumerating every S with 1 <= |S| <= floor(n/2).
// Ties go to the lexicographically smallest sorted witness. Requires
// 2 <= n <= 24 (CapExceeded above, InvalidInput below).
ConductanceCertificate vertex_conductance_exact(const Graph& g);

struct BoundChainReport {
  double psi_star = 0.0;
  double gap_lower = 0.0;  // γ(P) of the supplied chain
  int delta = 0;
  int n = 0;
  double cheeger_lhs = 0.0;  // Ψ*²/Δ²
  double tz_lhs = 0.0;       // Ψ*²/max(log n, 1)
  double thm_lhs = 0.0;      // Ψ*²/max(log Δ, 1)
  // γ(P)/LHS; empty when the LHS is zero.
  std::optional<double> cheeger_ratio;
  std::optional<double> tz_ratio;
  std::optional<double> thm_ratio;
  // LHS/γ(P): smallest c with γ(P) >= LHS/c. Empty when γ(P) = 0.
  std::optional<double> cheeger_constant;
  std::optional<double> tz_constant;
  std::optional<double> thm_constant;
  // γ(P) <= c Ψ* with the diagnostic constant c = 4.
  double upper_constant = 4.0;
  bool upper_holds = true;
};

double log_floor(double x);

BoundChainReport bound_chain_report(const Graph& g, const MarkovMatrix& p,
                                    std::optional<double> psi_star = std::nullopt);

}  // namespace fmmc
