#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracton/solver.hpp"

namespace fracton {

/// Occupancy of N particles over G states in class h.  The statistical
/// weight counts W = Gamma(x+y+1) / (Gamma(x+1) Gamma(y+1)) with
/// x = N and y = G + (N-1)(h-1) - N; y >= 0 is the feasibility bound
/// (the class cap on how many particles G states can hold).
struct WeightParams {
  long long G = 1;
  long long N = 0;
  double h = 1.0;

  double occupation() const { return static_cast<double>(N) / static_cast<double>(G); }
  double x() const { return static_cast<double>(N); }
  double y() const {
    return static_cast<double>(G) + (static_cast<double>(N) - 1.0) * (h - 1.0) -
           static_cast<double>(N);
  }

  void validate() const {
    if (G < 1) throw std::invalid_argument("number of states G must be positive");
    if (N < 0) throw std::invalid_argument("particle number N must be non-negative");
    if (!(h >= 1.0 && h <= 2.0)) throw std::domain_error("class parameter h must lie in [1, 2]");
  }
};

/// ln W.  Reduces to the log binomial C(G, N) at h = 1 and to the log
/// negative-binomial coefficient C(N+G-1, N) at h = 2.
inline double log_weight(const WeightParams& params) {
  params.validate();
  double x = params.x();
  double y = params.y();
  if (y < 0.0)
    throw std::domain_error("infeasible occupancy: N exceeds the class cap (y < 0)");
  return std::lgamma(x + y + 1.0) - std::lgamma(x + 1.0) - std::lgamma(y + 1.0);
}

/// Entropy per state (nats, K = 1) as a function of the occupation alone:
/// S = [1+(h-1)n] ln((1+(h-1)n)/n) - [1+(h-2)n] ln((1+(h-2)n)/n).
inline double entropy_from_n(double h, double n) {
  if (!(h >= 1.0 && h <= 2.0)) throw std::domain_error("class parameter h must lie in [1, 2]");
  if (!(n > 0.0)) throw std::domain_error("occupation must be positive");
  double a = 1.0 + (h - 1.0) * n;
  double b = 1.0 + (h - 2.0) * n;
  if (!(b > 0.0))
    throw std::domain_error("occupation at or beyond the class cap 1/(2-h)");
  return a * std::log(a / n) - b * std::log(b / n);
}

/// Same entropy evaluated from the solved distribution point:
/// S = n [(Y-1) ln(Y-1) - (Y-2) ln(Y-2)].
inline double entropy_from_Y(const SolverPoint& pt) {
  double w = pt.Y - 2.0;  // may be 0 in double deep inside the band
  double term2 = w > 0.0 ? w * std::log(w) : 0.0;
  return pt.n * ((pt.Y - 1.0) * std::log(pt.Y - 1.0) - term2);
}

/// Third form, in the microstate probabilities:
/// S = (-p ln p - q ln q) / (q + (2-h) p).
inline double entropy_from_pq(const SolverPoint& pt) {
  double plogp = pt.p > 0.0 ? pt.p * std::log(pt.p) : 0.0;
  double qlogq = pt.q > 0.0 ? pt.q * std::log(pt.q) : 0.0;
  return (-plogp - qlogq) / (pt.q + (2.0 - pt.h) * pt.p);
}

/// ln P(n) = N ln p + ([n(h-2)+1] G - (h-1)) ln(1-p).  The exponent of
/// q = 1-p equals y, so feasible occupancies have a non-negative power.
inline double microstate_log_probability(const WeightParams& params, double p) {
  params.validate();
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("probability p must lie in (0, 1)");
  double n = params.occupation();
  double q_exponent = (n * (params.h - 2.0) + 1.0) * static_cast<double>(params.G) - (params.h - 1.0);
  return params.x() * std::log(p) + q_exponent * std::log1p(-p);
}

/// Sum_N W(N) P(N) - 1 over all feasible N, accumulated in log space.
/// Zero (to rounding) at h = 1 by the binomial theorem; for other classes
/// the defect is a reported diagnostic, not an identity.
inline double normalization_defect(double h, double p, long long G) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("probability p must lie in (0, 1)");
  if (G < 1) throw std::invalid_argument("number of states G must be positive");
  if (!(h >= 1.0 && h <= 2.0)) throw std::domain_error("class parameter h must lie in [1, 2]");

  std::vector<double> log_terms;
  if (h < 2.0) {
    // y >= 0  <=>  N <= (G + 1 - h)/(2 - h)
    long long n_max = static_cast<long long>(
        std::floor((static_cast<double>(G) + 1.0 - h) / (2.0 - h) + 1e-9));
    log_terms.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long long N = 0; N <= n_max; ++N) {
      WeightParams params{G, N, h};
      log_terms.push_back(log_weight(params) + microstate_log_probability(params, p));
    }
  } else {
    // Bose case: y = G - 1 for every N, terms decay geometrically with ratio
    // approaching p; run until they stop contributing.
    double log_max_seen = -HUGE_VAL;
    for (long long N = 0;; ++N) {
      WeightParams params{G, N, h};
      double lt = log_weight(params) + microstate_log_probability(params, p);
      log_terms.push_back(lt);
      if (lt > log_max_seen) log_max_seen = lt;
      if (N > G && lt < log_max_seen - 50.0) break;
      if (N > 100 * G + 100000) break;  // safety stop far past convergence
    }
  }

  double log_max = -HUGE_VAL;
  for (double lt : log_terms) log_max = std::max(log_max, lt);
  double sum = 0.0;
  for (double lt : log_terms) sum += std::exp(lt - log_max);
  return std::expm1(log_max + std::log(sum));
}

/// |ln W(G, round(nG), h)/G - S(h, n)|: the finite-size gap between the
/// counting entropy and its per-state limit, O(ln G / G) by Stirling.
inline double boltzmann_consistency(double h, double n, long long G) {
  if (G < 1) throw std::invalid_argument("number of states G must be positive");
  long long N = std::llround(n * static_cast<double>(G));
  WeightParams params{G, N, h};
  return std::abs(log_weight(params) / static_cast<double>(G) - entropy_from_n(h, n));
}

}  // namespace fracton
