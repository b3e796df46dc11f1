#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fracton {

/// One (energy, chemical potential, temperature) point.  Only the
/// combination xi = exp((epsilon - mu)/kT) enters the distribution.
struct StatisticalPoint {
  double epsilon = 0.0;
  double mu = 0.0;
  double kT = 1.0;

  double xi() const {
    if (!(kT > 0.0)) throw std::domain_error("kT must be positive");
    return std::exp((epsilon - mu) / kT);
  }
};

/// Solved state of one class at one fugacity.  Y is the root of
/// (Y-1)^(h-1) (Y-2)^(2-h) = xi on (2, inf); everything else follows:
///   n     = 1/(Y - h)            occupation
///   theta = (Y-2)/(Y-1)          single-particle partition function
///   p     = 1/(Y-1), q = 1 - p   microstate probabilities
/// residual is the final log-space defect (h-1)ln(Y-1) + (2-h)ln(Y-2) - ln xi,
/// i.e. the relative residual in xi at convergence.
struct SolverPoint {
  double xi = 0.0;
  double h = 0.0;
  double Y = 0.0;
  double n = 0.0;
  double theta = 0.0;
  double p = 0.0;
  double q = 0.0;
  double residual = 0.0;
};

struct SolveOptions {
  double tolerance = 1e-12;    ///< stop once |log residual| falls below this
  bool force_generic = false;  ///< skip the h = 1, 3/2, 2 closed forms
};

namespace detail {

inline double softplus(double u) {
  if (u > 36.0) return u + std::exp(-u);
  return std::log1p(std::exp(u));
}

inline double logistic(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  double e = std::exp(u);
  return e / (1.0 + e);
}

// Log form of the defining equation in u = ln(Y-2):
//   f(u) = (h-1) ln(1+e^u) + (2-h) u - ln xi,
// strictly increasing and convex in u, with f(ln xi) >= 0.
inline double solve_log_offset(double h, double xi, double tolerance) {
  const double lxi = std::log(xi);
  auto f = [&](double u) { return (h - 1.0) * softplus(u) + (2.0 - h) * u - lxi; };

  double hi = lxi;
  double fhi = f(hi);
  if (fhi < 0.0) throw std::runtime_error("solver bracket failed at the upper bound");
  if (std::abs(fhi) <= tolerance) return hi;

  double lo = hi - 1.0;
  double step = 1.0;
  double flo = f(lo);
  while (flo >= 0.0 && lo > -1.0e6) {
    step *= 2.0;
    lo -= step;
    flo = f(lo);
  }
  if (flo >= 0.0) throw std::runtime_error("solver bracket failed at the lower bound");

  double u = 0.5 * (lo + hi);
  double fu = f(u);
  for (int it = 0; it < 200 && std::abs(fu) > tolerance; ++it) {
    if (fu > 0.0) hi = u; else lo = u;
    if (hi - lo < 1e-15 * (1.0 + std::abs(u))) break;
    u = 0.5 * (lo + hi);
    fu = f(u);
  }
  // Newton polish inside the bracket; f'(u) = (h-1) sigma(u) + (2-h) > 0
  for (int it = 0; it < 50 && std::abs(fu) > tolerance; ++it) {
    double deriv = (h - 1.0) * logistic(u) + (2.0 - h);
    double next = u - fu / deriv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    double fnext = f(next);
    if (fnext > 0.0) hi = next; else lo = next;
    u = next;
    fu = fnext;
  }
  return u;
}

inline SolverPoint point_from_log_offset(double h, double xi, double u) {
  SolverPoint pt;
  pt.xi = xi;
  pt.h = h;
  double w = std::exp(u);  // Y - 2; may underflow deep inside the band
  pt.Y = 2.0 + w;
  pt.n = 1.0 / ((2.0 - h) + w);
  pt.p = 1.0 / (1.0 + w);
  pt.theta = logistic(u);
  pt.q = pt.theta;
  pt.residual = (h - 1.0) * softplus(u) + (2.0 - h) * u - std::log(xi);
  return pt;
}

}  // namespace detail

/// Solves the transcendental single-particle equation for one class at one
/// fugacity.  Closed forms cover the fermion, boson, and h = 3/2 classes;
/// every other h uses bracketed bisection plus Newton on the log form.
inline SolverPoint solve_distribution(double h, double xi, const SolveOptions& opt = {}) {
  if (!std::isfinite(h) || !std::isfinite(xi))
    throw std::domain_error("solve_distribution requires finite h and xi");
  if (h < 1.0 || h > 2.0)
    throw std::domain_error("Hausdorff dimension out of range [1, 2]: " + std::to_string(h));
  if (xi <= 0.0) throw std::domain_error("fugacity variable xi must be positive");
  if (h == 2.0 && xi <= 1.0)
    throw std::domain_error("Bose divergence: h = 2 requires xi > 1 (epsilon > mu)");

  double u;
  if (!opt.force_generic && h == 1.0) {
    u = std::log(xi);  // Y = xi + 2
  } else if (!opt.force_generic && h == 2.0) {
    u = std::log(xi - 1.0);  // Y = xi + 1
  } else if (!opt.force_generic && h == 1.5) {
    // (Y-1)(Y-2) = xi^2  ->  Y = (3 + sqrt(1 + 4 xi^2))/2, written so that
    // Y - 2 keeps full precision for small xi
    u = std::log(2.0) + 2.0 * std::log(xi) - std::log1p(std::hypot(1.0, 2.0 * xi));
  } else {
    u = detail::solve_log_offset(h, xi, opt.tolerance);
  }
  return detail::point_from_log_offset(h, xi, u);
}

/// Average occupation n = 1/(Y - h) of class h at fugacity xi.
inline double occupation(double h, double xi, const SolveOptions& opt = {}) {
  return solve_distribution(h, xi, opt).n;
}

inline double occupation(double h, const StatisticalPoint& point, const SolveOptions& opt = {}) {
  return solve_distribution(h, point.xi(), opt).n;
}

/// Relative defect of the partition-function identity
/// 1/xi = theta^(h-2) - theta^(h-1).  Analytically zero, so the returned
/// value measures solver quality at the point.
inline double partition_identity_defect(const SolverPoint& pt) {
  if (pt.theta > 0.0 && pt.theta < 1.0) {
    // theta^(h-2) - theta^(h-1) = theta^(h-2) (1 - theta) = theta^(h-2) p
    double log_product = std::log(pt.xi) + (pt.h - 2.0) * std::log(pt.theta) + std::log(pt.p);
    return std::abs(std::expm1(log_product));
  }
  // theta under- or overflowed in double; fall back to the stored log residual
  return std::abs(std::expm1(-pt.residual));
}

/// T = 0 occupation: a step of height 1/(2-h) at the Fermi energy
/// (left-continuous, so epsilon = fermi_energy counts as filled).
inline double step_distribution(double h, double epsilon, double fermi_energy) {
  if (!std::isfinite(h) || h < 1.0 || h >= 2.0) {
    if (h == 2.0)
      throw std::domain_error("step distribution diverges at h = 2 (n -> infinity)");
    throw std::domain_error("step distribution requires h in [1, 2)");
  }
  return epsilon <= fermi_energy ? 1.0 / (2.0 - h) : 0.0;
}

}  // namespace fracton
