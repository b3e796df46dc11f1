// Acceptance suite: every release criterion as one pass/fail line, pinned to
// its tolerance.  Exit code 0 iff all criteria pass.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "fracton/classes.hpp"
#include "fracton/entanglement.hpp"
#include "fracton/entropy.hpp"
#include "fracton/fqhe.hpp"
#include "fracton/grid.hpp"
#include "fracton/solver.hpp"
#include "oracles.hpp"

namespace {

using namespace fracton;

int failures = 0;
int criterion_index = 0;

void report(const std::string& name, bool passed, const std::string& detail) {
  ++criterion_index;
  if (!passed) ++failures;
  std::printf("[%2d] %s  %s (%s)\n", criterion_index, passed ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
}

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, value);
  return buf;
}

void criterion_closed_forms() {
  SolveOptions forced;
  forced.force_generic = true;
  double worst = 0.0;
  for (double h : {1.0, 1.5, 2.0}) {
    auto xis = h == 2.0 ? logspace(1.0 + 1e-6, 1e3, 100) : logspace(1e-3, 1e3, 100);
    for (double xi : xis) {
      SolverPoint pt = solve_distribution(h, xi, forced);
      double y_ref = h == 1.0   ? oracles::fermi_dirac_Y(xi)
                     : h == 2.0 ? oracles::bose_einstein_Y(xi)
                                : oracles::half_class_Y(xi);
      double n_ref = h == 1.0   ? oracles::fermi_dirac_occupation(xi)
                     : h == 2.0 ? oracles::bose_einstein_occupation(xi)
                                : oracles::half_class_occupation(xi);
      worst = std::max(worst, std::abs(pt.Y - y_ref) / y_ref);
      worst = std::max(worst, std::abs(pt.n - n_ref) / std::abs(n_ref));
    }
  }
  report("closed-form solver agreement at h = 1, 3/2, 2", worst <= 1e-10,
         fmt("max rel err %.3g", worst));
}

void criterion_partition_identity() {
  SolveOptions forced;
  forced.force_generic = true;
  double worst = 0.0;
  for (int i = 11; i <= 19; ++i) {
    double h = i / 10.0;
    for (double xi : logspace(1e-3, 1e3, 100)) {
      SolverPoint pt = solve_distribution(h, xi, forced);
      // direct oracle evaluation of 1/xi = theta^(h-2) - theta^(h-1)
      double direct = std::pow(pt.theta, h - 2.0) - std::pow(pt.theta, h - 1.0);
      worst = std::max(worst, std::abs(1.0 / xi - direct) * xi);
      worst = std::max(worst, partition_identity_defect(pt));
    }
  }
  report("partition identity defect on the class grid", worst <= 1e-10,
         fmt("max defect %.3g", worst));
}

void criterion_entropy_forms() {
  double worst = 0.0;
  for (int i = 11; i <= 19; ++i) {
    double h = i / 10.0;
    for (double xi : logspace(1e-3, 1e3, 100)) {
      SolverPoint pt = solve_distribution(h, xi);
      double s_n = entropy_from_n(h, pt.n);
      double s_y = entropy_from_Y(pt);
      double s_pq = entropy_from_pq(pt);
      double hi = std::max({s_n, s_y, s_pq});
      double lo = std::min({s_n, s_y, s_pq});
      worst = std::max(worst, (hi - lo) / hi);
    }
  }
  report("three entropy forms agree", worst <= 1e-10, fmt("max rel spread %.3g", worst));
}

void criterion_boltzmann() {
  bool ok = true;
  double worst = 0.0;
  const std::pair<double, double> anchors[] = {{1.0, 0.5}, {1.5, 0.5}, {2.0, 1.0}};
  for (const auto& [h, n] : anchors) {
    double prev = HUGE_VAL;
    for (long long G : {1000LL, 10000LL, 100000LL, 1000000LL, 10000000LL}) {
      double gap = boltzmann_consistency(h, n, G);
      if (!(gap < prev)) ok = false;
      prev = gap;
    }
    worst = std::max(worst, prev);
  }
  report("counting entropy converges (G up to 1e7)", ok && worst <= 1e-5,
         fmt("max gap at G=1e7: %.3g", worst));
}

void criterion_normalization() {
  double worst = 0.0;
  for (double p : {0.1, 0.3, 0.5, 0.7})
    for (long long G : {10LL, 20LL, 50LL})
      worst = std::max(worst, std::abs(normalization_defect(1.0, p, G)));
  bool passed = worst <= 1e-12;
  report("microstate normalization at h = 1", passed, fmt("max |defect| %.3g", worst));
  std::printf("     INFO: defect at h = 3/2 (p = 0.3, G = 200): %.6g\n",
              normalization_defect(1.5, 0.3, 200));
  std::printf("     INFO: defect at h = 2 (p = 0.3, G = 50): %.6g\n",
              normalization_defect(2.0, 0.3, 50));
}

void criterion_ordering() {
  bool ok = true;
  for (int i = 1; i <= 19; ++i) {
    double p = i * 0.05;
    double e43 = measure(4.0 / 3.0, p);
    double e32 = measure(1.5, p);
    double e53 = measure(5.0 / 3.0, p);
    if (!(e43 < e32 && e32 < e53)) ok = false;
  }
  double d43 = std::abs(measure(4.0 / 3.0, 0.5) - 6.0 / 5.0);
  double d32 = std::abs(measure(1.5, 0.5) - 4.0 / 3.0);
  double d53 = std::abs(measure(5.0 / 3.0, 0.5) - 3.0 / 2.0);
  double worst = std::max({d43, d32, d53});
  report("entanglement ordering across classes", ok && worst <= 1e-12,
         fmt("p = 1/2 values off by at most %.3g", worst));
}

void criterion_concavity() {
  double worst = -HUGE_VAL;
  for (double h : {4.0 / 3.0, 1.5, 5.0 / 3.0})
    for (int i = 2; i <= 18; ++i) {
      double p = i * 0.05;
      worst = std::max(worst, measure(h, p - 0.05) - 2.0 * measure(h, p) + measure(h, p + 0.05));
    }
  report("concavity of the entanglement kernel", worst <= 1e-12,
         fmt("max second difference %.3g", worst));
}

void criterion_symmetry() {
  double worst = 0.0;
  for (int i = 1; i <= 19; ++i)
    worst = std::max(worst, std::abs(measure(1.0, i * 0.05) - measure(1.0, 1.0 - i * 0.05)));
  double fracton_defect = std::abs(measure(1.5, 0.25) - measure(1.5, 0.75));
  bool passed = worst <= 1e-12 && fracton_defect > 0.0;
  report("fermion symmetry; fracton asymmetry is real", passed,
         fmt("h=1 defect %.3g", worst) + fmt(", h=3/2 defect at p=0.25: %.6g", fracton_defect));
}

void criterion_basis_enumeration() {
  auto basis = enumerate_basis(FractonClass(Rational(3, 2)), 3, 4);
  std::vector<OccupationState> reference{{1, 2, 1}, {0, 2, 2}, {2, 1, 1},
                                         {2, 0, 2}, {1, 1, 2}, {2, 2, 0}};
  std::sort(reference.begin(), reference.end());
  std::vector<OccupationState> got = basis;
  std::sort(got.begin(), got.end());
  bool ok = got == reference && basis.size() == 6;

  for (int cap = 1; cap <= 3 && ok; ++cap) {
    FractonClass cls(Rational(2) - Rational(1, cap));
    for (int modes = 1; modes <= 6 && ok; ++modes)
      for (int particles = 0; particles <= 12 && ok; ++particles)
        if (enumerate_basis(cls, modes, particles).size() !=
            oracles::bounded_composition_count(modes, particles, cap))
          ok = false;
  }
  report("occupation basis enumeration", ok, ok ? "six reference kets; counts match brute force"
                                               : "mismatch against brute force");
}

void criterion_fermion_state() {
  const double amp = 1.0 / std::sqrt(3.0);
  std::vector<std::complex<double>> state(3, {amp, 0.0});
  double total = state_entanglement(1.0, state);
  double target = 3.0 * std::log2(3.0) - 2.0;
  report("equal-amplitude fermion state value", std::abs(total - target) <= 1e-9,
         fmt("total %.10g bits", total));
}

void criterion_occupation_pairs() {
  const std::pair<Rational, Rational> pairs[] = {
      {{2, 3}, {3, 2}}, {{1, 2}, {2, 1}}, {{1, 3}, {3, 1}},
      {{4, 3}, {3, 2}}, {{3, 2}, {2, 1}}, {{5, 3}, {3, 1}},
      {{8, 3}, {3, 2}}, {{5, 2}, {2, 1}}, {{7, 3}, {3, 1}}};
  bool ok = true;
  for (const auto& [nu, n] : pairs)
    if (lll_occupation(FillingFactor(nu)) != n) ok = false;

  for (long long q = 1; q <= 12 && ok; ++q)
    for (long long p = 1; p <= 4 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      if (q == 1 && p % 2 == 0) continue;
      FillingFactor nu(p, q);
      if (lll_occupation(nu) != Rational(1) / (Rational(2) - class_from_nu(nu).h())) ok = false;
    }
  report("LLL occupation pairs and 1/(2-h) identity", ok,
         ok ? "nine reference pairs exact" : "mismatch");
}

void criterion_farey_graph() {
  bool ok = true;
  for (int max_den = 2; max_den <= 8 && ok; ++max_den) {
    auto graph = farey_graph(max_den, 0);
    std::vector<std::pair<std::size_t, std::size_t>> brute;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < graph.vertices.size(); ++j) {
        long long det = graph.vertices[j].numerator() * graph.vertices[i].denominator() -
                        graph.vertices[i].numerator() * graph.vertices[j].denominator();
        if (std::llabs(det) == 1) brute.emplace_back(i, j);
      }
    if (graph.edges != brute) ok = false;
    for (const auto& [i, j] : graph.edges) {
      long long det = graph.vertices[j].numerator() * graph.vertices[i].denominator() -
                      graph.vertices[i].numerator() * graph.vertices[j].denominator();
      if (std::llabs(det) != 1) ok = false;
    }
    auto seq = oracles::farey_interior(max_den);
    if (seq.size() != graph.vertices.size()) ok = false;
    for (std::size_t i = 0; ok && i + 1 < seq.size(); ++i)
      if (!transition_allowed(FillingFactor(seq[i]), FillingFactor(seq[i + 1]))) ok = false;
  }
  report("Farey graph edges are exactly the unimodular pairs", ok,
         ok ? "brute force and neighbour checks exact" : "mismatch");
}

void criterion_class_algebra() {
  bool ok = true;
  std::vector<Rational> unit;
  for (long long b = 2; b <= 20; ++b)
    for (long long a = 1; a < b; ++a)
      if (std::gcd(a, b) == 1) unit.emplace_back(a, b);

  for (const auto& r : unit) {
    FractonClass cls(Rational(1) + r);
    if (dual_class(dual_class(cls)) != cls) ok = false;
    if (class_from_nu(FillingFactor(r)) != class_from_nu(FillingFactor(Rational(2) - r))) ok = false;
    Rational s = r / 2;
    if (FractonClass::from_spin(s) != class_from_nu(FillingFactor(2 * s))) ok = false;
    FractonClass base = class_from_nu(FillingFactor(2 * s));
    FractonClass partner = class_from_nu(FillingFactor(2 * susy_partner_spin(s)));
    if (partner != dual_class(base)) ok = false;
  }
  ok = ok && dual_class(FractonClass(Rational(1))).h() == Rational(2);
  report("class algebra exact on denominators <= 20", ok, ok ? "exact" : "violated");
}

}  // namespace

int main() {
  criterion_closed_forms();
  criterion_partition_identity();
  criterion_entropy_forms();
  criterion_boltzmann();
  criterion_normalization();
  criterion_ordering();
  criterion_concavity();
  criterion_symmetry();
  criterion_basis_enumeration();
  criterion_fermion_state();
  criterion_occupation_pairs();
  criterion_farey_graph();
  criterion_class_algebra();

  std::printf("acceptance: %d/%d criteria passed\n", criterion_index - failures, criterion_index);
  return failures == 0 ? 0 : 1;
}
