#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fracton/classes.hpp"
#include "fracton/entanglement.hpp"
#include "fracton/entropy.hpp"
#include "fracton/fqhe.hpp"
#include "fracton/grid.hpp"
#include "fracton/solver.hpp"

namespace fracton {

/// One row of the identity suite.  Non-asserted rows (kind INFO) report
/// diagnostics that are documented not to vanish; they never fail a run.
struct CheckResult {
  std::string module;
  std::string name;
  bool asserted = true;
  bool passed = true;
  std::string detail;
};

struct VerifyOptions {
  /// Solver tolerance used by the numeric checks.  Lowering this (e.g. to
  /// 1e-2) deliberately degrades the solved points so that the identity
  /// checks expose their sensitivity; the default matches the library's.
  double solver_tolerance = 1e-12;
  /// Restrict to one module (classes, solver, entropy, entanglement, fqhe);
  /// empty runs everything.
  std::string only_module;
};

namespace verify_detail {

inline std::string fmt(const char* pattern, double a) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), pattern, a);
  return buf;
}

inline std::string fmt2(const char* pattern, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

/// Reduced rationals a/b in the open interval (0, 1) with b <= max_den.
inline std::vector<Rational> unit_interval_rationals(long long max_den) {
  std::vector<Rational> grid;
  for (long long b = 2; b <= max_den; ++b)
    for (long long a = 1; a < b; ++a)
      if (std::gcd(a, b) == 1) grid.emplace_back(a, b);
  return grid;
}

inline std::vector<double> tenth_grid(double lo, double hi) {
  std::vector<double> grid;
  for (int i = static_cast<int>(std::lround(lo * 10)); i <= static_cast<int>(std::lround(hi * 10)); ++i)
    grid.push_back(i / 10.0);
  return grid;
}

/// Exact binomial table via Pascal's rule; n <= 61 stays within uint64.
inline double exact_log_binomial(int n, int k) {
  static std::vector<std::vector<unsigned long long>> table = [] {
    std::vector<std::vector<unsigned long long>> t(62);
    for (int i = 0; i < 62; ++i) {
      t[i].resize(i + 1, 1);
      for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  return std::log(static_cast<double>(table[n][k]));
}

/// Interior members of the order-Q Farey sequence on (0, 1), in order,
/// generated by the classical next-term recurrence.
inline std::vector<Rational> farey_sequence_interior(long long Q) {
  std::vector<Rational> seq;
  long long a = 0, b = 1, c = 1, d = Q;
  for (;;) {
    long long k = (Q + b) / d;
    long long e = k * c - a, f = k * d - b;
    a = c; b = d; c = e; d = f;
    if (a == 1 && b == 1) break;
    seq.emplace_back(a, b);
  }
  return seq;
}

}  // namespace verify_detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt = {}) {
  namespace vd = verify_detail;
  std::vector<CheckResult> results;
  auto wants = [&](const char* module) {
    return opt.only_module.empty() || opt.only_module == module;
  };
  auto add = [&](const char* module, const char* name, bool passed, std::string detail,
                 bool asserted = true) {
    results.push_back({module, name, asserted, passed, std::move(detail)});
  };

  const SolveOptions solve_opt{opt.solver_tolerance, false};
  const SolveOptions solve_generic{opt.solver_tolerance, true};

  if (wants("classes")) {
    auto unit = vd::unit_interval_rationals(20);

    bool ok = true;
    for (const auto& r : unit) {
      FractonClass cls(Rational(1) + r);
      if (dual_class(dual_class(cls)) != cls) ok = false;
    }
    ok = ok && dual_class(FractonClass(Rational(1))).h() == Rational(2) &&
         dual_class(FractonClass(Rational(2))).h() == Rational(1);
    add("classes", "dual involution (den <= 20)", ok, ok ? "exact" : "involution violated");

    ok = true;
    for (const auto& r : unit) {
      FillingFactor nu(r);
      FillingFactor mirrored(Rational(2) - r);
      if (class_from_nu(nu) != class_from_nu(mirrored)) ok = false;
    }
    add("classes", "mirror symmetry h(nu) = h(2-nu)", ok, ok ? "exact" : "mirror violated");

    ok = true;
    for (const auto& r : unit) {
      Rational s = r / 2;  // s in (0, 1/2)
      if (FractonClass::from_spin(s) != class_from_nu(FillingFactor(2 * s))) ok = false;
    }
    add("classes", "spin-statistics h = 2-2s vs spectrum", ok, ok ? "exact" : "violated");

    ok = true;
    for (const auto& r : unit) {
      Rational s = r / 2;
      Rational partner = susy_partner_spin(s);
      FractonClass c1 = class_from_nu(FillingFactor(2 * s));
      FractonClass c2 = class_from_nu(FillingFactor(2 * partner));
      if (c2 != dual_class(c1)) ok = false;
    }
    add("classes", "supersymmetric pairs are dual", ok, ok ? "exact" : "violated");

    ok = true;
    for (const auto& r : vd::unit_interval_rationals(12)) {
      FractonClass cls(Rational(1) + r);
      for (const auto& nu : class_members(cls, 4))
        if (class_from_nu(nu) != cls) ok = false;
    }
    add("classes", "band members classify back exactly", ok, ok ? "exact" : "violated");
  }

  if (wants("solver")) {
    double worst = 0.0;
    for (double h : {1.0, 1.5, 2.0}) {
      auto xis = h == 2.0 ? logspace(1.0 + 1e-3, 1e3, 100) : logspace(1e-3, 1e3, 100);
      for (double xi : xis) {
        SolverPoint closed = solve_distribution(h, xi, solve_opt);
        SolverPoint generic = solve_distribution(h, xi, solve_generic);
        worst = std::max(worst, std::abs(generic.Y - closed.Y) / closed.Y);
        worst = std::max(worst, std::abs(generic.n - closed.n) / closed.n);
        if (h == 1.5)
          worst = std::max(worst,
                           std::abs(closed.n - 1.0 / std::sqrt(0.25 + xi * xi)) /
                               (1.0 / std::sqrt(0.25 + xi * xi)));
      }
    }
    add("solver", "generic root matches closed forms", worst <= 1e-10,
        vd::fmt("max rel err %.3g", worst));

    worst = 0.0;
    for (double h : vd::tenth_grid(1.1, 1.9))
      for (double xi : logspace(1e-3, 1e3, 100))
        worst = std::max(worst, partition_identity_defect(solve_distribution(h, xi, solve_generic)));
    add("solver", "partition identity 1/xi = theta^(h-2) - theta^(h-1)", worst <= 1e-10,
        vd::fmt("max defect %.3g", worst));

    worst = 0.0;
    double worst_res = 0.0;
    for (double h : vd::tenth_grid(1.1, 1.9)) {
      for (double xi : logspace(1e-6, 1e6, 60)) {
        SolverPoint pt = solve_distribution(h, xi, solve_generic);
        worst_res = std::max(worst_res, std::abs(pt.residual));
        worst = std::max(worst, std::abs(pt.p + pt.q - 1.0));
        double reconstructed = pt.p / (pt.q + (2.0 - pt.h) * pt.p);
        worst = std::max(worst, std::abs(pt.n - reconstructed) / pt.n);
      }
    }
    add("solver", "solver converges across xi in [1e-6, 1e6]", worst_res <= opt.solver_tolerance,
        vd::fmt("max |log residual| %.3g", worst_res));
    add("solver", "p + q = 1 and n = p/(q+(2-h)p)", worst <= 1e-12, vd::fmt("max defect %.3g", worst));

    bool ok = true;
    for (double h : vd::tenth_grid(1.1, 1.9)) {
      double prev = HUGE_VAL;
      for (double xi : logspace(1e-3, 1e3, 40)) {
        double n = occupation(h, xi, solve_opt);
        if (!(n < prev)) ok = false;
        prev = n;
      }
    }
    for (double xi : {0.5, 2.0, 10.0}) {
      double prev = -HUGE_VAL;
      for (double h : vd::tenth_grid(1.0, xi > 1.0 ? 2.0 : 1.9)) {
        double n = occupation(h, xi, solve_opt);
        if (!(n > prev)) ok = false;
        prev = n;
      }
    }
    add("solver", "occupation monotone in xi and in h", ok, ok ? "strict" : "violated");
  }

  if (wants("entropy")) {
    double worst = 0.0;
    for (int i = 10; i <= 20; ++i) {
      double h = i / 10.0;
      for (double xi : logspace(1e-3, 1e3, 60)) {
        if (h == 2.0 && xi <= 1.0) continue;
        SolverPoint pt = solve_distribution(h, xi, solve_opt);
        double s_n = entropy_from_n(h, pt.n);
        double s_y = entropy_from_Y(pt);
        double s_pq = entropy_from_pq(pt);
        double hi = std::max({s_n, s_y, s_pq});
        double lo = std::min({s_n, s_y, s_pq});
        worst = std::max(worst, (hi - lo) / std::max(hi, 1e-300));
      }
    }
    add("entropy", "three entropy forms agree", worst <= 1e-10, vd::fmt("max rel spread %.3g", worst));

    worst = 0.0;
    for (int G = 1; G <= 30; ++G) {
      for (int N = 0; N <= G; ++N) {
        double lw = log_weight({G, N, 1.0});
        double exact = vd::exact_log_binomial(G, N);
        worst = std::max(worst, std::abs(lw - exact) / std::max(std::abs(exact), 1.0));
      }
      for (int N = 0; N <= 30; ++N) {
        double lw = log_weight({G, N, 2.0});
        double exact = vd::exact_log_binomial(N + G - 1, N);
        worst = std::max(worst, std::abs(lw - exact) / std::max(std::abs(exact), 1.0));
      }
    }
    add("entropy", "weight reduces to (negative) binomial", worst <= 1e-12,
        vd::fmt("max rel err %.3g", worst));

    bool ok = true;
    double worst_gap = 0.0;
    const std::array<std::pair<double, double>, 3> anchors{{{1.0, 0.5}, {1.5, 0.5}, {2.0, 1.0}}};
    for (const auto& [h, n] : anchors) {
      double prev = HUGE_VAL;
      for (long long G : {1000LL, 10000LL, 100000LL, 1000000LL, 10000000LL}) {
        double gap = boltzmann_consistency(h, n, G);
        if (!(gap < prev)) ok = false;
        prev = gap;
      }
      worst_gap = std::max(worst_gap, prev);
      if (prev > 1e-5) ok = false;
    }
    add("entropy", "ln W / G -> S along G = 1e3..1e7", ok, vd::fmt("gap at G=1e7: %.3g", worst_gap));

    worst = 0.0;
    for (double p : {0.1, 0.3, 0.5, 0.7})
      for (long long G : {10LL, 20LL, 50LL})
        worst = std::max(worst, std::abs(normalization_defect(1.0, p, G)));
    add("entropy", "normalization sum W*P = 1 at h = 1", worst <= 1e-12,
        vd::fmt("max |defect| %.3g", worst));

    add("entropy", "normalization defect at h = 3/2 (reported, not asserted)", true,
        vd::fmt2("sum W*P - 1 = %.6g at p = 0.3, G = %g", normalization_defect(1.5, 0.3, 200), 200.0),
        false);
    add("entropy", "normalization defect at h = 2 (reported, not asserted)", true,
        vd::fmt2("sum W*P - 1 = %.6g at p = 0.3, G = %g", normalization_defect(2.0, 0.3, 50), 50.0),
        false);
  }

  if (wants("entanglement")) {
    bool ok = true;
    for (int i = 1; i <= 19; ++i) {
      double p = i * 0.05;
      double e43 = measure(4.0 / 3.0, p);
      double e32 = measure(1.5, p);
      double e53 = measure(5.0 / 3.0, p);
      if (!(e43 < e32 && e32 < e53)) ok = false;
    }
    double v43 = measure(4.0 / 3.0, 0.5), v32 = measure(1.5, 0.5), v53 = measure(5.0 / 3.0, 0.5);
    ok = ok && std::abs(v43 - 1.2) <= 1e-12 && std::abs(v32 - 4.0 / 3.0) <= 1e-12 &&
         std::abs(v53 - 1.5) <= 1e-12;
    add("entanglement", "class ordering E[4/3] < E[3/2] < E[5/3]", ok,
        vd::fmt2("at p = 0.5: %.12g < %.12g < 1.5", v43, v32));

    double worst = -HUGE_VAL;
    for (double h : {4.0 / 3.0, 1.5, 5.0 / 3.0}) {
      for (int i = 2; i <= 18; ++i) {
        double p = i * 0.05;
        double second = measure(h, p - 0.05) - 2.0 * measure(h, p) + measure(h, p + 0.05);
        worst = std::max(worst, second);
      }
    }
    add("entanglement", "concavity of E[h, .] on the 0.05 grid", worst <= 1e-12,
        vd::fmt("max second difference %.3g", worst));

    worst = 0.0;
    for (int i = 1; i <= 19; ++i) worst = std::max(worst, symmetry_defect(1.0, i * 0.05));
    add("entanglement", "fermion symmetry E[1,p] = E[1,1-p]", worst <= 1e-12,
        vd::fmt("max defect %.3g", worst));
    add("entanglement", "symmetry defect for fractons (reported, not asserted)", true,
        vd::fmt("|E[3/2,p] - E[3/2,1-p]| = %.6g at p = 0.25", symmetry_defect(1.5, 0.25)), false);

    auto basis = enumerate_basis(FractonClass(Rational(3, 2)), 3, 4);
    const std::vector<OccupationState> expected{{0, 2, 2}, {1, 1, 2}, {1, 2, 1},
                                                {2, 0, 2}, {2, 1, 1}, {2, 2, 0}};
    ok = basis == expected;
    for (int cap = 1; cap <= 3 && ok; ++cap) {
      FractonClass cls(Rational(2) - Rational(1, cap));
      for (int modes = 1; modes <= 5 && ok; ++modes) {
        for (int particles = 0; particles <= 10 && ok; ++particles) {
          std::size_t count = 0;  // brute force over all capped vectors
          std::vector<int> v(modes, 0);
          for (;;) {
            int sum = 0;
            for (int c : v) sum += c;
            if (sum == particles) ++count;
            int k = modes - 1;
            while (k >= 0 && v[k] == cap) v[k--] = 0;
            if (k < 0) break;
            ++v[k];
          }
          if (enumerate_basis(cls, modes, particles).size() != count) ok = false;
        }
      }
    }
    add("entanglement", "basis enumeration matches brute force", ok,
        ok ? "paper kets and counts reproduced" : "mismatch");

    const double amp = 1.0 / std::sqrt(3.0);
    std::vector<std::complex<double>> ferm(3, {amp, 0.0});
    double total = state_entanglement(1.0, ferm);
    double expected_total = 3.0 * std::log2(3.0) - 2.0;
    add("entanglement", "equal-amplitude fermion state", std::abs(total - expected_total) <= 1e-9,
        vd::fmt2("total %.10g bits, target %.10g", total, expected_total));

    ok = true;
    for (int i = 10; i <= 20; ++i) {
      double h = i / 10.0;
      if (measure(h, 0.0) != 0.0) ok = false;
      if (h < 2.0 && measure(h, 1.0) != 0.0) ok = false;
    }
    add("entanglement", "E[h,0] = E[h,1] = 0", ok, ok ? "exact" : "violated");
  }

  if (wants("fqhe")) {
    const std::array<std::pair<Rational, Rational>, 9> pairs{{{{2, 3}, {3, 2}},
                                                              {{1, 2}, {2, 1}},
                                                              {{1, 3}, {3, 1}},
                                                              {{4, 3}, {3, 2}},
                                                              {{3, 2}, {2, 1}},
                                                              {{5, 3}, {3, 1}},
                                                              {{8, 3}, {3, 2}},
                                                              {{5, 2}, {2, 1}},
                                                              {{7, 3}, {3, 1}}}};
    bool ok = true;
    for (const auto& [nu, n] : pairs)
      if (lll_occupation(FillingFactor(nu)) != n) ok = false;
    for (long long q = 1; q <= 12 && ok; ++q) {
      for (long long p = 1; p <= 4 * q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        if (q == 1 && p % 2 == 0) continue;  // even integers are poles
        FillingFactor nu(p, q);
        Rational lhs = lll_occupation(nu);
        Rational rhs = Rational(1) / (Rational(2) - class_from_nu(nu).h());
        if (lhs != rhs) ok = false;
      }
    }
    add("fqhe", "LLL occupation table and 1/(2-h) identity", ok, ok ? "exact" : "violated");

    ok = true;
    for (int max_den = 2; max_den <= 8; ++max_den) {
      auto graph = farey_graph(max_den, 0);
      std::vector<std::pair<std::size_t, std::size_t>> brute;
      for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < graph.vertices.size(); ++j) {
          long long det = graph.vertices[j].numerator() * graph.vertices[i].denominator() -
                          graph.vertices[i].numerator() * graph.vertices[j].denominator();
          if (std::llabs(det) == 1) brute.emplace_back(i, j);
        }
      if (graph.edges != brute) ok = false;
    }
    add("fqhe", "graph edges equal brute-force unimodular pairs", ok, ok ? "exact" : "violated");

    ok = true;
    for (long long Q = 2; Q <= 8; ++Q) {
      auto graph = farey_graph(static_cast<int>(Q), 0);
      auto seq = verify_detail::farey_sequence_interior(Q);
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        auto a = std::find(graph.vertices.begin(), graph.vertices.end(), FillingFactor(seq[i]));
        auto b = std::find(graph.vertices.begin(), graph.vertices.end(), FillingFactor(seq[i + 1]));
        if (a == graph.vertices.end() || b == graph.vertices.end()) { ok = false; continue; }
        std::size_t ia = static_cast<std::size_t>(a - graph.vertices.begin());
        std::size_t ib = static_cast<std::size_t>(b - graph.vertices.begin());
        auto edge = std::make_pair(std::min(ia, ib), std::max(ia, ib));
        if (std::find(graph.edges.begin(), graph.edges.end(), edge) == graph.edges.end()) ok = false;
      }
    }
    add("fqhe", "adjacent Farey neighbours are connected", ok, ok ? "exact" : "violated");

    ok = true;
    {
      auto graph = farey_graph(9, 0);
      for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        FillingFactor dual = dual_filling(graph.vertices[i]);
        auto it = std::find(graph.vertices.begin(), graph.vertices.end(), dual);
        if (it == graph.vertices.end()) { ok = false; continue; }
        auto j = static_cast<std::size_t>(it - graph.vertices.begin());
        if (graph.class_labels[i].h() + graph.class_labels[j].h() != Rational(3)) ok = false;
      }
    }
    add("fqhe", "dual filling factors appear jointly with dual classes", ok,
        ok ? "exact" : "violated");
  }

  return results;
}

}  // namespace fracton
