#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fracton/grid.hpp"
#include "fracton/solver.hpp"
#include "oracles.hpp"

using fracton::occupation;
using fracton::partition_identity_defect;
using fracton::solve_distribution;
using fracton::SolveOptions;
using fracton::SolverPoint;
using fracton::StatisticalPoint;
using fracton::step_distribution;

TEST_CASE("closed forms at the anchor classes") {
  SolverPoint half = solve_distribution(1.5, 1.0);
  CHECK_THAT(half.Y, Catch::Matchers::WithinRel(0.5 * (3.0 + std::sqrt(5.0)), 1e-14));
  CHECK_THAT(half.n, Catch::Matchers::WithinRel(2.0 / std::sqrt(5.0), 1e-14));
  CHECK_THAT(half.n, Catch::Matchers::WithinRel(oracles::half_class_occupation(1.0), 1e-14));

  CHECK_THAT(occupation(1.0, 1.0), Catch::Matchers::WithinRel(0.5, 1e-14));
  CHECK_THAT(occupation(2.0, 2.0), Catch::Matchers::WithinRel(1.0, 1e-14));
  CHECK_THAT(occupation(1.0, std::exp(1.0)),
             Catch::Matchers::WithinRel(1.0 / (std::exp(1.0) + 1.0), 1e-14));
}

TEST_CASE("generic root-finder agrees with the closed-form oracles") {
  SolveOptions forced;
  forced.force_generic = true;
  for (double xi : fracton::logspace(1e-3, 1e3, 25)) {
    CAPTURE(xi);
    SolverPoint fermi = solve_distribution(1.0, xi, forced);
    CHECK_THAT(fermi.Y, Catch::Matchers::WithinRel(oracles::fermi_dirac_Y(xi), 1e-10));
    CHECK_THAT(fermi.n, Catch::Matchers::WithinRel(oracles::fermi_dirac_occupation(xi), 1e-10));

    SolverPoint half = solve_distribution(1.5, xi, forced);
    CHECK_THAT(half.Y, Catch::Matchers::WithinRel(oracles::half_class_Y(xi), 1e-10));
    CHECK_THAT(half.n, Catch::Matchers::WithinRel(oracles::half_class_occupation(xi), 1e-10));

    if (xi > 1.0) {
      SolverPoint bose = solve_distribution(2.0, xi, forced);
      CHECK_THAT(bose.Y, Catch::Matchers::WithinRel(oracles::bose_einstein_Y(xi), 1e-10));
      CHECK_THAT(bose.n, Catch::Matchers::WithinRel(oracles::bose_einstein_occupation(xi), 1e-10));
    }
  }
}

TEST_CASE("solved points satisfy the defining product directly") {
  for (double h : {1.2, 1.5, 1.7}) {
    for (double xi : {0.01, 0.5, 1.0, 30.0}) {
      CAPTURE(h, xi);
      SolverPoint pt = solve_distribution(h, xi);
      CHECK_THAT(oracles::transcendental_product(h, pt.Y), Catch::Matchers::WithinRel(xi, 1e-10));
    }
  }
}

TEST_CASE("deep-occupation limit reaches the class cap 1/(2-h)") {
  CHECK_THAT(occupation(4.0 / 3.0, 1e-9), Catch::Matchers::WithinRel(1.5, 1e-9));
  CHECK_THAT(occupation(1.5, 1e-9), Catch::Matchers::WithinRel(2.0, 1e-9));
  CHECK_THAT(occupation(5.0 / 3.0, 1e-9), Catch::Matchers::WithinRel(3.0, 1e-9));
}

TEST_CASE("occupation is monotone in fugacity and in class") {
  for (double h : {1.0, 1.3, 1.8}) {
    double prev = HUGE_VAL;
    for (double xi : fracton::logspace(1e-4, 1e4, 30)) {
      double n = occupation(h, xi);
      CHECK(n < prev);
      prev = n;
    }
  }
  // bosons exceed fermions at equal fugacity
  for (double xi : {1.5, 3.0, 50.0}) {
    double prev = -HUGE_VAL;
    for (double h : {1.0, 1.25, 1.5, 1.75, 2.0}) {
      double n = occupation(h, xi);
      CHECK(n > prev);
      prev = n;
    }
  }
}

TEST_CASE("partition-function identity holds at solved points") {
  CHECK(partition_identity_defect(solve_distribution(1.5, 1.0)) <= 1e-10);
  CHECK(partition_identity_defect(solve_distribution(1.0, 5.0)) <= 1e-14);
  CHECK(partition_identity_defect(solve_distribution(1.7, 0.01)) <= 1e-10);

  SolveOptions forced;
  forced.force_generic = true;
  for (double h : {1.1, 1.5, 1.9}) {
    for (double xi : fracton::logspace(1e-6, 1e6, 25)) {
      CAPTURE(h, xi);
      CHECK(partition_identity_defect(solve_distribution(h, xi, forced)) <= 1e-10);
    }
  }
}

TEST_CASE("microstate probabilities are consistent with the occupation") {
  for (double h : {1.0, 1.4, 1.9}) {
    for (double xi : fracton::logspace(1e-5, 1e5, 21)) {
      SolverPoint pt = solve_distribution(h, xi);
      CHECK(std::abs(pt.p + pt.q - 1.0) <= 1e-12);
      CHECK_THAT(pt.p / (pt.q + (2.0 - h) * pt.p), Catch::Matchers::WithinRel(pt.n, 1e-12));
      CHECK(pt.Y > 2.0);
      CHECK(pt.theta > 0.0);
      CHECK(pt.theta < 1.0);
    }
  }
}

TEST_CASE("degraded tolerance degrades the identity (diagnostic hook)") {
  SolveOptions sloppy;
  sloppy.tolerance = 1e-2;
  sloppy.force_generic = true;
  double worst = 0.0;
  for (double xi : fracton::logspace(1e-3, 1e3, 20))
    worst = std::max(worst, partition_identity_defect(solve_distribution(1.3, xi, sloppy)));
  CHECK(worst > 1e-8);
}

TEST_CASE("statistical point computes the fugacity variable") {
  StatisticalPoint at_mu{1.0, 1.0, 0.5};
  CHECK(at_mu.xi() == 1.0);
  CHECK_THAT(occupation(1.0, at_mu), Catch::Matchers::WithinRel(0.5, 1e-14));

  StatisticalPoint kelvin{2.0, 1.0, 1.0};
  CHECK_THAT(kelvin.xi(), Catch::Matchers::WithinRel(std::exp(1.0), 1e-14));

  CHECK_THROWS_AS((StatisticalPoint{1.0, 0.0, 0.0}.xi()), std::domain_error);
  CHECK_THROWS_AS((StatisticalPoint{1.0, 0.0, -1.0}.xi()), std::domain_error);
}

TEST_CASE("solver rejects out-of-domain input") {
  CHECK_THROWS_AS(solve_distribution(0.9, 1.0), std::domain_error);
  CHECK_THROWS_AS(solve_distribution(2.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(solve_distribution(1.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(solve_distribution(1.5, -2.0), std::domain_error);
  CHECK_THROWS_AS(solve_distribution(1.5, std::nan("")), std::domain_error);
  CHECK_THROWS_WITH(solve_distribution(2.0, 0.5), Catch::Matchers::ContainsSubstring("Bose"));
  CHECK_THROWS_WITH(solve_distribution(2.0, 1.0), Catch::Matchers::ContainsSubstring("Bose"));
}

TEST_CASE("zero-temperature step distribution") {
  CHECK(step_distribution(5.0 / 3.0, 0.5, 1.0) == 3.0);
  CHECK(step_distribution(1.0, 0.5, 1.0) == 1.0);
  CHECK(step_distribution(1.5, 2.0, 1.0) == 0.0);
  // left-continuous convention at the Fermi energy
  CHECK(step_distribution(1.5, 1.0, 1.0) == 2.0);
  CHECK_THROWS_AS(step_distribution(2.0, 0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(step_distribution(0.5, 0.5, 1.0), std::domain_error);
}
