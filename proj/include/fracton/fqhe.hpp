#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fracton/classes.hpp"

namespace fracton {

/// A quantum Hall transition nu1 = p1/q1 -> nu2 = p2/q2 is allowed iff
/// |p2 q1 - p1 q2| = 1 (the fractions are Farey/unimodular neighbours).
inline bool transition_allowed(const FillingFactor& nu1, const FillingFactor& nu2) {
  long long det = nu2.numerator() * nu1.denominator() - nu1.numerator() * nu2.denominator();
  return det == 1 || det == -1;
}

/// Undirected graph of allowed transitions between the filling factors of
/// one band.  Vertices are ascending; class_labels is parallel to vertices.
struct TransitionGraph {
  std::vector<FillingFactor> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // index pairs, i < j
  std::vector<FractonClass> class_labels;
};

/// All reduced rationals in the open band (band, band+1) with denominator
/// up to max_denominator, plus every allowed transition among them.
inline TransitionGraph farey_graph(int max_denominator, int band) {
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be positive");
  if (band < 0) throw std::invalid_argument("band must be non-negative");

  TransitionGraph graph;
  for (long long q = 2; q <= max_denominator; ++q) {
    for (long long p = static_cast<long long>(band) * q + 1; p < (band + 1LL) * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      graph.vertices.emplace_back(p, q);
    }
  }
  std::sort(graph.vertices.begin(), graph.vertices.end());

  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < graph.vertices.size(); ++j)
      if (transition_allowed(graph.vertices[i], graph.vertices[j])) graph.edges.emplace_back(i, j);

  graph.class_labels.reserve(graph.vertices.size());
  for (const auto& nu : graph.vertices) graph.class_labels.push_back(class_from_nu(nu));
  return graph;
}

/// Average occupation in the lowest Landau level as a function of the
/// filling factor, mirrored about even integers: 1/nu on (0,1), 1/(2-nu)
/// on (1,2), 1/(nu-2) on (2,3), and so on.  Even integers are poles.
inline Rational lll_occupation(const FillingFactor& nu) {
  Rational r = nu.value() - Rational(2 * floor_div(rational_floor(nu.value()), 2));
  if (r == Rational(0))
    throw std::domain_error("occupation diverges at even integer filling factor " + to_string(nu));
  if (r <= Rational(1)) return Rational(1) / r;
  return Rational(1) / (Rational(2) - r);
}

struct ClassOccupationRow {
  FractonClass cls;
  FillingFactor nu;
  Rational n;
};

/// The (h, nu, n) table for a list of classes over the first `bands` bands.
/// Every member of one class shares the same occupation 1/(2-h).
inline std::vector<ClassOccupationRow> class_occupation_table(std::span<const FractonClass> classes,
                                                              int bands) {
  std::vector<ClassOccupationRow> rows;
  rows.reserve(classes.size() * static_cast<std::size_t>(bands));
  for (const auto& cls : classes) {
    if (cls.is_boundary())
      throw std::domain_error("occupation table requires 1 < h < 2, got h = " + to_string(cls.h()));
    for (const auto& nu : class_members(cls, bands))
      rows.push_back({cls, nu, lll_occupation(nu)});
  }
  return rows;
}

/// DOT rendering with vertex labels "p/q [h=a/b]".
inline std::string to_dot(const TransitionGraph& graph) {
  std::string out = "graph farey {\n";
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    out += "  \"" + to_string(graph.vertices[i]) + "\" [label=\"" + to_string(graph.vertices[i]) +
           " [h=" + to_string(graph.class_labels[i].h()) + "]\"];\n";
  }
  for (const auto& [i, j] : graph.edges) {
    out += "  \"" + to_string(graph.vertices[i]) + "\" -- \"" + to_string(graph.vertices[j]) +
           "\";\n";
  }
  out += "}\n";
  return out;
}

inline std::string occupation_table_csv(std::span<const ClassOccupationRow> rows) {
  std::string out = "h,nu,n\n";
  for (const auto& row : rows)
    out += to_string(row.cls.h()) + "," + to_string(row.nu) + "," + to_string(row.n) + "\n";
  return out;
}

}  // namespace fracton
