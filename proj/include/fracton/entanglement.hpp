#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <istream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracton/classes.hpp"

namespace fracton {

/// Per-mode occupation counts of one basis ket, e.g. {1,2,1} for |121>.
using OccupationState = std::vector<int>;

inline double binary_entropy_bits(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

/// Occupation-number entanglement kernel of class h at probability p:
/// E[h,p] = H2(p) / (1 - (h-1) p) in bits, with 0 log 0 := 0 at the
/// boundaries.  At h = 1 this is the plain binary entropy.
inline double measure(double h, double p) {
  if (!(h >= 1.0 && h <= 2.0)) throw std::domain_error("class parameter h must lie in [1, 2]");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability p must lie in [0, 1]");
  double denom = 1.0 - (h - 1.0) * p;
  if (!(denom > 0.0))
    throw std::domain_error("pole of the entanglement measure: (h-1) p must stay below 1");
  return binary_entropy_bits(p) / denom;
}

/// The same kernel parametrized by a band-0 filling factor: E[2-nu, p].
/// nu = 1 is admitted as the fermion limit.
inline double measure_by_filling(double nu, double p) {
  if (!(nu > 0.0 && nu <= 1.0))
    throw std::domain_error(
        "measure_by_filling expects nu in (0, 1]; map other bands through the fractal spectrum first");
  return measure(2.0 - nu, p);
}

/// |E[h,p] - E[h,1-p]|.  Identically zero only at h = 1; for fractons the
/// denominator breaks the p <-> 1-p symmetry, and this reports by how much.
inline double symmetry_defect(double h, double p) {
  return std::abs(measure(h, p) - measure(h, 1.0 - p));
}

/// Total entanglement of a normalized amplitude vector: the mode-sum
/// Sum_i E[h, |c_i|^2] in bits.
inline double state_entanglement(double h, std::span<const std::complex<double>> amplitudes) {
  double norm2 = 0.0;
  for (const auto& c : amplitudes) norm2 += std::norm(c);
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw std::invalid_argument("amplitudes are not normalized: sum |c|^2 = " + std::to_string(norm2));
  double total = 0.0;
  for (const auto& c : amplitudes) total += measure(h, std::norm(c));
  return total;
}

/// All occupation vectors of `modes` modes holding `particles` particles
/// with each mode capped at 1/(2-h), in lexicographic order.  Only classes
/// with an integer cap (h = 2 - 1/m) enumerate; an infeasible particle
/// count yields an empty list.
inline std::vector<OccupationState> enumerate_basis(const FractonClass& cls, int modes,
                                                    int particles) {
  auto cap = cls.integer_cap();
  if (!cap)
    throw std::domain_error("class h = " + to_string(cls.h()) +
                            " has no integer occupation cap; basis enumeration is unsupported");
  if (modes < 1) throw std::invalid_argument("modes must be positive");
  if (particles < 0) throw std::invalid_argument("particles must be non-negative");

  std::vector<OccupationState> basis;
  OccupationState current(static_cast<std::size_t>(modes), 0);
  auto recurse = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == modes) {
      if (remaining == 0) basis.push_back(current);
      return;
    }
    int limit = static_cast<int>(std::min<long long>(*cap, remaining));
    for (int c = 0; c <= limit; ++c) {
      current[static_cast<std::size_t>(mode)] = c;
      self(self, mode + 1, remaining - c);
    }
    current[static_cast<std::size_t>(mode)] = 0;
  };
  recurse(recurse, 0, particles);
  return basis;
}

inline std::string ket_string(const OccupationState& state) {
  std::string s;
  s.reserve(state.size());
  for (int c : state) {
    if (c < 0 || c > 9) throw std::invalid_argument("ket digits must be single decimal digits");
    s.push_back(static_cast<char>('0' + c));
  }
  return s;
}

/// One line of the amplitude text format: `<occupation-string> <re> [<im>]`.
struct AmplitudeEntry {
  OccupationState ket;
  std::complex<double> amplitude;
  int line = 0;
};

/// Reads the amplitude text format; `#` starts a comment, blank lines are
/// skipped.  Occupation strings are one decimal digit per mode.
inline std::vector<AmplitudeEntry> read_amplitudes(std::istream& in) {
  std::vector<AmplitudeEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string ket;
    if (!(fields >> ket)) continue;
    double re = 0.0, im = 0.0;
    if (!(fields >> re))
      throw std::invalid_argument("line " + std::to_string(line_no) + ": missing amplitude");
    fields >> im;  // imaginary part optional, defaults to 0
    std::string extra;
    if (fields >> extra)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing fields");

    AmplitudeEntry entry;
    entry.line = line_no;
    entry.amplitude = {re, im};
    entry.ket.reserve(ket.size());
    for (char ch : ket) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": occupation string must be decimal digits, got '" + ket + "'");
      entry.ket.push_back(ch - '0');
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

/// Validates entries against a basis and returns the amplitude vector in
/// basis order; kets absent from the file get amplitude zero.  Unknown or
/// duplicated kets fail, naming the offending line.
inline std::vector<std::complex<double>> align_to_basis(
    const std::vector<AmplitudeEntry>& entries, const std::vector<OccupationState>& basis) {
  std::vector<std::complex<double>> amplitudes(basis.size(), {0.0, 0.0});
  std::vector<bool> seen(basis.size(), false);
  for (const auto& entry : entries) {
    auto it = std::find(basis.begin(), basis.end(), entry.ket);
    if (it == basis.end())
      throw std::invalid_argument("line " + std::to_string(entry.line) + ": ket |" +
                                  ket_string(entry.ket) + "> is not in the basis");
    auto idx = static_cast<std::size_t>(it - basis.begin());
    if (seen[idx])
      throw std::invalid_argument("line " + std::to_string(entry.line) + ": duplicate ket |" +
                                  ket_string(entry.ket) + ">");
    seen[idx] = true;
    amplitudes[idx] = entry.amplitude;
  }
  return amplitudes;
}

}  // namespace fracton
