#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fracton/rational.hpp"

namespace fracton {

/// A universal class of fractional-spin particles, labelled by its
/// Hausdorff dimension h in [1, 2].  h = 1 is the fermion limit, h = 2 the
/// boson limit, everything in between carries fractional spin s = (2-h)/2.
/// All algebra on classes is exact rational arithmetic; conversion to
/// floating point happens only through h_value().
class FractonClass {
 public:
  explicit FractonClass(Rational h) : h_(std::move(h)) {
    if (h_ < Rational(1) || h_ > Rational(2))
      throw std::domain_error("Hausdorff dimension must lie in [1, 2], got " + fracton::to_string(h_));
  }

  /// Class of a particle with spin s in [0, 1/2]: h = 2 - 2s.
  static FractonClass from_spin(const Rational& s) {
    if (s < Rational(0) || s > Rational(1, 2))
      throw std::domain_error("spin must lie in [0, 1/2], got " + fracton::to_string(s));
    return FractonClass(Rational(2) - 2 * s);
  }

  const Rational& h() const { return h_; }
  Rational spin() const { return (Rational(2) - h_) / 2; }
  Rational statistical_parameter() const { return Rational(2) - h_; }

  /// Fermion or boson limit (integer sequences instead of a fractal band).
  bool is_boundary() const { return h_ == Rational(1) || h_ == Rational(2); }

  /// Per-mode occupation cap 1/(2-h) when it is a positive integer
  /// (h = 1 -> 1, h = 3/2 -> 2, h = 5/3 -> 3, ...); empty otherwise,
  /// including the boson limit where the cap diverges.
  std::optional<long long> integer_cap() const {
    if (h_ == Rational(2)) return std::nullopt;
    Rational cap = Rational(1) / (Rational(2) - h_);
    if (cap.denominator() != 1) return std::nullopt;
    return cap.numerator();
  }

  /// Dual class under the involution h -> 3 - h.
  FractonClass dual() const { return FractonClass(Rational(3) - h_); }

  /// The single narrowing conversion to the floating-point modules.
  double h_value() const { return to_double(h_); }

  friend bool operator==(const FractonClass&, const FractonClass&) = default;

 private:
  Rational h_;
};

/// A reduced positive rational filling factor nu = p/q.
class FillingFactor {
 public:
  FillingFactor(long long numerator, long long denominator)
      : value_(numerator, denominator) {
    check();
  }
  explicit FillingFactor(Rational value) : value_(std::move(value)) { check(); }

  const Rational& value() const { return value_; }
  long long numerator() const { return value_.numerator(); }
  long long denominator() const { return value_.denominator(); }

  friend bool operator==(const FillingFactor&, const FillingFactor&) = default;
  friend bool operator<(const FillingFactor& a, const FillingFactor& b) {
    return a.value_ < b.value_;
  }

 private:
  void check() const {
    if (value_ <= Rational(0))
      throw std::domain_error("filling factor must be positive, got " + fracton::to_string(value_));
  }
  Rational value_;
};

inline std::string to_string(const FillingFactor& nu) { return to_string(nu.value()); }

/// Classifies a filling factor through the banded mirror spectrum: with
/// t = nu - floor(nu), even bands give h = 2 - t and odd bands h = 1 + t.
/// Integer nu sits on a band boundary where both one-sided limits agree:
/// odd integers map to h = 1, even integers to h = 2.
inline FractonClass class_from_nu(const FillingFactor& nu) {
  const Rational& v = nu.value();
  long long band = rational_floor(v);
  Rational t = v - Rational(band);
  if (t == Rational(0)) {
    // nu is the band boundary itself
    return FractonClass(Rational(band % 2 == 1 ? 1 : 2));
  }
  if (band % 2 == 0) return FractonClass(Rational(2) - t);
  return FractonClass(Rational(1) + t);
}

/// The first `band_count` members of a class: for each band k there is one
/// filling factor in (k, k+1) with class h.  The boundary classes collapse
/// to integer sequences (odd integers for h = 1, even for h = 2).
inline std::vector<FillingFactor> class_members(const FractonClass& cls, int band_count) {
  if (band_count < 0) throw std::invalid_argument("band_count must be non-negative");
  std::vector<FillingFactor> members;
  members.reserve(static_cast<std::size_t>(band_count));
  for (int k = 0; k < band_count; ++k) {
    Rational nu;
    if (cls.h() == Rational(1)) {
      nu = Rational(2 * k + 1);
    } else if (cls.h() == Rational(2)) {
      nu = Rational(2 * k + 2);
    } else if (k % 2 == 0) {
      nu = Rational(k) + (Rational(2) - cls.h());
    } else {
      nu = Rational(k) + (cls.h() - Rational(1));
    }
    members.emplace_back(nu);
  }
  return members;
}

inline FractonClass dual_class(const FractonClass& cls) { return cls.dual(); }

/// Band-0 partner of a band-0 filling factor: 1 - nu, whose class is the
/// dual of nu's class.  Other bands go through class_members of the dual.
inline FillingFactor dual_filling(const FillingFactor& nu) {
  if (nu.value() >= Rational(1))
    throw std::domain_error(
        "dual_filling expects nu in (0, 1); for higher bands take class_members of the dual class");
  return FillingFactor(Rational(1) - nu.value());
}

/// Supersymmetric partner spin: (s, s + 1/2) label dual classes.
inline Rational susy_partner_spin(const Rational& s) {
  if (s <= Rational(0) || s >= Rational(1, 2))
    throw std::domain_error("partner spin is defined for s in (0, 1/2), got " + fracton::to_string(s));
  return s + Rational(1, 2);
}

}  // namespace fracton
