#pragma once

#include "emc/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace emc {

/// Closed interval with exact rational endpoints. Arithmetic is exact, so
/// every result encloses the true range of the operation.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(const Rational& point) : lo(point), hi(point) {}  // NOLINT: implicit by design
  Interval(long point) : lo(point), hi(point) {}              // NOLINT
  Interval(const Rational& lo_, const Rational& hi_);

  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const;
  bool is_point() const { return lo == hi; }
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);

/// Tight range of x^e (even powers of a zero-straddling interval start at 0).
Interval power(const Interval& a, int exponent);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);
/// Smallest interval containing both.
Interval hull(const Interval& a, const Interval& b);

std::string to_string(const Interval& a);

/// A box of named interval coordinates. `region_tag` names the piece of a
/// piecewise definition the box lives in ("mixed" when it straddles).
struct Box {
  std::vector<std::string> names;
  std::vector<Interval> coords;
  std::string region_tag;

  const Interval& operator[](const std::string& name) const;
  std::size_t dimension() const { return coords.size(); }
  /// Widest coordinate; ties go to the lowest index.
  std::size_t widest() const;
  std::pair<Box, Box> bisect(std::size_t coordinate) const;
  std::vector<Rational> center() const;
  Rational volume() const;

  friend bool operator==(const Box&, const Box&) = default;
};

}  // namespace emc
