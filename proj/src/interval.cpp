#include "emc/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace emc {

Interval::Interval(const Rational& lo_, const Rational& hi_) : lo(lo_), hi(hi_) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi: [" + to_string(lo) + ", " + to_string(hi) + "]");
}

Rational Interval::midpoint() const {
  Rational m = (lo + hi) / 2;
  m.canonicalize();
  return m;
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }

Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point() && b.is_point()) return Interval(a.lo * b.lo);
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval power(const Interval& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative interval exponent");
  if (exponent == 0) return Interval(1);
  const Rational l = power(a.lo, exponent);
  const Rational h = power(a.hi, exponent);
  if (exponent % 2 == 1) return Interval(l, h);
  if (a.lo >= 0) return Interval(l, h);
  if (a.hi <= 0) return Interval(h, l);
  return Interval(0, std::max(l, h));
}

Interval max(const Interval& a, const Interval& b) { return Interval(std::max(a.lo, b.lo), std::max(a.hi, b.hi)); }

Interval min(const Interval& a, const Interval& b) { return Interval(std::min(a.lo, b.lo), std::min(a.hi, b.hi)); }

Interval hull(const Interval& a, const Interval& b) { return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi)); }

std::string to_string(const Interval& a) { return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "]"; }

const Interval& Box::operator[](const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return coords[i];
  throw std::invalid_argument("box has no coordinate " + name);
}

std::size_t Box::widest() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < coords.size(); ++i)
    if (coords[i].width() > coords[best].width()) best = i;
  return best;
}

std::pair<Box, Box> Box::bisect(std::size_t coordinate) const {
  if (coordinate >= coords.size()) throw std::invalid_argument("bisect: coordinate out of range");
  const Rational mid = coords[coordinate].midpoint();
  Box left = *this, right = *this;
  left.coords[coordinate] = Interval(coords[coordinate].lo, mid);
  right.coords[coordinate] = Interval(mid, coords[coordinate].hi);
  return {left, right};
}

std::vector<Rational> Box::center() const {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (const auto& iv : coords) c.push_back(iv.midpoint());
  return c;
}

Rational Box::volume() const {
  Rational v = 1;
  for (const auto& iv : coords) v *= iv.width();
  return v;
}

}  // namespace emc
