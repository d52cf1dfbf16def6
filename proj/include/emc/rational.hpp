#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace emc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p", or a plain decimal such as "0.125" into an exact
/// rational. Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// C(n, k) over the integers; zero when k < 0 or k > n (n >= 0).
Integer binomial(long n, long k);

/// Falling-factorial binomial r(r-1)...(r-j+1)/j! for rational r.
/// Agrees with the integer binomial whenever r is an integer >= 0.
Rational falling_binomial(const Rational& r, int j);

Rational power(const Rational& base, int exponent);

/// Exact r-th root if one exists among the rationals.
std::optional<Rational> exact_root(const Rational& q, int r);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// 10^-e as an exact rational.
Rational ten_to_minus(int e);

/// The fixed constant delta = 10^-10 used throughout the stability argument.
const Rational& stability_delta();

}  // namespace emc
