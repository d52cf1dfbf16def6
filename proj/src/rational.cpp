#include "emc/rational.hpp"

#include <stdexcept>

namespace emc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!all_digits(frac)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    Integer w = (whole.empty() || whole == "-" || whole == "+") ? Integer(0) : parse_integer(whole);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational q(Integer(std::string(frac)), scale);
    q.canonicalize();
    Rational result = abs(Rational(w)) + q;
    return negative ? Rational(-result) : result;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial with negative n");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational falling_binomial(const Rational& r, int j) {
  if (j < 0) return 0;
  Rational num = 1;
  Integer fact = 1;
  for (int i = 0; i < j; ++i) {
    num *= r - i;
    fact *= i + 1;
  }
  return num / Rational(fact);
}

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return 1 / power(base, -exponent);
  }
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  result.canonicalize();
  return result;
}

std::optional<Rational> exact_root(const Rational& q, int r) {
  if (r <= 0) throw std::invalid_argument("root order must be positive");
  if (q < 0 && r % 2 == 0) return std::nullopt;
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), r) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), r) == 0) return std::nullopt;
  Rational result(q < 0 ? Integer(-rn) : rn, rd);
  result.canonicalize();
  return result;
}

Rational ten_to_minus(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational q = e >= 0 ? Rational(1, p) : Rational(p);
  q.canonicalize();
  return q;
}

const Rational& stability_delta() {
  static const Rational delta = ten_to_minus(10);
  return delta;
}

}  // namespace emc
