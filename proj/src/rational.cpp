#include "bargain/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace bargain {

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("from_double: value is not finite");
  if (d == 0.0) return Rational(0);
  int exp = 0;
  // 2^53 * frac is integral for any finite double.
  const double frac = std::frexp(d, &exp);
  const auto mant = static_cast<long long>(std::ldexp(frac, 53));
  exp -= 53;
  Rational r(mant);
  return exp >= 0 ? r * pow2(exp) : r / pow2(-exp);
}

std::string Rational::str() const { return format_rational(*this); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << format_rational(r); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Int floor(const Rational& r) {
  Int q = r.numerator() / r.denominator();
  if (r.sign() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

Rational pow2(long k) {
  Int p = Int(1) << static_cast<unsigned>(k >= 0 ? k : -k);
  return k >= 0 ? Rational(p) : Rational(Int(1), p);
}

long ceil_log2(const Int& v) {
  if (v < 1) throw std::invalid_argument("ceil_log2: argument must be >= 1");
  const long bits = static_cast<long>(boost::multiprecision::msb(v));
  const bool power_of_two = (v & (v - 1)) == 0;
  return power_of_two ? bits : bits + 1;
}

std::string format_rational(const Rational& r) {
  std::string s = r.numerator().str();
  if (!r.is_integer()) {
    s += '/';
    s += r.denominator().str();
  }
  return s;
}

namespace {

Int parse_integer(std::string_view text, std::string_view whole) {
  bool neg = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("not a rational: \"" + std::string(whole) + "\"");
  Int v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("not a rational: \"" + std::string(whole) + "\"");
    v = v * 10 + (ch - '0');
  }
  return neg ? Int(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Int num = parse_integer(text.substr(0, slash), text);
  const Int den = parse_integer(text.substr(slash + 1), text);
  if (den <= 0)
    throw std::invalid_argument("rational denominator must be positive: \"" + std::string(text) + "\"");
  return Rational(num, den);
}

}  // namespace bargain
