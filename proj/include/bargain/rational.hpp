#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bargain {

using Int = boost::multiprecision::cpp_int;

namespace detail {
using RationalRep = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
}

/// Arbitrary-precision rational, always in lowest terms with denominator > 0.
/// All solver arithmetic runs on this type; nothing downstream ever rounds.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(detail::RationalRep(num) / detail::RationalRep(den)) {}
  explicit Rational(const detail::RationalRep& rep) : v_(rep) {}

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  double to_double() const { return v_.convert_to<double>(); }

  /// Exact conversion; every finite double is a dyadic rational.
  static Rational from_double(double d);

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(a.v_ / b.v_); }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_.compare(b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c == 0 ? std::strong_ordering::equal : std::strong_ordering::greater);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  detail::RationalRep v_;
};

Rational abs(const Rational& r);

/// Largest integer <= r.
Int floor(const Rational& r);

/// 2^k for any (possibly negative) k.
Rational pow2(long k);

/// ceil(log2 v) for v >= 1.
long ceil_log2(const Int& v);

/// Canonical text form: plain decimal for integers, "p/q" otherwise.
std::string format_rational(const Rational& r);

/// Accepts an optionally signed decimal integer or "p/q" with integer parts.
/// Throws std::invalid_argument on anything else (including q = 0).
Rational parse_rational(std::string_view text);

}  // namespace bargain

namespace Eigen {

template <>
struct NumTraits<bargain::Rational> : GenericNumTraits<bargain::Rational> {
  typedef bargain::Rational Real;
  typedef bargain::Rational NonInteger;
  typedef bargain::Rational Nested;
  typedef bargain::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 12,
  };
  static inline Real epsilon() { return bargain::Rational(0); }
  static inline Real dummy_precision() { return bargain::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace bargain {

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector2r = Eigen::Matrix<Rational, 2, 1>;

}  // namespace bargain
