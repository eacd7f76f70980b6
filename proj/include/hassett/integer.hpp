#ifndef HASSETT_INTEGER_HPP
#define HASSETT_INTEGER_HPP

// Arbitrary-precision scalars usable as Eigen matrix entries.
//
// Boost.Multiprecision numbers carry converting constructor templates that
// confuse Eigen's scalar promotion, so both types are thin value wrappers
// exposing exactly the arithmetic the exact routines need.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hassett {

namespace mp = boost::multiprecision;

class Integer {
 public:
  Integer() = default;
  template <std::integral T>
  Integer(T v) : v_(v) {}  // NOLINT: implicit from built-in integers
  explicit Integer(mp::cpp_int v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal literal; throws std::invalid_argument.
  static Integer parse(std::string_view text);

  const mp::cpp_int& raw() const { return v_; }
  std::string str() const { return v_.str(); }
  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws std::overflow_error

  Integer operator-() const { return Integer(-v_); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
  // Truncating division, as for built-in integers.
  Integer& operator/=(const Integer& o) { v_ /= o.v_; return *this; }
  Integer& operator%=(const Integer& o) { v_ %= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a);

 private:
  mp::cpp_int v_;
};

inline Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }
Integer gcd(const Integer& a, const Integer& b);
/// Floor division (rounds toward negative infinity); divisor nonzero.
Integer floor_div(const Integer& a, const Integer& b);
/// floor(sqrt(a)) for a >= 0.
Integer isqrt(const Integer& a);
inline bool divides(const Integer& d, const Integer& n) {
  return d.is_zero() ? n.is_zero() : (n % d).is_zero();
}

class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(v) {}  // NOLINT
  Rational(const Integer& v) : v_(v.raw()) {}  // NOLINT: exact widening
  Rational(const Integer& num, const Integer& den);

  Integer numerator() const;
  Integer denominator() const;
  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  Integer floor() const;
  Integer ceil() const;
  std::string str() const { return v_.str(); }

  Rational operator-() const { Rational r; r.v_ = -v_; return r; }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

 private:
  mp::cpp_rational v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

}  // namespace hassett

namespace Eigen {

template <>
struct NumTraits<hassett::Integer> : GenericNumTraits<hassett::Integer> {
  using Real = hassett::Integer;
  using NonInteger = hassett::Rational;
  using Literal = hassett::Integer;
  using Nested = hassett::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
};

template <>
struct NumTraits<hassett::Rational> : GenericNumTraits<hassett::Rational> {
  using Real = hassett::Rational;
  using NonInteger = hassett::Rational;
  using Literal = hassett::Rational;
  using Nested = hassett::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 32
  };
};

}  // namespace Eigen

#endif  // HASSETT_INTEGER_HPP
