#include "hassett/integer.hpp"

#include <boost/multiprecision/integer.hpp>

#include <limits>
#include <ostream>
#include <stdexcept>

namespace hassett {

Integer Integer::parse(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  const bool negative = text[0] == '-';
  mp::cpp_int v(std::string(text.substr(i)));
  return Integer(negative ? mp::cpp_int(-v) : v);
}

bool Integer::fits_int64() const {
  return v_ >= std::numeric_limits<std::int64_t>::min() &&
         v_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer exceeds 64 bits: " + str());
  return v_.convert_to<std::int64_t>();
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

Integer gcd(const Integer& a, const Integer& b) {
  return Integer(mp::gcd(a.raw(), b.raw()));
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (!(a % b).is_zero() && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Integer isqrt(const Integer& a) {
  if (a.sign() < 0) throw std::domain_error("isqrt of negative value");
  return Integer(mp::sqrt(a.raw()));
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  v_ = mp::cpp_rational(num.raw(), den.raw());
}

Integer Rational::numerator() const { return Integer(mp::numerator(v_)); }
Integer Rational::denominator() const { return Integer(mp::denominator(v_)); }

Integer Rational::floor() const { return floor_div(numerator(), denominator()); }

Integer Rational::ceil() const { return -floor_div(-numerator(), denominator()); }

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

}  // namespace hassett
