#include "hirz/rational.hpp"

#include <limits>
#include <ostream>
#include <sstream>

#include <boost/multiprecision/integer.hpp>

#include "hirz/errors.hpp"

namespace hirz {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw PreconditionError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw PreconditionError("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  Rational::Integer lhs = x.num_ * y.den_;
  Rational::Integer rhs = y.num_ * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rational::decimal(int max_fraction_digits) const {
  Integer n = num_;
  std::string out;
  if (n < 0) {
    out += "-";
    n = -n;
  }
  Integer whole = n / den_;
  Integer rem = n % den_;
  out += whole.str();
  if (rem == 0) return out;
  out += ".";
  for (int i = 0; i < max_fraction_digits && rem != 0; ++i) {
    rem *= 10;
    Integer digit = rem / den_;
    rem %= den_;
    out += digit.str();
  }
  if (rem != 0) out += "...";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

bool fits_int64(const Rational::Integer& value, std::int64_t& out) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    return false;
  out = static_cast<std::int64_t>(value);
  return true;
}

}  // namespace hirz
