#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hirz {

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() : num_(0), den_(1) {}
  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT(implicit)
  explicit Rational(Integer value) : num_(std::move(value)), den_(1) {}
  Rational(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  Rational operator-() const;

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  /// "p/q", or just "p" when integral.
  std::string str() const;
  /// Decimal expansion, exact when terminating, otherwise cut at
  /// `max_fraction_digits` and suffixed with "...".
  std::string decimal(int max_fraction_digits = 12) const;

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// True iff the integer fits in int64; writes it to `out` when it does.
bool fits_int64(const Rational::Integer& value, std::int64_t& out);

}  // namespace hirz
