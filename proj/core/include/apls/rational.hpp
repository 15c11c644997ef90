#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apls {

/// Exact rational number over 64-bit integers. Always normalized
/// (gcd(num, den) == 1, den > 0). Every arithmetic operation is checked and
/// throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  bool is_zero() const { return num_ == 0; }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// Smallest integer >= this.
  std::int64_t ceil() const;
  /// Largest integer <= this.
  std::int64_t floor() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "num/den", or just "num" when den == 1.
  std::string str() const;
  /// Always "num/den" (used in file headers).
  std::string fraction_str() const;

  /// Parses "a/b" or "a". Throws std::invalid_argument on bad input.
  static Rational parse(std::string_view text);

  /// Builds num/den from 128-bit intermediates; throws if the reduced value
  /// does not fit into 64 bits.
  static Rational from_wide(__int128 num, __int128 den);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);
std::int64_t narrow_wide(__int128 v);

}  // namespace apls
