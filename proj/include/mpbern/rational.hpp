#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mpbern {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator. Zero is 0/1, so equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(mpz_class(static_cast<long>(value))) {}  // NOLINT

  explicit Rational(const mpz_class& value) : value_(value) {}
  /// Unevaluated integer expressions such as a * b on mpz_class.
  template <class Expr>
  explicit Rational(const __gmp_expr<mpz_t, Expr>& value) : value_(mpz_class(value)) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses "p", "-p", "+p" or "p/q" (q > 0). No whitespace is accepted.
  static Rational parse(std::string_view text);

  std::string str() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational inverse() const;
  /// Integer power; negative exponents invert first. 0^0 is 1.
  Rational pow(long exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& gmp() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

enum class ArithOp { add, sub, mul, div };

/// Single dispatch over the four field operations. Division by zero throws
/// DivisionByZero.
Rational rational_arith(const Rational& a, const Rational& b, ArithOp op);

}  // namespace mpbern
