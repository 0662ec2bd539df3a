#include "mpbern/rational.hpp"

#include <cctype>
#include <ostream>

namespace mpbern {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&]() -> std::invalid_argument {
    return std::invalid_argument("invalid rational '" + std::string(text) + "'");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw fail();
  mpz_class p(std::string(num), 10);
  const mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("invalid rational '" + std::string(text) +
                                          "': zero denominator");
  if (negative) p = -p;
  return Rational(p, q);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class out;
  mpq_inv(out.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(out));
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  const Rational base = exponent < 0 ? inverse() : *this;
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime.
  mpq_class out;
  mpz_swap(out.get_num_mpz_t(), num.get_mpz_t());
  mpz_swap(out.get_den_mpz_t(), den.get_mpz_t());
  return Rational(std::move(out));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

}  // namespace mpbern
