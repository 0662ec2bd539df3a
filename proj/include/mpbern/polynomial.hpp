#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mpbern/rational.hpp"

namespace mpbern {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// Trailing zeros are stripped on construction; the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// The polynomial x.
  static Polynomial identity();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero above the degree.
  Rational coefficient(std::size_t i) const;

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Comma-separated coefficients, low to high ("1/2, 1").
  std::string str() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

using InterpolationPoint = std::pair<Rational, Rational>;

/// The unique polynomial of degree < points.size() through every point.
/// Throws std::invalid_argument on an empty list or repeated abscissae.
Polynomial interpolate(std::span<const InterpolationPoint> points);

}  // namespace mpbern
