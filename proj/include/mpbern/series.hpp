#pragma once

#include <span>
#include <vector>

#include "mpbern/rational.hpp"

namespace mpbern {

/// Power series in t truncated after t^order. Coefficients are ordinary
/// (a_n of t^n); egf_coeff() applies the factorial on extraction.
///
/// Binary operations require equal truncation orders and throw
/// std::invalid_argument otherwise.
class Series {
 public:
  /// The zero series of the given order.
  explicit Series(int order);
  /// Missing high coefficients are zero; more than order+1 coefficients is an error.
  Series(int order, std::vector<Rational> coefficients);

  static Series one(int order);
  /// The series t.
  static Series variable(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient, or order()+1 for the zero series.
  int valuation() const;
  /// Drops or zero-pads coefficients to reach new_order.
  Series truncated(int new_order) const;
  Series pow(unsigned exponent) const;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Rational& scalar);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// e^{c t}: coefficients c^n / n!.
Series exp_linear(const Rational& c, int order);

/// Exact quotient num/den where both have t-order at least `shift` and
/// den's t^shift coefficient is nonzero. The result has order
/// num.order() - shift.
Series divide_shifted(const Series& num, const Series& den, int shift);

/// Multiplicative inverse of a series with nonzero constant term.
Series inverse(const Series& s);

/// Sum of outer[m] * inner^m over the available m. inner must have a zero
/// constant term, so only m <= order contributes.
Series compose_vanishing(std::span<const Rational> outer, const Series& inner);

/// n! * a_n.
Rational egf_coeff(const Series& s, int n);

/// Power series in (t, u) truncated to t^order_t and u^order_u.
class BivariateSeries {
 public:
  BivariateSeries(int order_t, int order_u);

  /// e^{ct * t + cu * u}.
  static BivariateSeries exp_linear(const Rational& ct, const Rational& cu, int order_t,
                                    int order_u);

  int order_t() const { return order_t_; }
  int order_u() const { return order_u_; }
  const Rational& at(int i, int j) const { return coeffs_[index(i, j)]; }
  Rational& at(int i, int j) { return coeffs_[index(i, j)]; }

  /// i! j! * coefficient of t^i u^j.
  Rational egf_coeff(int i, int j) const;

  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries inverse(const BivariateSeries& s);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_u_ + 1) +
           static_cast<std::size_t>(j);
  }

  int order_t_;
  int order_u_;
  std::vector<Rational> coeffs_;
};

}  // namespace mpbern
