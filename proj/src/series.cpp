#include "mpbern/series.hpp"

#include <stdexcept>
#include <string>

#include "mpbern/combinatorics.hpp"

namespace mpbern {

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series truncation order mismatch: " + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()));
  }
}

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("series truncation order must be >= 0");
}

}  // namespace

Series::Series(int order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(int order, std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  require_order(order);
  if (coeffs_.size() > static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("more coefficients than truncation order allows");
  }
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::one(int order) {
  Series s(order);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::variable(int order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

int Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return order() + 1;
}

Series Series::truncated(int new_order) const {
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + std::min<std::ptrdiff_t>(new_order + 1, coeffs_.size()));
  return Series(new_order, std::move(c));
}

Series Series::pow(unsigned exponent) const {
  Series result = one(order());
  Series base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

Series& Series::operator+=(const Series& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  const std::size_t n = a.coeffs_.size();
  Series out(a.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

Series exp_linear(const Rational& c, int order) {
  require_order(order);
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = 1;
  for (int n = 1; n <= order; ++n) coeffs[n] = coeffs[n - 1] * c / Rational(n);
  return Series(order, std::move(coeffs));
}

Series divide_shifted(const Series& num, const Series& den, int shift) {
  require_same_order(num, den);
  if (shift < 0 || shift > num.order()) {
    throw std::invalid_argument("divide_shifted: shift " + std::to_string(shift) +
                                " outside truncation order " + std::to_string(num.order()));
  }
  if (den.valuation() != shift) {
    throw std::invalid_argument("divide_shifted: denominator t-order is " +
                                std::to_string(den.valuation()) + ", expected " +
                                std::to_string(shift));
  }
  if (num.valuation() < shift) {
    throw std::invalid_argument("divide_shifted: numerator t-order " +
                                std::to_string(num.valuation()) + " is below " +
                                std::to_string(shift));
  }
  const int out_order = num.order() - shift;
  std::vector<Rational> q(static_cast<std::size_t>(out_order) + 1);
  const Rational lead_inv = den[shift].inverse();
  for (int i = 0; i <= out_order; ++i) {
    Rational acc = num[i + shift];
    for (int j = 0; j < i; ++j) acc -= q[j] * den[i - j + shift];
    q[i] = acc * lead_inv;
  }
  return Series(out_order, std::move(q));
}

Series inverse(const Series& s) {
  if (s[0].is_zero()) throw std::invalid_argument("inverse: constant term is zero");
  return divide_shifted(Series::one(s.order()), s, 0);
}

Series compose_vanishing(std::span<const Rational> outer, const Series& inner) {
  if (!inner[0].is_zero()) {
    throw std::invalid_argument("compose_vanishing: inner series has nonzero constant term");
  }
  const int order = inner.order();
  const std::size_t terms = std::min<std::size_t>(outer.size(), static_cast<std::size_t>(order) + 1);
  Series acc(order);
  for (std::size_t m = terms; m-- > 0;) {
    acc = acc * inner;
    acc += Series(order, {outer[m]});
  }
  return acc;
}

Rational egf_coeff(const Series& s, int n) {
  if (n < 0 || n > s.order()) {
    throw std::out_of_range("egf_coeff: index " + std::to_string(n) + " beyond truncation order " +
                            std::to_string(s.order()));
  }
  return s[n] * Rational(factorial(static_cast<unsigned>(n)));
}

BivariateSeries::BivariateSeries(int order_t, int order_u) : order_t_(order_t), order_u_(order_u) {
  require_order(order_t);
  require_order(order_u);
  coeffs_.resize(static_cast<std::size_t>(order_t + 1) * static_cast<std::size_t>(order_u + 1));
}

BivariateSeries BivariateSeries::exp_linear(const Rational& ct, const Rational& cu, int order_t,
                                            int order_u) {
  const Series et = mpbern::exp_linear(ct, order_t);
  const Series eu = mpbern::exp_linear(cu, order_u);
  BivariateSeries out(order_t, order_u);
  for (int i = 0; i <= order_t; ++i) {
    for (int j = 0; j <= order_u; ++j) out.at(i, j) = et[i] * eu[j];
  }
  return out;
}

Rational BivariateSeries::egf_coeff(int i, int j) const {
  if (i < 0 || i > order_t_ || j < 0 || j > order_u_) {
    throw std::out_of_range("bivariate egf_coeff: index beyond truncation order");
  }
  return at(i, j) * Rational(factorial(static_cast<unsigned>(i)) *
                             factorial(static_cast<unsigned>(j)));
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.order_t_ != b.order_t_ || a.order_u_ != b.order_u_) {
    throw std::invalid_argument("bivariate series truncation order mismatch");
  }
  BivariateSeries out(a.order_t_, a.order_u_);
  for (int i = 0; i <= a.order_t_; ++i) {
    for (int j = 0; j <= a.order_u_; ++j) {
      const Rational& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int p = 0; i + p <= a.order_t_; ++p) {
        for (int q = 0; j + q <= a.order_u_; ++q) {
          const Rational& y = b.at(p, q);
          if (!y.is_zero()) out.at(i + p, j + q) += x * y;
        }
      }
    }
  }
  return out;
}

BivariateSeries inverse(const BivariateSeries& s) {
  if (s.at(0, 0).is_zero()) throw std::invalid_argument("inverse: constant term is zero");
  BivariateSeries out(s.order_t_, s.order_u_);
  const Rational lead_inv = s.at(0, 0).inverse();
  for (int i = 0; i <= s.order_t_; ++i) {
    for (int j = 0; j <= s.order_u_; ++j) {
      Rational acc = (i == 0 && j == 0) ? Rational(1) : Rational(0);
      for (int p = 0; p <= i; ++p) {
        for (int q = 0; q <= j; ++q) {
          if (p == 0 && q == 0) continue;
          const Rational& c = s.at(p, q);
          if (!c.is_zero()) acc -= c * out.at(i - p, j - q);
        }
      }
      out.at(i, j) = acc * lead_inv;
    }
  }
  return out;
}

}  // namespace mpbern
