#include <doctest.h>

#include "mpbern/combinatorics.hpp"
#include "mpbern/series.hpp"

using mpbern::Rational;
using mpbern::Series;

namespace {
Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }
Rational inv_fact(int n) { return Rational(mpz_class(1), mpbern::factorial(n)); }
}  // namespace

TEST_CASE("exp_linear has coefficients c^n / n!") {
  const Series e = mpbern::exp_linear(q(-2, 3), 8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(e[n] == q(-2, 3).pow(n) * inv_fact(n));
    CHECK(mpbern::egf_coeff(e, n) == q(-2, 3).pow(n));
  }
  CHECK_THROWS_AS(mpbern::egf_coeff(e, 9), std::out_of_range);
}

TEST_CASE("exponential laws") {
  const Series a = mpbern::exp_linear(q(1, 2), 10);
  const Series b = mpbern::exp_linear(q(-3), 10);
  CHECK(a * b == mpbern::exp_linear(q(-5, 2), 10));
  CHECK(a.pow(4) == mpbern::exp_linear(q(2), 10));
}

TEST_CASE("inverse of 1 - z is the geometric series") {
  const Series g = mpbern::inverse(Series::one(7) - Series::variable(7));
  for (int n = 0; n <= 7; ++n) CHECK(g[n] == q(1));
  CHECK_THROWS(mpbern::inverse(Series::variable(4)));
}

TEST_CASE("divide_shifted: (e^t - 1) / t") {
  const Series num = mpbern::exp_linear(1, 9) - Series::one(9);
  const Series out = mpbern::divide_shifted(num, Series::variable(9), 1);
  CHECK(out.order() == 8);
  for (int n = 0; n <= 8; ++n) CHECK(out[n] == inv_fact(n + 1));
}

TEST_CASE("divide_shifted: t / (e^t - 1) gives Bernoulli numbers") {
  const Series den = mpbern::exp_linear(1, 9) - Series::one(9);
  const Series out = mpbern::divide_shifted(Series::variable(9), den, 1);
  const Rational expected[] = {q(1), q(-1, 2), q(1, 6), q(0), q(-1, 30), q(0), q(1, 42)};
  for (int n = 0; n < 7; ++n) CHECK(mpbern::egf_coeff(out, n) == expected[n]);
}

TEST_CASE("divide_shifted preconditions") {
  const Series z = Series::variable(5);
  CHECK_THROWS(mpbern::divide_shifted(Series::one(5), z, 1));
  CHECK_THROWS(mpbern::divide_shifted(z, z * z, 1));
  CHECK_THROWS(mpbern::divide_shifted(z, z, 6));
}

TEST_CASE("composition: exp(-log(1 - z)) = 1/(1 - z)") {
  const int N = 8;
  std::vector<Rational> exp_coeffs;
  for (int n = 0; n <= N; ++n) exp_coeffs.push_back(inv_fact(n));
  std::vector<Rational> log_coeffs{q(0)};
  for (int n = 1; n <= N; ++n) log_coeffs.push_back(q(1, n));
  const Series inner(N, log_coeffs);
  const Series out = mpbern::compose_vanishing(exp_coeffs, inner);
  for (int n = 0; n <= N; ++n) CHECK(out[n] == q(1));
  CHECK_THROWS(mpbern::compose_vanishing(exp_coeffs, Series::one(N)));
}

TEST_CASE("series arithmetic guards") {
  CHECK_THROWS(Series::one(3) + Series::one(4));
  CHECK_THROWS(Series(2, {q(1), q(2), q(3), q(4)}));
  CHECK(Series(4, {q(0), q(0), q(5)}).valuation() == 2);
  CHECK(Series(4, {q(1), q(2), q(3)}).truncated(1) == Series(1, {q(1), q(2)}));
}

TEST_CASE("bivariate exponentials and inverse") {
  using mpbern::BivariateSeries;
  const auto e = BivariateSeries::exp_linear(q(2), q(-1, 3), 4, 3);
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 3; ++j) CHECK(e.egf_coeff(i, j) == q(2).pow(i) * q(-1, 3).pow(j));
  }
  const auto prod = e * inverse(e);
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 3; ++j) CHECK(prod.at(i, j) == q(i == 0 && j == 0 ? 1 : 0));
  }
}
