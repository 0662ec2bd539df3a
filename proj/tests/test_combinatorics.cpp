#include <doctest.h>

#include <functional>
#include <vector>

#include "mpbern/combinatorics.hpp"
#include "mpbern/polynomial.hpp"

using mpbern::Rational;
using mpbern::WhitneyParams;

namespace {

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

/// Counts set partitions of {1..n} into k blocks by enumerating restricted
/// growth strings.
long count_partitions(int n, int k) {
  long total = 0;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> walk = [&](int pos, int blocks) {
    if (pos == n) {
      if (blocks == k) ++total;
      return;
    }
    for (int b = 0; b <= blocks && b < k; ++b) {
      rgs[pos] = b;
      walk(pos + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return k == 0 ? 1 : 0;
  walk(0, 0);
  return total;
}

Rational falling(const Rational& x, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) out *= x - Rational(i);
  return out;
}

}  // namespace

TEST_CASE("factorial, binomial, multinomial") {
  CHECK(mpbern::factorial(0) == 1);
  CHECK(mpbern::factorial(10) == 3628800);
  for (int n = 0; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(mpbern::binomial(n, k) == mpbern::binomial(n - 1, k - 1) + mpbern::binomial(n - 1, k));
    }
  }
  CHECK(mpbern::binomial(5, -1) == 0);
  CHECK(mpbern::binomial(5, 6) == 0);
  CHECK(mpbern::binomial(q(-1, 2), 3) == q(-5, 16));
  const int parts[] = {2, 1, 3};
  CHECK(mpbern::multinomial(parts) == 60);
}

TEST_CASE("Stirling numbers of the second kind count set partitions") {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(mpbern::stirling2(n, k) == count_partitions(n, k));
    }
  }
  CHECK_THROWS(mpbern::stirling2(-1, 0));
}

TEST_CASE("second-kind r-Whitney numbers expand (mx + r)^n in falling factorials") {
  const WhitneyParams grid[] = {{q(-1), q(0)}, {q(-1), q(3, 2)}, {q(1), q(0)}, {q(2), q(3)},
                                {q(1, 2), q(-1, 3)}, {q(0), q(1, 2)}};
  for (const auto& w : grid) {
    for (int n = 0; n <= 7; ++n) {
      for (long xi = -3; xi <= 3; ++xi) {
        const Rational x = q(xi, 2);
        Rational rhs;
        for (int k = 0; k <= n; ++k) rhs += w.m.pow(k) * mpbern::whitney2(w, n, k) * falling(x, k);
        CHECK((w.m * x + w.r).pow(n) == rhs);
      }
    }
  }
}

TEST_CASE("both second-kind constructions agree, including m = 0") {
  const WhitneyParams grid[] = {{q(-1), q(3, 2)}, {q(0), q(1, 2)}, {q(3), q(-2)}};
  for (const auto& w : grid) {
    for (int n = 0; n <= 10; ++n) {
      for (int k = 0; k <= n + 1; ++k) {
        CHECK(mpbern::whitney2(w, n, k) == mpbern::whitney2_recurrence(w, n, k));
      }
    }
  }
  const WhitneyParams zero{q(0), q(1, 2)};
  CHECK(mpbern::whitney2(zero, 5, 2) == Rational(mpbern::binomial(5, 2)) * q(1, 8));
}

TEST_CASE("first- and second-kind r-Whitney matrices are inverse") {
  const WhitneyParams grid[] = {{q(-1), q(3, 2)}, {q(1), q(0)}, {q(2), q(3)}, {q(1, 2), q(-1, 3)}};
  for (const auto& w : grid) {
    for (int n = 0; n <= 7; ++n) {
      for (int l = 0; l <= 7; ++l) {
        Rational sum;
        for (int k = 0; k <= 7; ++k) sum += mpbern::whitney2(w, n, k) * mpbern::whitney1(w, k, l);
        CHECK(sum == q(n == l ? 1 : 0));
      }
    }
  }
  CHECK_THROWS_AS(mpbern::whitney1({q(0), q(1)}, 2, 1), std::domain_error);
}

TEST_CASE("Bernoulli numbers") {
  const Rational expected[] = {q(1), q(-1, 2), q(1, 6), q(0), q(-1, 30), q(0), q(1, 42), q(0), q(-1, 30)};
  for (int n = 0; n < 9; ++n) CHECK(mpbern::bernoulli_number(n) == expected[n]);
  CHECK(mpbern::bernoulli_number(20) == q(-174611, 330));
}

TEST_CASE("higher-order Bernoulli polynomials convolve in the order") {
  for (int n = 0; n <= 6; ++n) {
    const Rational x = q(2, 5);
    const Rational y = q(-3, 4);
    Rational conv;
    for (int j = 0; j <= n; ++j) {
      conv += Rational(mpbern::binomial(n, j)) * mpbern::higher_bernoulli(1, j, x) *
              mpbern::higher_bernoulli(2, n - j, y);
    }
    CHECK(mpbern::higher_bernoulli(3, n, x + y) == conv);
    Rational b1;  // sum C(n,j) B_j x^{n-j}
    for (int j = 0; j <= n; ++j) b1 += Rational(mpbern::binomial(n, j)) * mpbern::bernoulli_number(j) * x.pow(n - j);
    CHECK(mpbern::higher_bernoulli(1, n, x) == b1);
  }
  CHECK_THROWS(mpbern::higher_bernoulli(0, 3, q(2)));
}

TEST_CASE("Frobenius-Euler polynomials at lambda = -1 are Euler polynomials") {
  const Rational x = q(3, 7);
  CHECK(mpbern::frobenius_euler(1, 0, x, -1) == q(1));
  CHECK(mpbern::frobenius_euler(1, 1, x, -1) == x - q(1, 2));
  CHECK(mpbern::frobenius_euler(1, 2, x, -1) == x * x - x);
  CHECK(mpbern::frobenius_euler(1, 3, x, -1) == x.pow(3) - q(3, 2) * x * x + q(1, 4));
  CHECK_THROWS(mpbern::frobenius_euler(1, 2, x, 1));
}

TEST_CASE("rising and falling factorials") {
  const Rational x = q(-5, 3);
  Rational rise(1), fall(1);
  for (unsigned m = 0; m <= 6; ++m) {
    CHECK(mpbern::rising_factorial(x, m) == rise);
    CHECK(mpbern::falling_factorial(x, m) == fall);
    CHECK(mpbern::rising_factorial(mpbern::Polynomial::identity(), m)(x) == rise);
    CHECK(mpbern::falling_factorial(mpbern::Polynomial::identity(), m)(x) == fall);
    rise *= x + Rational(static_cast<long>(m));
    fall *= x - Rational(static_cast<long>(m));
  }
}
