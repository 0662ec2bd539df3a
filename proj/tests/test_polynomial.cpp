#include <doctest.h>

#include <vector>

#include "mpbern/polynomial.hpp"

using mpbern::Polynomial;
using mpbern::Rational;

namespace {
Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }
}  // namespace

TEST_CASE("normalization and degree") {
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial({q(1), q(0), q(0)}).degree() == 0);
  CHECK(Polynomial({q(0), q(0)}).is_zero());
  CHECK(Polynomial({q(1, 2), q(1)}).str() == "1/2, 1");
}

TEST_CASE("evaluation matches the expanded sum") {
  const Polynomial p({q(3), q(-1, 2), q(0), q(2, 7)});
  for (long x = -4; x <= 4; ++x) {
    const Rational xv = q(x, 3);
    CHECK(p(xv) == q(3) - q(1, 2) * xv + q(2, 7) * xv * xv * xv);
  }
}

TEST_CASE("ring operations") {
  const Polynomial x = Polynomial::identity();
  const Polynomial one = Polynomial::constant(1);
  const Polynomial sq = (x + one) * (x - one);
  CHECK(sq == Polynomial({q(-1), q(0), q(1)}));
  CHECK(sq - x * x + one == Polynomial());
  CHECK((sq * q(1, 2)).coefficient(2) == q(1, 2));
  CHECK(sq.coefficient(10) == q(0));
}

TEST_CASE("derivative") {
  const Polynomial p({q(5), q(1, 3), q(2), q(-1)});
  CHECK(p.derivative() == Polynomial({q(1, 3), q(4), q(-3)}));
  CHECK(Polynomial::constant(9).derivative().is_zero());
}

TEST_CASE("interpolation recovers the polynomial from degree + 1 points") {
  const Polynomial p({q(-2, 5), q(0), q(7, 3), q(1), q(-1, 4)});
  std::vector<mpbern::InterpolationPoint> pts;
  for (long i = 0; i <= p.degree(); ++i) pts.emplace_back(q(2 * i - 3, 2), p(q(2 * i - 3, 2)));
  CHECK(mpbern::interpolate(pts) == p);
}

TEST_CASE("interpolation errors") {
  std::vector<mpbern::InterpolationPoint> none;
  CHECK_THROWS(mpbern::interpolate(none));
  std::vector<mpbern::InterpolationPoint> dup{{q(1), q(2)}, {q(1), q(3)}};
  CHECK_THROWS(mpbern::interpolate(dup));
}
