#pragma once

#include <gmpxx.h>

#include <span>

#include "mpbern/polynomial.hpp"
#include "mpbern/rational.hpp"

namespace mpbern {

mpz_class factorial(unsigned n);
/// C(n, k) for n >= 0; zero when k < 0 or k > n.
mpz_class binomial(long n, long k);
/// Generalized binomial coefficient a(a-1)...(a-k+1)/k! for rational a.
Rational binomial(const Rational& a, unsigned k);
/// (sum parts)! / prod(parts!). Parts must be nonnegative.
mpz_class multinomial(std::span<const int> parts);

/// Stirling numbers of the second kind; S(0,0) = 1 and S(n,k) = 0 for k > n.
/// Backed by a shared, mutex-guarded table. Negative arguments throw.
mpz_class stirling2(int n, int k);

/// Parameters of the r-Whitney numbers W_{m,r} and w_{m,r}.
struct WhitneyParams {
  Rational m;
  Rational r;
};

/// r-Whitney number of the second kind from its exponential generating
/// function e^{rz} ((e^{mz}-1)/m)^k / k!. At m = 0 the inner factor is z.
Rational whitney2(const WhitneyParams& p, int n, int k);

/// The same numbers from W(n+1,k) = W(n,k-1) + (k m + r) W(n,k), W(0,0) = 1.
/// Tables are memoized per (m, r).
Rational whitney2_recurrence(const WhitneyParams& p, int n, int k);

/// r-Whitney number of the first kind from
/// (1+mz)^{-r/m} ln^k(1+mz) / (m^k k!). Throws std::domain_error when m = 0.
Rational whitney1(const WhitneyParams& p, int n, int k);

/// Higher-order Bernoulli polynomial B_n^{(s)}(x): (t/(e^t-1))^s e^{xt}.
Rational higher_bernoulli(int s, int n, const Rational& x);

/// Higher-order Frobenius-Euler polynomial H_n^{(s)}(x; lambda):
/// ((1-lambda)/(e^t-lambda))^s e^{xt}. lambda = 1 throws.
Rational frobenius_euler(int s, int n, const Rational& x, const Rational& lambda);

/// Bernoulli numbers of z/(e^z-1), so B_1 = -1/2.
Rational bernoulli_number(int n);

/// x(x+1)...(x+m-1); 1 for m = 0.
Rational rising_factorial(const Rational& x, unsigned m);
Polynomial rising_factorial(const Polynomial& x, unsigned m);
/// x(x-1)...(x-m+1); 1 for m = 0.
Rational falling_factorial(const Rational& x, unsigned m);
Polynomial falling_factorial(const Polynomial& x, unsigned m);

}  // namespace mpbern
