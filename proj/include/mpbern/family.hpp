#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mpbern/polylog.hpp"
#include "mpbern/polynomial.hpp"
#include "mpbern/rational.hpp"
#include "mpbern/series.hpp"

namespace mpbern {

/// Logarithmic parameters of the family: alpha = ln a, beta = ln b,
/// gamma = ln c. The classical specialization a = c = e, b = 1 is (1, 0, 1).
struct ParamSet {
  Rational alpha{1};
  Rational beta{0};
  Rational gamma{1};

  static ParamSet classical() { return {}; }
  std::string str() const;
};

/// alpha + beta = 0, so (b^t - a^{-t})^r has no invertible leading term.
class DegenerateParameters : public std::domain_error {
 public:
  DegenerateParameters()
      : std::domain_error("denominator leading coefficient vanishes: ln a + ln b = 0") {}
};

// ---------------------------------------------------------------------------
// Generalized multi poly-Bernoulli polynomials
//   Li_k(1 - (ab)^{-t}) / (b^t - a^{-t})^r * c^{rxt} = sum B_n(x; a, b, c) t^n / n!
// ---------------------------------------------------------------------------

/// The x-free part Li_k(1 - e^{-(alpha+beta)t}) / (e^{beta t} - e^{-alpha t})^r
/// truncated at t^n_max. Computed at order n_max + r before the division.
Series multi_poly_bernoulli_kernel(const MultiIndex& k, const ParamSet& p, int n_max);

/// B_n(x; a, b, c) for n = 0..n_max, straight from the generating function.
std::vector<Rational> multi_poly_bernoulli(const MultiIndex& k, const ParamSet& p,
                                           const Rational& x, int n_max);

/// B_n(x; a, b, c) as polynomials in x, recovered by exact interpolation of the
/// generating-function values at x = 0..n.
std::vector<Polynomial> multi_poly_bernoulli_polys(const MultiIndex& k, const ParamSet& p,
                                                   int n_max);

/// Base of the n-th power in the explicit double sum.
enum class ExplicitBase {
  as_printed,  ///< rx - j alpha - (j+1) beta
  gamma_only,  ///< r x gamma - j alpha - (j+1) beta
  corrected,   ///< r x gamma - j alpha - (j+r) beta
};

/// Explicit double-sum formula over 0 < m_1 < ... < m_r and 0 <= j <= m_r - r.
/// Only m_r <= n + r contributes: the alternating j-sum is a finite
/// difference of order m_r - r of a degree-n polynomial.
Rational multi_poly_bernoulli_explicit(const MultiIndex& k, const ParamSet& p, const Rational& x,
                                       int n, ExplicitBase base = ExplicitBase::corrected);

/// The a = c = e, b = 1 specialization Li_k(1-e^{-t}) / (1-e^{-t})^r e^{rxt}.
std::vector<Rational> reduced_multi_poly_bernoulli(const MultiIndex& k, const Rational& x,
                                                   int n_max);

/// sum_m m! S(n+1, m+1) m! S(k+1, m+1), the closed form of B_n^{(-k)}.
Rational arakawa_kaneko(int n, int k);

// ---------------------------------------------------------------------------
// Multi poly-Bernoulli numbers with denominator (1 - e^{-t})^1
// ---------------------------------------------------------------------------

std::vector<Rational> imatomi_numbers(const MultiIndex& k, int n_max);

/// Exponent assignment in the Stirling-sum formula, where the summation
/// variables are ordered m_1 > m_2 > ... > m_r.
enum class ImatomiWeights {
  as_printed,  ///< m_1^{k_1} m_1^{k_2} m_3^{k_3} ... m_r^{k_r}
  subscript,   ///< m_1^{k_1} m_2^{k_2} ... m_r^{k_r}
  corrected,   ///< m_1^{k_r} m_2^{k_{r-1}} ... m_r^{k_1}
};

Rational imatomi_explicit(const MultiIndex& k, int n,
                          ImatomiWeights weights = ImatomiWeights::corrected);

/// Which entry of k is lowered by one on the right-hand side of the recurrence.
enum class RecurrenceEntry { first, last };

struct RecurrenceRow {
  int n;
  Rational lhs;
  Rational rhs;
  bool pass() const { return lhs == rhs; }
};

/// Checks B_n = (B_n^{lowered} - sum_{m=1}^{n-1} C(n, m-1) B_m) / (n+1) for
/// n = 1..n_max against imatomi_numbers.
std::vector<RecurrenceRow> imatomi_recurrence_check(
    const MultiIndex& k, int n_max, RecurrenceEntry entry = RecurrenceEntry::last);

// ---------------------------------------------------------------------------
// Hurwitz-Lerch type multi poly-Bernoulli numbers and polynomials
//   Phi_k(1 - e^{-t}, a) e^{rxt} = sum B_{n,a}(x) t^n / n!
// ---------------------------------------------------------------------------

std::vector<Rational> hurwitz_numbers(const MultiIndex& k, const HurwitzShift& a, int n_max);
std::vector<Rational> hurwitz_polynomials(const MultiIndex& k, const HurwitzShift& a,
                                          const Rational& x, int n_max);

/// sum over 0 <= m_1 <= ... <= m_r <= n of m_r! W_{-1,xr}(n, m_r) / prod(m_i + a - r + i)^{k_i}.
Rational hurwitz_explicit_whitney(const MultiIndex& k, const HurwitzShift& a, const Rational& x,
                                  int n);
/// The x = 0 case written with (-1)^{n+m_r} m_r! S(n, m_r).
Rational hurwitz_explicit_stirling(const MultiIndex& k, const HurwitzShift& a, int n);
/// Depth-one closed form (-1)^n sum_m (-1)^m m! S(n,m) / (m+a)^k.
Rational hurwitz_single_explicit(int k, const HurwitzShift& a, int n);

// ---------------------------------------------------------------------------
// Symmetrized family C^{(m)}_{n,r}(x, y; a, b, c)
// ---------------------------------------------------------------------------

/// Table [m][n] for m <= m_max, n <= n_max, from the multinomial definition.
/// The inner polynomials have depth r - 1 (generator exponent (r-1) x gamma t).
std::vector<std::vector<Rational>> symmetrized_definition_table(int m_max, int n_max, int r,
                                                                const ParamSet& p,
                                                                const Rational& x,
                                                                const Rational& y);
Rational symmetrized_definition(int m, int n, int r, const ParamSet& p, const Rational& x,
                                const Rational& y);

enum class ClosedFormVariant {
  as_printed,  ///< t-exponent x gamma - (r-1) beta/(alpha+beta)
  corrected,   ///< t-exponent (r-1)(x gamma - beta)/(alpha+beta)
};

/// Table [m][n] read off the closed-form double generating function
/// e^{Y u} e^{X t} e^{C(r,2) u + (r-1) t} / prod_{i=1}^{r-1} (e^t + e^{iu} - e^{t+iu}).
std::vector<std::vector<Rational>> symmetrized_closed_table(
    int m_max, int n_max, int r, const ParamSet& p, const Rational& x, const Rational& y,
    ClosedFormVariant variant = ClosedFormVariant::corrected);
Rational symmetrized_closed(int m, int n, int r, const ParamSet& p, const Rational& x,
                            const Rational& y,
                            ClosedFormVariant variant = ClosedFormVariant::corrected);

}  // namespace mpbern
