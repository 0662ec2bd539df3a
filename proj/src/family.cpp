#include "mpbern/family.hpp"

#include <functional>

#include "mpbern/combinatorics.hpp"

namespace mpbern {

namespace {

void require_n(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be >= 0");
}

Rational log_sum(const ParamSet& p) {
  Rational s = p.alpha + p.beta;
  if (s.is_zero()) throw DegenerateParameters();
  return s;
}

std::vector<Rational> egf_all(const Series& s) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n) out.push_back(egf_coeff(s, n));
  return out;
}

/// 1 - e^{-ct}.
Series one_minus_exp(const Rational& c, int order) {
  return Series::one(order) - exp_linear(-c, order);
}

/// Visits every tuple lo <= m_1 <=/< ... <=/< m_depth <= hi, in
/// lexicographic order.
void for_each_chain(int depth, int lo, int hi, bool strict,
                    const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> tuple(static_cast<std::size_t>(depth));
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == depth) {
      visit(tuple);
      return;
    }
    for (int m = from; m <= hi; ++m) {
      tuple[static_cast<std::size_t>(pos)] = m;
      rec(pos + 1, strict ? m + 1 : m);
    }
  };
  rec(0, lo);
}

/// prod_i (m_i + a - r + i)^{-k_i}, with m listed in increasing order.
Rational shifted_weight(const MultiIndex& k, const HurwitzShift& a, const std::vector<int>& m) {
  const int r = k.depth();
  Rational w(1);
  for (int i = 1; i <= r; ++i) {
    const Rational base = Rational(m[i - 1]) + a.value - Rational(r) + Rational(i);
    w *= base.pow(-k[i - 1]);
  }
  return w;
}

}  // namespace

std::string ParamSet::str() const {
  return "ln_a=" + alpha.str() + ",ln_b=" + beta.str() + ",ln_c=" + gamma.str();
}

Series multi_poly_bernoulli_kernel(const MultiIndex& k, const ParamSet& p, int n_max) {
  require_n(n_max, "multi_poly_bernoulli");
  const Rational s = log_sum(p);
  const int r = k.depth();
  const int order = n_max + r;
  const Series numerator = li_multi_series(k, one_minus_exp(s, order));
  const Series denominator =
      (exp_linear(p.beta, order) - exp_linear(-p.alpha, order)).pow(static_cast<unsigned>(r));
  return divide_shifted(numerator, denominator, r);
}

std::vector<Rational> multi_poly_bernoulli(const MultiIndex& k, const ParamSet& p,
                                           const Rational& x, int n_max) {
  const Series kernel = multi_poly_bernoulli_kernel(k, p, n_max);
  return egf_all(kernel * exp_linear(Rational(k.depth()) * x * p.gamma, n_max));
}

std::vector<Polynomial> multi_poly_bernoulli_polys(const MultiIndex& k, const ParamSet& p,
                                                   int n_max) {
  const Series kernel = multi_poly_bernoulli_kernel(k, p, n_max);
  std::vector<std::vector<Rational>> at_x;  // at_x[x][n]
  for (int x = 0; x <= n_max; ++x) {
    at_x.push_back(egf_all(kernel * exp_linear(Rational(k.depth() * x) * p.gamma, n_max)));
  }
  std::vector<Polynomial> out;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<InterpolationPoint> pts;
    for (int x = 0; x <= n; ++x) pts.emplace_back(Rational(x), at_x[x][n]);
    out.push_back(interpolate(pts));
  }
  return out;
}

Rational multi_poly_bernoulli_explicit(const MultiIndex& k, const ParamSet& p, const Rational& x,
                                       int n, ExplicitBase base) {
  require_n(n, "multi_poly_bernoulli_explicit");
  const int r = k.depth();
  const int top = n + r;

  // inner[M] = sum_j (-1)^j C(M, j) base_j^n for M = m_r - r.
  std::vector<Rational> inner(static_cast<std::size_t>(n) + 1);
  for (int M = 0; M <= n; ++M) {
    Rational acc;
    for (int j = 0; j <= M; ++j) {
      Rational b;
      switch (base) {
        case ExplicitBase::as_printed:
          b = Rational(r) * x - Rational(j) * p.alpha - Rational(j + 1) * p.beta;
          break;
        case ExplicitBase::gamma_only:
          b = Rational(r) * x * p.gamma - Rational(j) * p.alpha - Rational(j + 1) * p.beta;
          break;
        case ExplicitBase::corrected:
          b = Rational(r) * x * p.gamma - Rational(j) * p.alpha - Rational(j + r) * p.beta;
          break;
      }
      Rational term = Rational(binomial(M, j)) * b.pow(n);
      if (j % 2) term = -term;
      acc += term;
    }
    inner[M] = std::move(acc);
  }

  Rational total;
  for_each_chain(r, 1, top, true, [&](const std::vector<int>& m) {
    const int M = m.back() - r;
    if (inner[M].is_zero()) return;
    Rational w(1);
    for (int i = 0; i < r; ++i) w *= Rational(m[i]).pow(-k[i]);
    total += w * inner[M];
  });
  return total;
}

std::vector<Rational> reduced_multi_poly_bernoulli(const MultiIndex& k, const Rational& x,
                                                   int n_max) {
  return multi_poly_bernoulli(k, ParamSet::classical(), x, n_max);
}

Rational arakawa_kaneko(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("arakawa_kaneko: negative argument");
  Rational total;
  for (int m = 0; m <= std::min(n, k); ++m) {
    const mpz_class f = factorial(static_cast<unsigned>(m));
    total += Rational(f * stirling2(n + 1, m + 1) * f * stirling2(k + 1, m + 1));
  }
  return total;
}

std::vector<Rational> imatomi_numbers(const MultiIndex& k, int n_max) {
  require_n(n_max, "imatomi_numbers");
  const int order = n_max + 1;
  const Series z = one_minus_exp(1, order);
  return egf_all(divide_shifted(li_multi_series(k, z), z, 1));
}

Rational imatomi_explicit(const MultiIndex& k, int n, ImatomiWeights weights) {
  require_n(n, "imatomi_explicit");
  const int r = k.depth();
  Rational total;
  for_each_chain(r, 1, n + 1, true, [&](const std::vector<int>& increasing) {
    // desc[0] = m_1 is the largest.
    const std::vector<int> desc(increasing.rbegin(), increasing.rend());
    const int top = desc[0];
    Rational w(1);
    for (int j = 0; j < r; ++j) {
      int var = desc[j];
      int exponent = k[j];
      switch (weights) {
        case ImatomiWeights::as_printed:
          if (j == 1) var = desc[0];
          break;
        case ImatomiWeights::subscript:
          break;
        case ImatomiWeights::corrected:
          exponent = k[r - 1 - j];
          break;
      }
      w *= Rational(var).pow(-exponent);
    }
    Rational term = Rational(factorial(static_cast<unsigned>(top - 1)) * stirling2(n, top - 1)) * w;
    if ((top - 1) % 2) term = -term;
    total += term;
  });
  return n % 2 ? -total : total;
}

std::vector<RecurrenceRow> imatomi_recurrence_check(const MultiIndex& k, int n_max,
                                                    RecurrenceEntry entry) {
  require_n(n_max, "imatomi_recurrence_check");
  std::vector<int> lowered(k.values().begin(), k.values().end());
  (entry == RecurrenceEntry::first ? lowered.front() : lowered.back()) -= 1;
  const auto b = imatomi_numbers(k, n_max);
  const auto b_low = imatomi_numbers(MultiIndex(lowered), n_max);
  std::vector<RecurrenceRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    Rational sum;
    for (int m = 1; m <= n - 1; ++m) sum += Rational(binomial(n, m - 1)) * b[m];
    rows.push_back({n, b[n], (b_low[n] - sum) / Rational(n + 1)});
  }
  return rows;
}

std::vector<Rational> hurwitz_numbers(const MultiIndex& k, const HurwitzShift& a, int n_max) {
  require_n(n_max, "hurwitz_numbers");
  return egf_all(phi_multi_series(k, a, one_minus_exp(1, n_max)));
}

std::vector<Rational> hurwitz_polynomials(const MultiIndex& k, const HurwitzShift& a,
                                          const Rational& x, int n_max) {
  require_n(n_max, "hurwitz_polynomials");
  const Series phi = phi_multi_series(k, a, one_minus_exp(1, n_max));
  return egf_all(phi * exp_linear(Rational(k.depth()) * x, n_max));
}

Rational hurwitz_explicit_whitney(const MultiIndex& k, const HurwitzShift& a, const Rational& x,
                                  int n) {
  require_n(n, "hurwitz_explicit_whitney");
  validate_shift(k, a, n);
  const WhitneyParams w{Rational(-1), x * Rational(k.depth())};
  Rational total;
  for_each_chain(k.depth(), 0, n, false, [&](const std::vector<int>& m) {
    const int top = m.back();
    total += Rational(factorial(static_cast<unsigned>(top))) * whitney2_recurrence(w, n, top) *
             shifted_weight(k, a, m);
  });
  return total;
}

Rational hurwitz_explicit_stirling(const MultiIndex& k, const HurwitzShift& a, int n) {
  require_n(n, "hurwitz_explicit_stirling");
  validate_shift(k, a, n);
  Rational total;
  for_each_chain(k.depth(), 0, n, false, [&](const std::vector<int>& m) {
    const int top = m.back();
    Rational term = Rational(factorial(static_cast<unsigned>(top)) * stirling2(n, top)) *
                    shifted_weight(k, a, m);
    if ((n + top) % 2) term = -term;
    total += term;
  });
  return total;
}

Rational hurwitz_single_explicit(int k, const HurwitzShift& a, int n) {
  require_n(n, "hurwitz_single_explicit");
  validate_shift(MultiIndex{k}, a, n);
  Rational total;
  for (int m = 0; m <= n; ++m) {
    Rational term = Rational(factorial(static_cast<unsigned>(m)) * stirling2(n, m)) *
                    (Rational(m) + a.value).pow(-k);
    if (m % 2) term = -term;
    total += term;
  }
  return n % 2 ? -total : total;
}

std::vector<std::vector<Rational>> symmetrized_definition_table(int m_max, int n_max, int r,
                                                                const ParamSet& p,
                                                                const Rational& x,
                                                                const Rational& y) {
  if (r < 2) throw std::invalid_argument("symmetrized family needs r >= 2");
  require_n(n_max, "symmetrized_definition");
  require_n(m_max, "symmetrized_definition");
  const Rational s = log_sum(p);
  const Rational tail = y * p.gamma - Rational(r - 1) * p.beta / s;
  std::vector<Rational> scale(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) scale[n] = s.pow(-n);

  std::vector<std::vector<Rational>> table(static_cast<std::size_t>(m_max) + 1,
                                           std::vector<Rational>(static_cast<std::size_t>(n_max) + 1));
  // Compositions (k_1..k_{r-1}) with total at most m_max; k_r takes the rest.
  std::vector<int> parts(static_cast<std::size_t>(r));
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == r - 1) {
      std::vector<int> negated(parts.begin(), parts.begin() + (r - 1));
      for (int& v : negated) v = -v;
      const auto b = multi_poly_bernoulli(MultiIndex(negated), p, x, n_max);
      for (int m = used; m <= m_max; ++m) {
        parts[static_cast<std::size_t>(r - 1)] = m - used;
        const Rational coeff = Rational(multinomial(parts)) * tail.pow(m - used);
        for (int n = 0; n <= n_max; ++n) table[m][n] += coeff * b[n] * scale[n];
      }
      return;
    }
    for (int v = 0; used + v <= m_max; ++v) {
      parts[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, used + v);
    }
  };
  rec(0, 0);
  return table;
}

Rational symmetrized_definition(int m, int n, int r, const ParamSet& p, const Rational& x,
                                const Rational& y) {
  return symmetrized_definition_table(m, n, r, p, x, y)[m][n];
}

std::vector<std::vector<Rational>> symmetrized_closed_table(int m_max, int n_max, int r,
                                                            const ParamSet& p, const Rational& x,
                                                            const Rational& y,
                                                            ClosedFormVariant variant) {
  if (r < 2) throw std::invalid_argument("symmetrized family needs r >= 2");
  require_n(n_max, "symmetrized_closed");
  require_n(m_max, "symmetrized_closed");
  const Rational s = log_sum(p);
  const Rational shift = Rational(r - 1) * p.beta / s;
  const Rational t_rate = variant == ClosedFormVariant::as_printed
                              ? x * p.gamma - shift
                              : Rational(r - 1) * (x * p.gamma - p.beta) / s;
  const Rational u_rate = y * p.gamma - shift;
  const BivariateSeries numerator = BivariateSeries::exp_linear(
      t_rate + Rational(r - 1), u_rate + Rational(binomial(r, 2)), n_max, m_max);

  // prod_{i=1}^{r-1} (e^t + e^{iu} - e^{t+iu}); each factor has constant term 1.
  BivariateSeries denominator = BivariateSeries::exp_linear(0, 0, n_max, m_max);
  for (int i = 1; i < r; ++i) {
    BivariateSeries factor = BivariateSeries::exp_linear(1, 0, n_max, m_max);
    const BivariateSeries eu = BivariateSeries::exp_linear(0, i, n_max, m_max);
    const BivariateSeries etu = BivariateSeries::exp_linear(1, i, n_max, m_max);
    for (int a = 0; a <= n_max; ++a) {
      for (int b = 0; b <= m_max; ++b) factor.at(a, b) += eu.at(a, b) - etu.at(a, b);
    }
    denominator = denominator * factor;
  }
  const BivariateSeries gf = numerator * inverse(denominator);

  std::vector<std::vector<Rational>> table(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) table[m].push_back(gf.egf_coeff(n, m));
  }
  return table;
}

Rational symmetrized_closed(int m, int n, int r, const ParamSet& p, const Rational& x,
                            const Rational& y, ClosedFormVariant variant) {
  return symmetrized_closed_table(m, n, r, p, x, y, variant)[m][n];
}

}  // namespace mpbern
