#include "mpbern/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpbern/series.hpp"

namespace mpbern {

namespace {

void require_nonnegative(int n, int k, const char* what) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument(std::string(what) + ": negative argument (" + std::to_string(n) +
                                ", " + std::to_string(k) + ")");
  }
}

class StirlingTable {
 public:
  mpz_class get(int n, int k) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) extend();
    if (k > n) return 0;
    return rows_[n][k];
  }

 private:
  void extend() {
    const std::size_t n = rows_.size();
    std::vector<mpz_class> row(n + 1);
    if (n == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows_[n - 1];
      for (std::size_t k = 1; k <= n; ++k) {
        const mpz_class stay = k < n ? mpz_class(prev[k] * k) : mpz_class(0);
        row[k] = stay + prev[k - 1];
      }
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<mpz_class>> rows_;
};

class WhitneyTables {
 public:
  Rational get(const WhitneyParams& p, int n, int k) {
    std::lock_guard lock(mutex_);
    auto& rows = tables_[{p.m.str(), p.r.str()}];
    while (static_cast<int>(rows.size()) <= n) extend(rows, p);
    if (k > n) return Rational(0);
    return rows[n][k];
  }

 private:
  static void extend(std::vector<std::vector<Rational>>& rows, const WhitneyParams& p) {
    const std::size_t n = rows.size();
    std::vector<Rational> row(n + 1);
    if (n == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows[n - 1];
      for (std::size_t k = 0; k <= n; ++k) {
        Rational v;
        if (k >= 1) v += prev[k - 1];
        if (k < n) v += (Rational(k) * p.m + p.r) * prev[k];
        row[k] = std::move(v);
      }
    }
    rows.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::map<std::pair<std::string, std::string>, std::vector<std::vector<Rational>>> tables_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

WhitneyTables& whitney_tables() {
  static WhitneyTables tables;
  return tables;
}

}  // namespace

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational binomial(const Rational& a, unsigned k) {
  Rational out(1);
  for (unsigned i = 0; i < k; ++i) out *= (a - Rational(i)) / Rational(i + 1);
  return out;
}

mpz_class multinomial(std::span<const int> parts) {
  long total = 0;
  mpz_class denom = 1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    total += p;
    denom *= factorial(static_cast<unsigned>(p));
  }
  return factorial(static_cast<unsigned>(total)) / denom;
}

mpz_class stirling2(int n, int k) {
  require_nonnegative(n, k, "stirling2");
  return stirling_table().get(n, k);
}

Rational whitney2(const WhitneyParams& p, int n, int k) {
  require_nonnegative(n, k, "whitney2");
  if (k > n) return Rational(0);
  // (e^{mz}-1)/m = sum_{j>=1} m^{j-1} z^j / j!, which is z when m = 0.
  Series inner = Series::variable(n);
  if (!p.m.is_zero()) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    Rational term(1);
    for (int j = 1; j <= n; ++j) {
      term /= Rational(j);
      c[j] = term;
      term *= p.m;
    }
    inner = Series(n, std::move(c));
  }
  const Series gf = exp_linear(p.r, n) * inner.pow(static_cast<unsigned>(k)) *
                    Rational(factorial(static_cast<unsigned>(k))).inverse();
  return egf_coeff(gf, n);
}

Rational whitney2_recurrence(const WhitneyParams& p, int n, int k) {
  require_nonnegative(n, k, "whitney2_recurrence");
  return whitney_tables().get(p, n, k);
}

Rational whitney1(const WhitneyParams& p, int n, int k) {
  require_nonnegative(n, k, "whitney1");
  if (p.m.is_zero()) throw std::domain_error("first-kind Whitney requires m != 0");
  if (k > n) return Rational(0);
  // (1+mz)^e = sum_j C(e, j) m^j z^j with e = -r/m.
  const Rational e = -p.r / p.m;
  std::vector<Rational> binom_series(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) binom_series[j] = binomial(e, static_cast<unsigned>(j)) * p.m.pow(j);
  // ln(1+mz)/m = sum_{j>=1} (-1)^{j+1} m^{j-1} z^j / j.
  std::vector<Rational> log_series(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    log_series[j] = p.m.pow(j - 1) / Rational(j);
    if (j % 2 == 0) log_series[j] = -log_series[j];
  }
  const Series gf = Series(n, std::move(binom_series)) *
                    Series(n, std::move(log_series)).pow(static_cast<unsigned>(k)) *
                    Rational(factorial(static_cast<unsigned>(k))).inverse();
  return egf_coeff(gf, n);
}

Rational higher_bernoulli(int s, int n, const Rational& x) {
  if (s < 1 || n < 0) throw std::invalid_argument("higher_bernoulli: need s >= 1 and n >= 0");
  const int order = n + s;
  const Series num = Series::variable(order).pow(static_cast<unsigned>(s));
  const Series den = (exp_linear(1, order) - Series::one(order)).pow(static_cast<unsigned>(s));
  return egf_coeff(divide_shifted(num, den, s) * exp_linear(x, n), n);
}

Rational frobenius_euler(int s, int n, const Rational& x, const Rational& lambda) {
  if (s < 1 || n < 0) throw std::invalid_argument("frobenius_euler: need s >= 1 and n >= 0");
  if (lambda == Rational(1)) throw std::domain_error("frobenius_euler: lambda must differ from 1");
  const Series base = (exp_linear(1, n) - Series(n, {lambda})) * (Rational(1) - lambda).inverse();
  return egf_coeff(inverse(base).pow(static_cast<unsigned>(s)) * exp_linear(x, n), n);
}

Rational bernoulli_number(int n) { return higher_bernoulli(1, n, Rational(0)); }

Rational rising_factorial(const Rational& x, unsigned m) {
  Rational out(1);
  for (unsigned i = 0; i < m; ++i) out *= x + Rational(i);
  return out;
}

Polynomial rising_factorial(const Polynomial& x, unsigned m) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < m; ++i) out = out * (x + Polynomial::constant(Rational(i)));
  return out;
}

Rational falling_factorial(const Rational& x, unsigned m) {
  Rational out(1);
  for (unsigned i = 0; i < m; ++i) out *= x - Rational(i);
  return out;
}

Polynomial falling_factorial(const Polynomial& x, unsigned m) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < m; ++i) out = out * (x - Polynomial::constant(Rational(i)));
  return out;
}

}  // namespace mpbern
