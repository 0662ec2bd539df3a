#include "mpbern/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "mpbern/polylog.hpp"
#include "mpbern/series.hpp"

namespace mpbern {

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Portable sampler: raw engine output only, no std distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  Rational next() {
    const long num = static_cast<long>(engine_() % 41) - 20;
    const long den = static_cast<long>(engine_() % 9) + 1;
    return Rational(mpz_class(num), mpz_class(den));
  }

  std::vector<Rational> distinct(std::size_t count) {
    std::vector<Rational> out;
    while (out.size() < count) {
      Rational v = next();
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

class Recorder {
 public:
  explicit Recorder(IdentityReport& report) : report_(report) {}

  template <class Inputs>
  void check(const Rational& lhs, const Rational& rhs, Inputs&& inputs) {
    record(lhs == rhs, inputs, [&] { return std::pair{lhs.str(), rhs.str()}; });
  }

  template <class Inputs>
  void check(const Polynomial& lhs, const Polynomial& rhs, Inputs&& inputs) {
    record(lhs == rhs, inputs, [&] { return std::pair{"[" + lhs.str() + "]", "[" + rhs.str() + "]"}; });
  }

  template <class Inputs>
  void check_claim(bool holds, const Rational& value, std::string claim, Inputs&& inputs) {
    record(holds, inputs, [&] { return std::pair{value.str(), claim}; });
  }

 private:
  template <class Inputs, class Sides>
  void record(bool ok, Inputs& inputs, Sides&& sides) {
    ++report_.cases;
    if (ok) return;
    ++report_.failure_count;
    if (report_.failures.size() < IdentityReport::kMaxStoredFailures) {
      auto [l, r] = sides();
      report_.failures.push_back({inputs(), std::move(l), std::move(r)});
    }
  }

  IdentityReport& report_;
};

struct Context {
  const Grid& grid;
  Variant variant;
  Sampler& sampler;
  Recorder& rec;

  bool corrected() const { return variant == Variant::corrected; }

  std::vector<Rational> points(int count) {
    if (!grid.points.empty()) return grid.points;
    return sampler.distinct(static_cast<std::size_t>(std::max(count, 0)));
  }
};

/// Generating-function values of one (k, p) at arbitrary x, sharing the kernel.
class Evaluator {
 public:
  Evaluator(const MultiIndex& k, const ParamSet& p, int n_max)
      : kernel_(multi_poly_bernoulli_kernel(k, p, n_max)),
        rate_(Rational(k.depth()) * p.gamma),
        n_max_(n_max) {}

  std::vector<Rational> at(const Rational& x) const {
    const Series s = kernel_ * exp_linear(rate_ * x, n_max_);
    std::vector<Rational> out;
    for (int n = 0; n <= n_max_; ++n) out.push_back(egf_coeff(s, n));
    return out;
  }

 private:
  Series kernel_;
  Rational rate_;
  int n_max_;
};

void for_each_index(const Grid& g, const std::function<void(const MultiIndex&)>& fn,
                    const std::vector<int>* entries = nullptr) {
  const std::vector<int>& values = entries ? *entries : g.entries;
  if (values.empty()) return;
  for (int r : g.depths) {
    if (r < 1) continue;
    std::vector<std::size_t> pos(static_cast<std::size_t>(r), 0);
    while (true) {
      std::vector<int> ks;
      for (std::size_t i : pos) ks.push_back(values[i]);
      fn(MultiIndex(ks));
      std::size_t i = 0;
      while (i < pos.size() && ++pos[i] == values.size()) pos[i++] = 0;
      if (i == pos.size()) break;
    }
  }
}

std::vector<Rational> shifts_for(const Grid& g, int r) {
  std::vector<Rational> out;
  for (const auto& o : g.shift_offsets) out.push_back(Rational(r) + o);
  for (const auto& a : g.absolute_shifts) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

ParamSet with_gamma_one(ParamSet p) {
  p.gamma = 1;
  return p;
}

std::string at_kp(const MultiIndex& k, const ParamSet& p) { return "k=" + k.str() + "," + p.str(); }

/// sum_i C(n, i) b[i] z^{n-i}.
Rational binomial_shift(int n, const std::vector<Rational>& b, const Rational& z) {
  Rational total;
  Rational zp(1);
  for (int i = n; i >= 0; --i) {
    total += Rational(binomial(n, i)) * b[i] * zp;
    zp *= z;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Polynomial structure in x
// ---------------------------------------------------------------------------

void check_addition(Context& c, bool c_is_e) {
  const int n_max = c.grid.n_max;
  const auto pts = c.points(n_max + 1);
  for_each_index(c.grid, [&](const MultiIndex& k) {
    for (ParamSet p : c.grid.params) {
      if (c_is_e) p = with_gamma_one(p);
      const Evaluator ev(k, p, n_max);
      const int r = k.depth();
      // The printed c = e form drops the factor r.
      const Rational rate = (c_is_e && !c.corrected()) ? Rational(1) : Rational(r) * p.gamma;
      for (const auto& x : pts) {
        const auto bx = ev.at(x);
        for (const auto& y : pts) {
          const auto lhs = ev.at(x + y);
          for (int n = 0; n <= n_max; ++n) {
            c.rec.check(lhs[n], binomial_shift(n, bx, rate * y), [&] {
              return at_kp(k, p) + ",n=" + std::to_string(n) + ",x=" + x.str() + ",y=" + y.str();
            });
          }
        }
      }
    }
  });
}

void addition_formula(Context& c) { check_addition(c, false); }
void addition_formula_c_e(Context& c) { check_addition(c, true); }

void multiplication_formula(Context& c) {
  const int n_max = c.grid.n_max;
  const auto pts = c.points(n_max + 1);
  for_each_index(c.grid, [&](const MultiIndex& k) {
    for (const auto& p : c.grid.params) {
      const Evaluator ev(k, p, n_max);
      const Rational rate = Rational(k.depth()) * p.gamma;
      for (int mult : c.grid.multipliers) {
        for (const auto& x : pts) {
          const auto bx = ev.at(x);
          const auto lhs = ev.at(Rational(mult) * x);
          for (int n = 0; n <= n_max; ++n) {
            c.rec.check(lhs[n], binomial_shift(n, bx, rate * Rational(mult - 1) * x), [&] {
              return at_kp(k, p) + ",n=" + std::to_string(n) + ",multiplier=" +
                     std::to_string(mult) + ",x=" + x.str();
            });
          }
        }
      }
    }
  });
}

void polynomial_in_x(Context& c) {
  const int n_max = c.grid.n_max;
  const auto pts = c.points(n_max + 1);
  for_each_index(c.grid, [&](const MultiIndex& k) {
    for (const auto& p : c.grid.params) {
      const Evaluator ev(k, p, n_max);
      const auto b0 = ev.at(0);
      const Rational factor = c.corrected() ? Rational(k.depth()) * p.gamma : p.gamma;
      for (const auto& x : pts) {
        const auto lhs = ev.at(x);
        for (int n = 0; n <= n_max; ++n) {
          c.rec.check(lhs[n], binomial_shift(n, b0, factor * x), [&] {
            return at_kp(k, p) + ",n=" + std::to_string(n) + ",x=" + x.str();
          });
        }
      }
    }
  });
}

void scaling_relation(Context& c) {
  const int n_max = c.grid.n_max;
  const auto pts = c.points(n_max + 1);
  for_each_index(c.grid, [&](const MultiIndex& k) {
    const Evaluator reduced(k, ParamSet::classical(), n_max);
    for (const auto& p : c.grid.params) {
      const Evaluator ev(k, p, n_max);
      const Rational s = p.alpha + p.beta;
      const Rational shift = c.corrected() ? p.beta : Rational(k.depth()) * p.beta;
      for (const auto& x : pts) {
        const auto lhs = ev.at(x);
        const auto rhs = reduced.at((x * p.gamma - shift) / s);
        for (int n = 0; n <= n_max; ++n) {
          c.rec.check(lhs[n], s.pow(n) * rhs[n], [&] {
            return at_kp(k, p) + ",n=" + std::to_string(n) + ",x=" + x.str();
          });
        }
      }
    }
  });
}

void check_appell(Context& c, bool c_is_e) {
  const int n_max = c.grid.n_max;
  for_each_index(c.grid, [&](const MultiIndex& k) {
    for (ParamSet p : c.grid.params) {
      if (c_is_e) p = with_gamma_one(p);
      const auto polys = multi_poly_bernoulli_polys(k, p, n_max);
      Rational rate = c_is_e ? Rational(1) : p.gamma;
      if (c.corrected()) rate *= Rational(k.depth());
      for (int n = 0; n + 1 <= n_max; ++n) {
        c.rec.check(polys[n + 1].derivative(), polys[n] * (Rational(n + 1) * rate),
                    [&] { return at_kp(k, p) + ",n=" + std::to_string(n); });
      }
    }
  });
}

void appell_derivative(Context& c) { check_appell(c, false); }
void appell_derivative_c_e(Context& c) { check_appell(c, true); }

// ---------------------------------------------------------------------------
// Expansions in Stirling numbers, higher-order Bernoulli and Frobenius-Euler
// ---------------------------------------------------------------------------

void check_rising_expansion(Context& c, bool proof_argument) {
  const int n_max = c.grid.n_max;
  const auto pts = c.points(n_max + 1);
  for_each_index(c.grid, [&](const MultiIndex& k) {
    const int r = k.depth();
    for (const auto& p : c.grid.params) {
      const Evaluator full(k, p, n_max);
      const Evaluator at_e(k, with_gamma_one(p), n_max);
      const Rational rate = Rational(r) * p.gamma;
      std::vector<std::vector<Rational>> shifted;  // shifted[m] = B(-m gamma [r]; a, b)
      for (int m = 0; m <= n_max; ++m) {
        const Rational arg = -Rational(m) * p.gamma * (proof_argument ? Rational(r) : Rational(1));
        shifted.push_back(at_e.at(arg));
      }
      for (const auto& x : pts) {
        const auto lhs = full.at(x);
        for (int n = 0; n <= n_max; ++n) {
          Rational rhs;
          for (int m = 0; m <= n; ++m) {
            Rational inner;
            for (int l = m; l <= n; ++l) {
              inner += rate.pow(l) * Rational(stirling2(l, m) * binomial(n, l)) * shifted[m][n - l];
            }
            rhs += inner * rising_factorial(x, static_cast<unsigned>(m));
          }
          c.rec.check(lhs[n], rhs, [&] {
            return at_kp(k, p) + ",n=" + std::to_string(n) + ",x=" + x.str();
          });
        }
      }
    }
  });
}

void rising_factorial_expansion(Context& c) { check_rising_expansion(c, false); }
void rising_factorial_expansion_proof(Context& c) { check_rising_expansion(c, true); }

void falling_factorial_expansion(Context& c) {
  const int n_max = c.grid.n_max;
  const auto pts = c.points(n_max + 1);
  for_each_index(c.grid, [&](const MultiIndex& k) {
    for (const auto& p : c.grid.params) {
      const Evaluator full(k, p, n_max);
      const auto b0 = Evaluator(k, with_gamma_one(p), n_max).at(0);
      const Rational rate = Rational(k.depth()) * p.gamma;
      for (const auto& x : pts) {
        const auto lhs = full.at(x);
        for (int n = 0; n <= n_max; ++n) {
          Rational rhs;
          for (int m = 0; m <= n; ++m) {
            Rational inner;
            for (int l = m; l <= n; ++l) {
              inner += rate.pow(l) * Rational(stirling2(l, m) * binomial(n, l)) * b0[n - l];
            }
            const auto um = static_cast<unsigned>(m);
            rhs += inner * (c.corrected() ? falling_factorial(x, um) : rising_factorial(x, um));
          }
          c.rec.check(lhs[n], rhs, [&] {
            return at_kp(k, p) + ",n=" + std::to_string(n) + ",x=" + x.str();
          });
        }
      }
    }
  });
}

void check_higher_bernoulli_expansion(Context& c, const Rational& stray_factor) {
  const int n_max = c.grid.n_max;
  const auto pts = c.points(n_max + 1);
  for_each_index(c.grid, [&](const MultiIndex& k) {
    for (const auto& p : c.grid.params) {
      const Evaluator full(k, p, n_max);
      const auto b0 = Evaluator(k, with_gamma_one(p), n_max).at(0);
      const Rational rate = Rational(k.depth()) * p.gamma;
      for (int s : c.grid.orders) {
        std::vector<Rational> weight;  // S(l+s, s) / C(l+s, l)
        for (int l = 0; l <= n_max; ++l) {
          weight.push_back(Rational(stirling2(l + s, s), binomial(l + s, l)));
        }
        for (const auto& x : pts) {
          const auto lhs = full.at(x);
          std::vector<Rational> hb;
          for (int m = 0; m <= n_max; ++m) hb.push_back(higher_bernoulli(s, m, x * rate));
          for (int n = 0; n <= n_max; ++n) {
            Rational rhs;
            for (int m = 0; m <= n; ++m) {
              Rational inner;
              for (int l = 0; l <= n - m; ++l) {
                inner += Rational(binomial(n - m, l)) * weight[l] * b0[n - m - l];
              }
              rhs += Rational(binomial(n, m)) * inner * hb[m];
            }
            c.rec.check(lhs[n], stray_factor * rhs, [&] {
              return at_kp(k, p) + ",s=" + std::to_string(s) + ",n=" + std::to_string(n) +
                     ",x=" + x.str();
            });
          }
        }
      }
    }
  });
}

void higher_bernoulli_expansion(Context& c) { check_higher_bernoulli_expansion(c, 1); }
void higher_bernoulli_expansion_proof(Context& c) { check_higher_bernoulli_expansion(c, 2); }

void frobenius_euler_expansion(Context& c) {
  const int n_max = c.grid.n_max;
  const auto pts = c.points(n_max + 1);
  for_each_index(c.grid, [&](const MultiIndex& k) {
    const int r = k.depth();
    for (const auto& p : c.grid.params) {
      const Evaluator full(k, p, n_max);
      const Evaluator at_e(k, with_gamma_one(p), n_max);
      const Rational rate = Rational(r) * p.gamma;
      for (int s : c.grid.orders) {
        std::vector<std::vector<Rational>> bj;
        for (int j = 0; j <= s; ++j) {
          bj.push_back(at_e.at(c.corrected() ? Rational(j) / Rational(r) : Rational(j)));
        }
        for (const auto& lambda : c.grid.lambdas) {
          if (lambda == Rational(1)) continue;
          const Rational scale = (Rational(1) - lambda).pow(-s);
          for (const auto& x : pts) {
            const auto lhs = full.at(x);
            std::vector<Rational> h;
            for (int m = 0; m <= n_max; ++m) h.push_back(frobenius_euler(s, m, x * rate, lambda));
            for (int n = 0; n <= n_max; ++n) {
              Rational rhs;
              for (int m = 0; m <= n; ++m) {
                Rational inner;
                for (int j = 0; j <= s; ++j) {
                  inner += Rational(binomial(s, j)) * (-lambda).pow(s - j) * bj[j][n - m];
                }
                rhs += Rational(binomial(n, m)) * scale * inner * h[m];
              }
              c.rec.check(lhs[n], rhs, [&] {
                return at_kp(k, p) + ",s=" + std::to_string(s) + ",lambda=" + lambda.str() +
                       ",n=" + std::to_string(n) + ",x=" + x.str();
              });
            }
          }
        }
      }
    }
  });
}

// ---------------------------------------------------------------------------
// Explicit formula
// ---------------------------------------------------------------------------

void check_explicit(Context& c, ExplicitBase base) {
  const int n_max = c.grid.n_max;
  const auto pts = c.points(n_max + 1);
  for_each_index(c.grid, [&](const MultiIndex& k) {
    for (const auto& p : c.grid.params) {
      const Evaluator ev(k, p, n_max);
      for (const auto& x : pts) {
        const auto lhs = ev.at(x);
        for (int n = 0; n <= n_max; ++n) {
          c.rec.check(lhs[n], multi_poly_bernoulli_explicit(k, p, x, n, base), [&] {
            return at_kp(k, p) + ",n=" + std::to_string(n) + ",x=" + x.str();
          });
        }
      }
    }
  });
}

void explicit_formula(Context& c) {
  check_explicit(c, c.corrected() ? ExplicitBase::corrected : ExplicitBase::as_printed);
}
void explicit_formula_gamma_only(Context& c) { check_explicit(c, ExplicitBase::gamma_only); }

// ---------------------------------------------------------------------------
// Symmetrized family
// ---------------------------------------------------------------------------

void double_generating_function(Context& c) {
  const int n_max = c.grid.n_max;
  const int m_max = c.grid.m_max;
  const auto xs = c.points(n_max + 1);
  const auto ys = c.points(m_max + 1);
  const auto variant =
      c.corrected() ? ClosedFormVariant::corrected : ClosedFormVariant::as_printed;
  for (int r : c.grid.depths) {
    if (r < 2) continue;
    for (const auto& p : c.grid.params) {
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          const auto def = symmetrized_definition_table(m_max, n_max, r, p, x, y);
          const auto closed = symmetrized_closed_table(m_max, n_max, r, p, x, y, variant);
          for (int m = 0; m <= m_max; ++m) {
            for (int n = 0; n <= n_max; ++n) {
              c.rec.check(def[m][n], closed[m][n], [&] {
                return "r=" + std::to_string(r) + "," + p.str() + ",n=" + std::to_string(n) +
                       ",m=" + std::to_string(m) + ",x=" + x.str() + ",y=" + y.str();
              });
            }
          }
        }
      }
    }
  }
}

void check_duality(Context& c, bool swap_indices) {
  const int n_max = c.grid.n_max;
  if (n_max < 0) return;
  const auto pts = c.points(n_max + 1);
  const ParamSet p = ParamSet::classical();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Rational>>> tables;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      tables[{i, j}] = symmetrized_definition_table(n_max, n_max, 2, p, pts[i], pts[j]);
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const auto& lhs = tables[{i, j}];
      const auto& rhs = tables[{j, i}];
      for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= n_max; ++m) {
          const Rational& other = swap_indices ? rhs[n][m] : rhs[m][n];
          c.rec.check(lhs[m][n], other, [&] {
            return "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",x=" + pts[i].str() +
                   ",y=" + pts[j].str();
          });
        }
      }
    }
  }
}

void duality_as_printed(Context& c) { check_duality(c, false); }
void duality_corrected(Context& c) { check_duality(c, true); }

// ---------------------------------------------------------------------------
// Classical specializations
// ---------------------------------------------------------------------------

void classical_reduction(Context& c) {
  const auto values = multi_poly_bernoulli(MultiIndex{1}, ParamSet::classical(), 0, c.grid.n_max);
  for (int n = 0; n <= c.grid.n_max; ++n) {
    Rational expected = bernoulli_number(n);
    if (n % 2) expected = -expected;
    c.rec.check(values[n], expected, [&] { return "n=" + std::to_string(n); });
  }
}

std::vector<std::vector<Rational>> negative_index_table(int n_max) {
  std::vector<std::vector<Rational>> table;  // table[k][n] = B_n^{(-k)}
  for (int k = 0; k <= n_max; ++k) table.push_back(reduced_multi_poly_bernoulli(MultiIndex{-k}, 0, n_max));
  return table;
}

void arakawa_kaneko_formula(Context& c) {
  const auto table = negative_index_table(c.grid.n_max);
  for (int k = 0; k <= c.grid.n_max; ++k) {
    for (int n = 0; n <= c.grid.n_max; ++n) {
      c.rec.check(table[k][n], arakawa_kaneko(n, k),
                  [&] { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); });
    }
  }
}

void arakawa_kaneko_symmetry(Context& c) {
  const auto table = negative_index_table(c.grid.n_max);
  for (int k = 0; k <= c.grid.n_max; ++k) {
    for (int n = 0; n <= c.grid.n_max; ++n) {
      c.rec.check(table[k][n], table[n][k],
                  [&] { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); });
    }
  }
}

void imatomi_recurrence(Context& c) {
  const auto entry = c.corrected() ? RecurrenceEntry::last : RecurrenceEntry::first;
  for_each_index(c.grid, [&](const MultiIndex& k) {
    for (const auto& row : imatomi_recurrence_check(k, c.grid.n_max, entry)) {
      c.rec.check(row.lhs, row.rhs, [&] { return "k=" + k.str() + ",n=" + std::to_string(row.n); });
    }
  });
}

void check_imatomi_explicit(Context& c, ImatomiWeights weights) {
  for_each_index(c.grid, [&](const MultiIndex& k) {
    const auto values = imatomi_numbers(k, c.grid.n_max);
    for (int n = 0; n <= c.grid.n_max; ++n) {
      c.rec.check(values[n], imatomi_explicit(k, n, weights),
                  [&] { return "k=" + k.str() + ",n=" + std::to_string(n); });
    }
  });
}

void imatomi_explicit_formula(Context& c) {
  check_imatomi_explicit(c, c.corrected() ? ImatomiWeights::corrected : ImatomiWeights::as_printed);
}
void imatomi_explicit_subscript(Context& c) { check_imatomi_explicit(c, ImatomiWeights::subscript); }

// ---------------------------------------------------------------------------
// Hurwitz-Lerch family
// ---------------------------------------------------------------------------

void li_phi_relation(Context& c) {
  for_each_index(c.grid, [&](const MultiIndex& k) {
    const int r = k.depth();
    const int order = c.grid.n_max + r;
    const Series z = Series::variable(order);
    const Series li = li_multi_series(k, z);
    const Series rhs = z.pow(static_cast<unsigned>(r)) * phi_multi_series(k, {Rational(r)}, z);
    for (int M = 0; M <= order; ++M) {
      c.rec.check(li[M], rhs[M], [&] { return "k=" + k.str() + ",power=" + std::to_string(M); });
    }
  });
}

void hurwitz_type_explicit(Context& c) {
  for (int e : c.grid.entries) {
    for (const auto& a : shifts_for(c.grid, 1)) {
      const HurwitzShift shift{a};
      const auto values = hurwitz_numbers(MultiIndex{e}, shift, c.grid.n_max);
      for (int n = 0; n <= c.grid.n_max; ++n) {
        c.rec.check(values[n], hurwitz_single_explicit(e, shift, n), [&] {
          return "k=(" + std::to_string(e) + "),a=" + a.str() + ",n=" + std::to_string(n);
        });
      }
    }
  }
}

void hurwitz_whitney_explicit(Context& c) {
  const int n_max = c.grid.n_max;
  const auto pts = c.points(n_max + 1);
  for_each_index(c.grid, [&](const MultiIndex& k) {
    for (const auto& a : shifts_for(c.grid, k.depth())) {
      for (const auto& x : pts) {
        const auto values = hurwitz_polynomials(k, {a}, x, n_max);
        for (int n = 0; n <= n_max; ++n) {
          c.rec.check(values[n], hurwitz_explicit_whitney(k, {a}, x, n), [&] {
            return "k=" + k.str() + ",a=" + a.str() + ",n=" + std::to_string(n) + ",x=" + x.str();
          });
        }
      }
    }
  });
}

void hurwitz_stirling_explicit(Context& c) {
  for_each_index(c.grid, [&](const MultiIndex& k) {
    for (const auto& a : shifts_for(c.grid, k.depth())) {
      const auto values = hurwitz_numbers(k, {a}, c.grid.n_max);
      for (int n = 0; n <= c.grid.n_max; ++n) {
        c.rec.check(values[n], hurwitz_explicit_stirling(k, {a}, n), [&] {
          return "k=" + k.str() + ",a=" + a.str() + ",n=" + std::to_string(n);
        });
      }
    }
  });
}

void hurwitz_nonnegative(Context& c) {
  std::vector<int> positive;
  for (int e : c.grid.entries) {
    if (e > 0) positive.push_back(e);
  }
  for_each_index(
      c.grid,
      [&](const MultiIndex& k) {
        const int r = k.depth();
        for (const auto& a : shifts_for(c.grid, r)) {
          if (!a.is_integer() || a < Rational(r)) continue;
          const auto values = hurwitz_numbers(k.negated(), {a}, c.grid.n_max);
          for (int n = 0; n <= c.grid.n_max; ++n) {
            c.rec.check_claim(values[n].is_integer() && values[n].sign() >= 0, values[n],
                              "nonnegative integer", [&] {
                                return "k=" + k.negated().str() + ",a=" + a.str() +
                                       ",n=" + std::to_string(n);
                              });
          }
        }
      },
      &positive);
}

// ---------------------------------------------------------------------------
// Whitney numbers
// ---------------------------------------------------------------------------

void whitney_sign_reduction(Context& c) {
  const WhitneyParams w{Rational(-1), Rational(0)};
  for (int n = 0; n <= c.grid.n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      Rational expected(stirling2(n, k));
      if ((n + k) % 2) expected = -expected;
      c.rec.check(whitney2(w, n, k), expected,
                  [&] { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); });
    }
  }
}

void whitney_constructions(Context& c) {
  for (const auto& w : c.grid.whitney) {
    for (int n = 0; n <= c.grid.n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        c.rec.check(whitney2(w, n, k), whitney2_recurrence(w, n, k), [&] {
          return "m=" + w.m.str() + ",r=" + w.r.str() + ",n=" + std::to_string(n) +
                 ",k=" + std::to_string(k);
        });
      }
    }
  }
}

void bernoulli_whitney(Context& c) {
  const int n_max = c.grid.n_max;
  std::vector<Rational> bern;
  for (int n = 0; n <= n_max + 1; ++n) bern.push_back(bernoulli_number(n));
  const int l_min = c.corrected() ? 1 : 0;
  for (const auto& w : c.grid.whitney) {
    if (w.m.is_zero()) continue;
    for (int n = 0; n <= n_max; ++n) {
      for (int l = l_min; l <= n + 1; ++l) {
        const Rational lhs = Rational(binomial(n + 1, l)) * bern[n - l + 1];
        Rational sum;
        for (int k = 0; k <= n; ++k) {
          sum += whitney2_recurrence(w, n, k) * whitney1(w, k + 1, l) / Rational(k + 1);
        }
        const Rational rhs = Rational(n + 1) * w.m.pow(-(n - l + 1)) * sum;
        c.rec.check(lhs, rhs, [&] {
          return "m=" + w.m.str() + ",r=" + w.r.str() + ",n=" + std::to_string(n) +
                 ",l=" + std::to_string(l);
        });
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

using Runner = void (*)(Context&);

struct Entry {
  IdentityInfo info;
  Runner run;
  void (*tune)(Grid&);
};

const std::vector<Variant> kBoth{Variant::as_printed, Variant::corrected};
const std::vector<Variant> kPrinted{Variant::as_printed};
const std::vector<Variant> kCorrected{Variant::corrected};
const std::vector<Variant> kAlternative{Variant::alternative};

Grid base_grid() {
  Grid g;
  g.params = {ParamSet::classical(), {Rational(1), Rational(1), Rational(1)},
              {Rational(2, 3), Rational(1, 5), Rational(3, 7)}};
  g.lambdas = {Rational(-1), Rational(1, 2)};
  g.shift_offsets = {Rational(0), Rational(1, 2)};
  g.absolute_shifts = {Rational(5)};
  g.whitney = {{Rational(-1), Rational(0)},
               {Rational(-1), Rational(3, 2)},
               {Rational(1), Rational(0)},
               {Rational(2), Rational(3)},
               {Rational(1, 2), Rational(-1, 3)}};
  return g;
}

void small_expansion(Grid& g) {
  g.n_max = 5;
  g.entries = {-1, 1, 2};
  g.params = {ParamSet::classical(), {Rational(2, 3), Rational(1, 5), Rational(3, 7)}};
}

void deep_index(Grid& g) {
  g.depths = {1, 2, 3};
  g.entries = {-1, 1, 2};
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e = {
        {{"addition-formula", "B_n(x+y) as a binomial sum in (r ln c) y", kBoth},
         addition_formula, small_expansion},
        {{"addition-formula-c-e", "addition formula at c = e", kBoth}, addition_formula_c_e,
         small_expansion},
        {{"appell-derivative", "d/dx B_{n+1} = (n+1) r ln c B_n", kBoth}, appell_derivative,
         [](Grid&) {}},
        {{"appell-derivative-c-e", "Appell property at c = e", kBoth}, appell_derivative_c_e,
         [](Grid&) {}},
        {{"arakawa-kaneko", "B_n^(-k) as a double Stirling sum", kBoth}, arakawa_kaneko_formula,
         [](Grid& g) { g.n_max = 10; }},
        {{"arakawa-kaneko-symmetry", "B_n^(-k) = B_k^(-n)", kBoth}, arakawa_kaneko_symmetry,
         [](Grid& g) { g.n_max = 10; }},
        {{"bernoulli-whitney", "Bernoulli numbers through both kinds of r-Whitney numbers",
          kBoth},
         bernoulli_whitney, [](Grid& g) { g.n_max = 6; }},
        {{"classical-reduction", "k = (1), a = c = e, b = 1 gives B_n(1)", kBoth},
         classical_reduction, [](Grid& g) { g.n_max = 20; }},
        {{"double-generating-function", "multinomial definition of C vs its closed form", kBoth},
         double_generating_function,
         [](Grid& g) {
           g.n_max = 4;
           g.m_max = 4;
           g.depths = {2, 3};
           g.params = {ParamSet::classical(), {Rational(2, 3), Rational(1, 5), Rational(3, 7)}};
         }},
        {{"duality-as-printed", "C^(m)_{n,2}(x,y) = C^(m)_{n,2}(y,x)", kPrinted},
         duality_as_printed, [](Grid& g) { g.n_max = 6; }},
        {{"duality-corrected", "C^(m)_{n,2}(x,y) = C^(n)_{m,2}(y,x)", kCorrected},
         duality_corrected, [](Grid& g) { g.n_max = 6; }},
        {{"explicit-formula", "double-sum explicit formula vs generating function", kBoth},
         explicit_formula, deep_index},
        {{"explicit-formula-gamma-only",
          "explicit formula with base r x ln c - j ln a - (j+1) ln b", kAlternative},
         explicit_formula_gamma_only, deep_index},
        {{"falling-factorial-expansion", "expansion in Stirling numbers around x = 0", kBoth},
         falling_factorial_expansion, small_expansion},
        {{"frobenius-euler-expansion", "expansion in higher-order Frobenius-Euler polynomials",
          kBoth},
         frobenius_euler_expansion, small_expansion},
        {{"higher-bernoulli-expansion", "expansion in higher-order Bernoulli polynomials", kBoth},
         higher_bernoulli_expansion, small_expansion},
        {{"higher-bernoulli-expansion-proof-step", "same expansion with the proof's factor 2",
          kPrinted},
         higher_bernoulli_expansion_proof, small_expansion},
        {{"hurwitz-nonnegative", "B_{n,a}^(-k) are nonnegative integers for integer a >= r",
          kBoth},
         hurwitz_nonnegative,
         [](Grid& g) {
           g.depths = {1, 2, 3};
           g.entries = {1, 2};
           g.shift_offsets = {Rational(0), Rational(1)};
         }},
        {{"hurwitz-stirling-explicit", "Hurwitz-Lerch numbers as a Stirling sum", kBoth},
         hurwitz_stirling_explicit, deep_index},
        {{"hurwitz-type-explicit", "depth-one Hurwitz type poly-Bernoulli closed form", kBoth},
         hurwitz_type_explicit, [](Grid& g) { g.entries = {-2, -1, 0, 1, 2}; }},
        {{"hurwitz-whitney-explicit", "Hurwitz-Lerch polynomials as an r-Whitney sum", kBoth},
         hurwitz_whitney_explicit, deep_index},
        {{"imatomi-explicit", "Stirling-sum formula for denominator-power-one numbers", kBoth},
         imatomi_explicit_formula,
         [](Grid& g) {
           g.n_max = 8;
           g.depths = {1, 2, 3};
         }},
        {{"imatomi-explicit-subscript", "Stirling-sum formula with weights m_j^{k_j}",
          kAlternative},
         imatomi_explicit_subscript,
         [](Grid& g) {
           g.n_max = 8;
           g.depths = {1, 2, 3};
         }},
        {{"imatomi-recurrence", "recurrence lowering one index entry", kBoth}, imatomi_recurrence,
         [](Grid& g) {
           g.n_max = 8;
           g.depths = {1, 2, 3};
         }},
        {{"li-phi-relation", "Li_k(z) / z^r = Phi_k(z, r)", kBoth}, li_phi_relation,
         [](Grid& g) {
           g.n_max = 10;
           g.depths = {1, 2, 3};
           g.entries = {-2, -1, 0, 1, 2};
         }},
        {{"multiplication-formula", "B_n(m x) from B_i(x)", kBoth}, multiplication_formula,
         small_expansion},
        {{"polynomial-in-x", "B_n(x) as a polynomial with coefficients B_i(0)", kBoth},
         polynomial_in_x, deep_index},
        {{"rising-factorial-expansion", "expansion in rising factorials of x", kBoth},
         rising_factorial_expansion, small_expansion},
        {{"rising-factorial-expansion-proof-step",
          "rising-factorial expansion with the proof's argument -m r ln c", kPrinted},
         rising_factorial_expansion_proof, small_expansion},
        {{"scaling-relation", "B_n(x;a,b,c) through the a = c = e, b = 1 family", kBoth},
         scaling_relation, deep_index},
        {{"whitney-constructions", "r-Whitney numbers: generating function vs recurrence", kBoth},
         whitney_constructions, [](Grid& g) { g.n_max = 12; }},
        {{"whitney-sign-reduction", "W_{-1,0}(n,k) = (-1)^{n+k} S(n,k)", kBoth},
         whitney_sign_reduction, [](Grid& g) { g.n_max = 12; }},
    };
    std::sort(e.begin(), e.end(),
              [](const Entry& a, const Entry& b) { return a.info.id < b.info.id; });
    return e;
  }();
  return entries;
}

const Entry* find_entry(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.info.id == id) return &e;
  }
  return nullptr;
}

std::string registered_list() {
  std::string out;
  for (const auto& e : registry()) {
    if (!out.empty()) out += ", ";
    out += e.info.id;
  }
  return out;
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::as_printed:
      return "as_printed";
    case Variant::corrected:
      return "corrected";
    case Variant::alternative:
      return "alternative";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view text) {
  for (Variant v : {Variant::as_printed, Variant::corrected, Variant::alternative}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

UnknownIdentity::UnknownIdentity(const std::string& id)
    : std::invalid_argument("unknown identity '" + id + "'; registered: " + registered_list()) {}

const std::vector<IdentityInfo>& registered_identities() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const IdentityInfo* find_identity(std::string_view id) {
  const Entry* e = find_entry(id);
  return e ? &e->info : nullptr;
}

Grid default_grid(std::string_view id) {
  const Entry* e = find_entry(id);
  if (!e) throw UnknownIdentity(std::string(id));
  Grid g = base_grid();
  e->tune(g);
  return g;
}

IdentityReport run_identity(const IdentityCase& c) {
  const Entry* e = find_entry(c.id);
  if (!e) throw UnknownIdentity(c.id);
  const auto& offered = e->info.variants;
  if (std::find(offered.begin(), offered.end(), c.variant) == offered.end()) {
    throw std::invalid_argument("identity '" + c.id + "' has no " +
                                std::string(to_string(c.variant)) + " variant");
  }
  IdentityReport report;
  report.id = c.id;
  report.variant = c.variant;
  if (c.grid.n_max < 0) return report;
  Sampler sampler(c.seed ^ fnv1a(c.id));
  Recorder rec(report);
  Context ctx{c.grid, c.variant, sampler, rec};
  e->run(ctx);
  return report;
}

std::vector<IdentityReport> run_identities(const std::vector<std::string>& ids,
                                           std::uint64_t seed) {
  std::vector<IdentityReport> out;
  for (const auto& id : ids) {
    const Entry* e = find_entry(id);
    if (!e) throw UnknownIdentity(id);
    for (Variant v : e->info.variants) out.push_back(run_identity({id, v, default_grid(id), seed}));
  }
  return out;
}

std::vector<IdentityReport> run_all(std::uint64_t seed) {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.info.id);
  return run_identities(ids, seed);
}

bool corrected_variants_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) {
    return r.variant != Variant::corrected || r.passed();
  });
}

}  // namespace mpbern
