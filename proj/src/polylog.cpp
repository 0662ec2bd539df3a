#include "mpbern/polylog.hpp"

namespace mpbern {

MultiIndex::MultiIndex(std::initializer_list<int> ks) : MultiIndex(std::vector<int>(ks)) {}

MultiIndex::MultiIndex(std::vector<int> ks) : ks_(std::move(ks)) {
  if (ks_.empty()) throw std::invalid_argument("multi-index must have at least one entry");
}

MultiIndex MultiIndex::negated() const {
  std::vector<int> out(ks_);
  for (int& k : out) k = -k;
  return MultiIndex(std::move(out));
}

std::string MultiIndex::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < ks_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ks_[i]);
  }
  return out + ")";
}

std::vector<Rational> li_weights(const MultiIndex& k, int max_m) {
  if (max_m < 0) return {};
  const std::size_t size = static_cast<std::size_t>(max_m) + 1;
  // level[m]: sum over chains 0 < m_1 < ... < m_i = m of the partial product.
  std::vector<Rational> level(size);
  for (int m = 1; m <= max_m; ++m) level[m] = Rational(m).pow(-k[0]);
  for (int i = 1; i < k.depth(); ++i) {
    std::vector<Rational> next(size);
    Rational prefix;
    for (int m = 1; m <= max_m; ++m) {
      prefix += level[m - 1];
      if (!prefix.is_zero()) next[m] = prefix * Rational(m).pow(-k[i]);
    }
    level = std::move(next);
  }
  return level;
}

Rational li_weight(const MultiIndex& k, int M) {
  if (M < 0) throw std::invalid_argument("li_weight: negative power");
  return li_weights(k, M)[M];
}

void validate_shift(const MultiIndex& k, const HurwitzShift& a, int max_m) {
  const int r = k.depth();
  for (int i = 1; i <= r; ++i) {
    if (k[i - 1] == 0) continue;
    const Rational offset = a.value - Rational(r) + Rational(i);
    for (int m = 0; m <= max_m; ++m) {
      if ((Rational(m) + offset).is_zero()) {
        throw ShiftError(i, m,
                         "Hurwitz shift a=" + a.value.str() + " gives a zero base at position " +
                             std::to_string(i) + " (m_" + std::to_string(i) + "=" +
                             std::to_string(m) + ") of index " + k.str());
      }
    }
  }
}

std::vector<Rational> phi_weights(const MultiIndex& k, const HurwitzShift& a, int max_m) {
  if (max_m < 0) return {};
  validate_shift(k, a, max_m);
  const int r = k.depth();
  const std::size_t size = static_cast<std::size_t>(max_m) + 1;
  const auto base = [&](int i, int m) { return Rational(m) + a.value - Rational(r) + Rational(i); };
  std::vector<Rational> level(size);
  for (int m = 0; m <= max_m; ++m) level[m] = base(1, m).pow(-k[0]);
  for (int i = 2; i <= r; ++i) {
    std::vector<Rational> next(size);
    Rational prefix;
    for (int m = 0; m <= max_m; ++m) {
      prefix += level[m];
      next[m] = prefix * base(i, m).pow(-k[i - 1]);
    }
    level = std::move(next);
  }
  return level;
}

Rational phi_weight(const MultiIndex& k, const HurwitzShift& a, int M) {
  if (M < 0) throw std::invalid_argument("phi_weight: negative power");
  return phi_weights(k, a, M)[M];
}

Series li_multi_series(const MultiIndex& k, const Series& inner) {
  return compose_vanishing(li_weights(k, inner.order()), inner);
}

Series phi_multi_series(const MultiIndex& k, const HurwitzShift& a, const Series& inner) {
  return compose_vanishing(phi_weights(k, a, inner.order()), inner);
}

}  // namespace mpbern
