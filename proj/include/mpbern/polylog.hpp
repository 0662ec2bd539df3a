#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpbern/rational.hpp"
#include "mpbern/series.hpp"

namespace mpbern {

/// Index vector (k_1, ..., k_r) of a multiple polylogarithm; r >= 1.
class MultiIndex {
 public:
  MultiIndex(std::initializer_list<int> ks);
  explicit MultiIndex(std::vector<int> ks);

  int depth() const { return static_cast<int>(ks_.size()); }
  int operator[](int i) const { return ks_[static_cast<std::size_t>(i)]; }
  std::span<const int> values() const { return ks_; }

  /// Every entry negated.
  MultiIndex negated() const;
  /// "(k_1,...,k_r)".
  std::string str() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> ks_;
};

/// Shift a of the multiple Hurwitz-Lerch series; position i (1-based) of a
/// depth-r index uses the base m_i + a - r + i.
struct HurwitzShift {
  Rational value;
};

/// Raised when a shifted base m_i + a - r + i vanishes under a nonzero
/// exponent. Carries the 1-based position and the offending m_i.
class ShiftError : public std::domain_error {
 public:
  ShiftError(int position, int component, const std::string& what)
      : std::domain_error(what), position_(position), component_(component) {}
  int position() const { return position_; }
  int component() const { return component_; }

 private:
  int position_;
  int component_;
};

/// Coefficient of z^M in Li_k(z): sum over 0 < m_1 < ... < m_r = M of
/// prod m_j^{-k_j}. Zero for M < r.
Rational li_weight(const MultiIndex& k, int M);
/// li_weight(k, M) for M = 0..max_m in one pass.
std::vector<Rational> li_weights(const MultiIndex& k, int max_m);

/// Throws ShiftError if any base m_i + a - r + i with 0 <= m_i <= max_m is
/// zero at a position with k_i != 0.
void validate_shift(const MultiIndex& k, const HurwitzShift& a, int max_m);

/// Coefficient of z^M in Phi_k(z, a): sum over 0 <= m_1 <= ... <= m_r = M of
/// prod (m_i + a - r + i)^{-k_i}.
Rational phi_weight(const MultiIndex& k, const HurwitzShift& a, int M);
std::vector<Rational> phi_weights(const MultiIndex& k, const HurwitzShift& a, int max_m);

/// Li_k(inner) for an inner series without constant term.
Series li_multi_series(const MultiIndex& k, const Series& inner);
/// Phi_k(inner, a) for an inner series without constant term.
Series phi_multi_series(const MultiIndex& k, const HurwitzShift& a, const Series& inner);

}  // namespace mpbern
