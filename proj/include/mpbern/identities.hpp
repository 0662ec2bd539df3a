#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpbern/combinatorics.hpp"
#include "mpbern/family.hpp"
#include "mpbern/rational.hpp"

namespace mpbern {

/// Which reading of an identity is being checked. Only `corrected` results
/// decide whether a verification run succeeds; the other two document
/// where the printed statement (or a plausible repair of it) breaks.
enum class Variant { as_printed, corrected, alternative };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

/// Finite parameter grid. Each identity reads the fields it needs; a
/// negative n_max yields an empty run.
struct Grid {
  int n_max = 6;
  /// Second index bound (the u-degree m of the symmetrized family).
  int m_max = 4;
  std::vector<int> depths{1, 2};
  std::vector<int> entries{-1, 0, 1, 2};
  std::vector<ParamSet> params;
  std::vector<int> orders{1, 2};
  std::vector<Rational> lambdas;
  /// Hurwitz shifts: r + offset for each offset, plus each absolute value.
  std::vector<Rational> shift_offsets;
  std::vector<Rational> absolute_shifts;
  std::vector<int> multipliers{2, 3};
  std::vector<WhitneyParams> whitney;
  /// Evaluation points in x (and y). Empty means n_max + 1 seeded distinct
  /// rationals, which makes polynomial identities of degree <= n_max exact.
  std::vector<Rational> points;
};

struct IdentityCase {
  std::string id;
  Variant variant = Variant::corrected;
  Grid grid;
  std::uint64_t seed = 0;
};

struct Failure {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string id;
  Variant variant = Variant::corrected;
  std::int64_t cases = 0;
  std::int64_t failure_count = 0;
  /// The first kMaxStoredFailures failures, in evaluation order.
  std::vector<Failure> failures;

  static constexpr std::size_t kMaxStoredFailures = 20;
  bool passed() const { return failure_count == 0; }
};

struct IdentityInfo {
  std::string id;
  std::string summary;
  std::vector<Variant> variants;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(const std::string& id);
};

/// Every registered identity, sorted by id.
const std::vector<IdentityInfo>& registered_identities();
const IdentityInfo* find_identity(std::string_view id);

/// The grid used by run_all for this identity.
Grid default_grid(std::string_view id);

/// Evaluates one identity variant over its grid with exact comparisons.
/// Throws UnknownIdentity for an unregistered id and std::invalid_argument
/// when the variant is not offered.
IdentityReport run_identity(const IdentityCase& c);

/// Every variant of the given ids on their default grids, in the given order.
std::vector<IdentityReport> run_identities(const std::vector<std::string>& ids, std::uint64_t seed);
/// Every registered identity and variant, ordered by id.
std::vector<IdentityReport> run_all(std::uint64_t seed);

/// True when every corrected-variant report has no failures.
bool corrected_variants_pass(const std::vector<IdentityReport>& reports);

/// {"seed":..., "identities":[{"id","variant","cases","failure_count","failures":[...]}]}
std::string reports_to_json(const std::vector<IdentityReport>& reports, std::uint64_t seed);
/// Header "id,variant,cases,failures" then one row per report.
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

}  // namespace mpbern
