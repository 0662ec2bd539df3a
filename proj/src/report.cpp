#include <sstream>

#include <json.hpp>

#include "mpbern/identities.hpp"

namespace mpbern {

std::string reports_to_json(const std::vector<IdentityReport>& reports, std::uint64_t seed) {
  using nlohmann::ordered_json;
  ordered_json list = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json failures = ordered_json::array();
    for (const auto& f : r.failures) {
      failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    list.push_back({{"id", r.id},
                    {"variant", std::string(to_string(r.variant))},
                    {"cases", r.cases},
                    {"failure_count", r.failure_count},
                    {"failures", std::move(failures)}});
  }
  ordered_json doc{{"seed", seed}, {"identities", std::move(list)}};
  return doc.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<IdentityReport>& reports) {
  std::ostringstream out;
  out << "id,variant,cases,failures\n";
  for (const auto& r : reports) {
    out << r.id << ',' << to_string(r.variant) << ',' << r.cases << ',' << r.failure_count << '\n';
  }
  return out.str();
}

}  // namespace mpbern
