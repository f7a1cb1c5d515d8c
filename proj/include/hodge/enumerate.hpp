#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodge/construct.hpp"

namespace hodge {

/// All m^{|quarter|-1} targets of dimension n, in odometer order over the
/// quarter entries other than (0,0), last entry fastest.
std::vector<ResidueTarget> all_targets(int n, std::int64_t m);

/// Runs construct on one target and checks congruences, validity, and that
/// the recipe re-evaluates to the same diamond. Empty string on success.
std::string check_target(const ResidueTarget& target);

struct EnumerateReport {
  std::size_t count = 0;
  std::optional<std::size_t> first_failure;  // index into all_targets
  std::string message;

  /// "ok <count>" or "fail <index>: <message>".
  std::string summary() const;
};

/// Checks every target, spreading work over `jobs` threads. Results are
/// merged by target order, so the report does not depend on `jobs`.
EnumerateReport enumerate_targets(int n, std::int64_t m, unsigned jobs);

}  // namespace hodge
