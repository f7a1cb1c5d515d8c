#include "hodge/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hodge/error.hpp"
#include "hodge/text_format.hpp"

namespace hodge {

std::vector<ResidueTarget> all_targets(int n, std::int64_t m) {
  auto quarter = quarter_indices(n);
  quarter.erase(quarter.begin());  // (0,0) is pinned to 1
  std::vector<std::int64_t> digits(quarter.size(), 0);
  std::vector<ResidueTarget> out;
  while (true) {
    ResidueTarget t(n, m);
    for (std::size_t i = 0; i < quarter.size(); ++i) t.set(quarter[i].p, quarter[i].q, digits[i]);
    out.push_back(std::move(t));
    std::size_t i = digits.size();
    while (i > 0 && digits[i - 1] == m - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

std::string check_target(const ResidueTarget& target) {
  try {
    const auto result = construct(target);
    if (auto bad = congruence_mismatches(result.diamond, target); !bad.empty()) {
      return "h " + std::to_string(bad.front().p) + " " + std::to_string(bad.front().q) +
             " not congruent to target";
    }
    if (auto problems = validate(result.diamond, true); !problems.empty()) {
      return "invalid diamond: " + problems.front();
    }
    const Recipe reparsed = parse_recipe(format_recipe(result.recipe));
    if (format_diamond(eval_recipe(reparsed)) != format_diamond(result.diamond)) {
      return "recipe does not re-evaluate to the constructed diamond";
    }
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

std::string EnumerateReport::summary() const {
  if (first_failure) return "fail " + std::to_string(*first_failure) + ": " + message;
  return "ok " + std::to_string(count);
}

EnumerateReport enumerate_targets(int n, std::int64_t m, unsigned jobs) {
  const auto targets = all_targets(n, m);
  std::vector<std::string> results(targets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < targets.size(); i = next++) results[i] = check_target(targets[i]);
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  EnumerateReport report;
  report.count = targets.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].empty()) {
      report.first_failure = i;
      report.message = results[i];
      break;
    }
  }
  return report;
}

}  // namespace hodge
