#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kronmod/json_io.hpp"

namespace kronmod {

struct CampaignConfig {
  Field field;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::string suite = "all";
  /// 0 picks std::thread::hardware_concurrency(). The report does not
  /// depend on this value.
  unsigned workers = 0;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  /// Fixed instances checked in addition to the random trials.
  std::size_t fixed = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  /// Trials that ended in NeedsExtension (only possible over Q).
  std::size_t needs_extension = 0;
  /// Draws discarded by rejection sampling.
  std::size_t rejected = 0;
  /// Violation records, in trial order.
  std::vector<json> details;
};

struct CampaignReport {
  std::string field;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<SuiteReport> suites;

  std::size_t violations() const;
  /// Summary without violation details.
  json summary() const;
};

/// epsilon-rho, transform, king-vs-det, normal-form, hypersurface,
/// blowdown, snake.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite or trials == 0.
CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace kronmod
