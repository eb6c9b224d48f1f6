#ifndef LEACH_EXPERIMENT_HPP
#define LEACH_EXPERIMENT_HPP

#include "leach/config.hpp"
#include "leach/metrics.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace leach {

class ExperimentError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Base-station placements used in the reference comparisons.
struct BsPreset
{
  std::string_view name;
  Point position;
};

inline constexpr BsPreset bs_presets[] = {
  {"center", {50.0, 50.0}},
  {"corner", {120.0, 120.0}},
  {"edge", {40.0, 120.0}},
  {"far", {140.0, 50.0}},
};

std::optional<Point> preset_position (std::string_view name);

/// base, base + 1, ..., base + count - 1.
std::vector<std::uint64_t> seed_range (std::uint64_t base, int count);

struct ExperimentSpec
{
  SimConfig base;
  std::vector<std::uint64_t> seeds;
  /// Modes to simulate in cmd_run; cmd_compare always runs both.
  std::vector<ElectionMode> modes{ElectionMode::classic};
  int jobs = 1;
  bool shared_topology = true;
  std::filesystem::path out_dir = "out";

  /// Throws ExperimentError (or ConfigError for the base config).
  void validate () const;
};

/// One trace CSV per (mode, seed) plus summary.csv. Returns the files
/// written, traces first in (mode, seed) order.
std::vector<std::filesystem::path> cmd_run (const ExperimentSpec& spec);

/// Runs both modes on every seed and writes comparison_runs.csv,
/// comparison_stats.csv and digest.txt. Returns the report.
ComparisonReport cmd_compare (const ExperimentSpec& spec);

/// Prints the derived estimator constants, or every violated invariant.
/// Returns the process exit code (0 when the config is valid).
int cmd_validate (const SimConfig& config, std::ostream& out, std::ostream& err);

} // namespace leach

#endif
