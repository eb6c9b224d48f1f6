#ifndef LEACH_METRICS_HPP
#define LEACH_METRICS_HPP

#include "leach/config.hpp"
#include "leach/engine.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leach {

/// Time-to-event and throughput figures of one run, in rounds.
///
/// A run that hits max_rounds with nodes still alive is censored: its
/// lifetime (and instability period) is unknown and left empty rather than
/// reported as the cap.
struct RunSummary
{
  std::optional<int> first_death_round; ///< end of the stability period
  std::optional<int> last_death_round;  ///< network lifetime
  std::optional<int> instability_rounds;
  std::int64_t total_packets_to_bs = 0;
  std::int64_t total_packets_to_ch = 0;
  double mean_ch_per_round = 0.0;
  int rounds_simulated = 0;
  bool censored = false;

  friend bool operator== (const RunSummary&, const RunSummary&) = default;
};

/// `initial_nodes` is N at deployment. Throws std::invalid_argument on an
/// empty record list.
RunSummary summarize (std::span<const RoundRecord> records, int initial_nodes);

enum class Metric
{
  first_death_round,
  last_death_round,
  instability_rounds,
  total_packets_to_bs,
  total_packets_to_ch,
  mean_ch_per_round,
  rounds_simulated,
};

inline constexpr std::array all_metrics{
  Metric::first_death_round,  Metric::last_death_round,    Metric::instability_rounds,
  Metric::total_packets_to_bs, Metric::total_packets_to_ch, Metric::mean_ch_per_round,
  Metric::rounds_simulated,
};

std::string_view metric_name (Metric metric);
std::optional<double> metric_value (const RunSummary& summary, Metric metric);

/// Mean, sample standard deviation, min and max of the defined values.
struct FieldStats
{
  int count = 0;
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double max = 0.0;
};

FieldStats describe (std::span<const std::optional<double>> values);

struct ModeSummary
{
  ElectionMode mode = ElectionMode::classic;
  std::vector<RunSummary> runs; ///< one per seed, in seed order
  std::array<FieldStats, all_metrics.size ()> stats{};
};

/// Per-seed adaptive minus classic for one metric.
struct PairedDelta
{
  Metric metric = Metric::first_death_round;
  std::vector<std::optional<double>> per_seed;
  FieldStats stats;
  double positive_fraction = 0.0; ///< share of defined deltas that are > 0
};

struct ComparisonReport
{
  std::vector<std::uint64_t> seeds;
  std::string fingerprint;
  bool shared_topology = true;
  ModeSummary classic;
  ModeSummary adaptive;
  std::vector<PairedDelta> deltas; ///< in all_metrics order
  /// Per seed: node positions of both runs are bit-identical.
  std::vector<bool> identical_topology;
  /// Per seed: every node of the classic run is farther from the BS than
  /// the crossover distance.
  std::vector<bool> bs_beyond_crossover;
  /// Per seed: both runs elected the same heads in every round.
  std::vector<bool> identical_heads;

  const PairedDelta& delta (Metric metric) const;
  const FieldStats& stats (ElectionMode mode, Metric metric) const;
};

struct CompareOptions
{
  int jobs = 1;
  /// Adaptive and classic runs of a seed share node placement.
  bool shared_topology = true;
};

/// Runs both election modes for every seed and pairs the results.
/// Throws std::invalid_argument when `seeds` is empty.
ComparisonReport compare (const SimConfig& config, std::span<const std::uint64_t> seeds,
                          const CompareOptions& options = {});

/// Builds the report from already-run traces (classic[i] and adaptive[i]
/// belong to seeds[i]).
ComparisonReport build_report (const SimConfig& config, std::span<const std::uint64_t> seeds,
                               std::span<const RunTrace> classic,
                               std::span<const RunTrace> adaptive, bool shared_topology);

} // namespace leach

#endif
