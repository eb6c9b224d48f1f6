#ifndef LEACH_CSV_HPP
#define LEACH_CSV_HPP

#include "leach/engine.hpp"
#include "leach/metrics.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace leach {

// Every file starts with a "# leach-sim <kind> v<N>" schema line followed
// by the column header. Reals use the shortest round-trip representation;
// undefined values (censored runs) are written as NA.

inline constexpr std::string_view trace_header =
  "round,alive,total_energy_j,ch_count,packets_to_bs_cum,packets_to_ch_cum,est_avg_energy_j";
inline constexpr std::string_view summary_header =
  "mode,seed,first_death_round,last_death_round,instability_rounds,total_packets_to_bs,"
  "total_packets_to_ch,mean_ch_per_round,rounds_simulated,censored";
inline constexpr std::string_view trace_schema = "# leach-sim trace v1";
inline constexpr std::string_view summary_schema = "# leach-sim summary v1";
inline constexpr std::string_view comparison_runs_schema = "# leach-sim comparison-runs v1";
inline constexpr std::string_view comparison_stats_schema = "# leach-sim comparison-stats v1";

class CsvError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

void write_trace (std::ostream& out, std::span<const RoundRecord> records);
std::vector<RoundRecord> read_trace (std::istream& in);

struct SummaryRow
{
  ElectionMode mode = ElectionMode::classic;
  std::uint64_t seed = 0;
  RunSummary summary;

  friend bool operator== (const SummaryRow&, const SummaryRow&) = default;
};

void write_summary_header (std::ostream& out);
void write_summary_row (std::ostream& out, const SummaryRow& row);
std::vector<SummaryRow> read_summaries (std::istream& in);

/// One row per (seed, mode) plus the per-seed pairing flags.
void write_comparison_runs (std::ostream& out, const ComparisonReport& report);

/// One row per metric: per-mode mean/sd/min/max and the paired delta.
void write_comparison_stats (std::ostream& out, const ComparisonReport& report);

/// Plain-text digest of the comparison.
void write_digest (std::ostream& out, const ComparisonReport& report, const SimConfig& config);

} // namespace leach

#endif
