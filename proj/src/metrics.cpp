#include "leach/metrics.hpp"
#include "leach/batch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leach {

RunSummary
summarize (std::span<const RoundRecord> records, int initial_nodes)
{
  if (records.empty ())
    {
      throw std::invalid_argument ("cannot summarize an empty run");
    }

  RunSummary s;
  s.rounds_simulated = static_cast<int> (records.size ());

  int alive_at_start = initial_nodes;
  double ch_sum = 0.0;
  int active_rounds = 0;
  for (const RoundRecord& r : records)
    {
      if (!s.first_death_round && r.alive < initial_nodes)
        {
          s.first_death_round = r.round;
        }
      if (!s.last_death_round && r.alive == 0)
        {
          s.last_death_round = r.round;
        }
      if (alive_at_start > 0)
        {
          ch_sum += r.ch_count;
          ++active_rounds;
        }
      alive_at_start = r.alive;
    }

  const RoundRecord& last = records.back ();
  s.censored = last.alive > 0;
  if (s.first_death_round && s.last_death_round)
    {
      s.instability_rounds = *s.last_death_round - *s.first_death_round;
    }
  s.total_packets_to_bs = last.packets_to_bs;
  s.total_packets_to_ch = last.packets_to_ch;
  s.mean_ch_per_round = active_rounds > 0 ? ch_sum / active_rounds : 0.0;
  return s;
}

std::string_view
metric_name (Metric metric)
{
  switch (metric)
    {
    case Metric::first_death_round: return "first_death_round";
    case Metric::last_death_round: return "last_death_round";
    case Metric::instability_rounds: return "instability_rounds";
    case Metric::total_packets_to_bs: return "total_packets_to_bs";
    case Metric::total_packets_to_ch: return "total_packets_to_ch";
    case Metric::mean_ch_per_round: return "mean_ch_per_round";
    case Metric::rounds_simulated: return "rounds_simulated";
    }
  return "unknown";
}

std::optional<double>
metric_value (const RunSummary& s, Metric metric)
{
  auto opt = [] (std::optional<int> v) -> std::optional<double> {
    if (v)
      {
        return static_cast<double> (*v);
      }
    return std::nullopt;
  };
  switch (metric)
    {
    case Metric::first_death_round: return opt (s.first_death_round);
    case Metric::last_death_round: return opt (s.last_death_round);
    case Metric::instability_rounds: return opt (s.instability_rounds);
    case Metric::total_packets_to_bs: return static_cast<double> (s.total_packets_to_bs);
    case Metric::total_packets_to_ch: return static_cast<double> (s.total_packets_to_ch);
    case Metric::mean_ch_per_round: return s.mean_ch_per_round;
    case Metric::rounds_simulated: return static_cast<double> (s.rounds_simulated);
    }
  return std::nullopt;
}

FieldStats
describe (std::span<const std::optional<double>> values)
{
  FieldStats out;
  double sum = 0.0;
  for (const auto& v : values)
    {
      if (!v)
        {
          continue;
        }
      if (out.count == 0)
        {
          out.min = out.max = *v;
        }
      out.min = std::min (out.min, *v);
      out.max = std::max (out.max, *v);
      sum += *v;
      ++out.count;
    }
  if (out.count == 0)
    {
      return out;
    }
  out.mean = sum / out.count;
  if (out.count > 1)
    {
      double ss = 0.0;
      for (const auto& v : values)
        {
          if (v)
            {
              ss += (*v - out.mean) * (*v - out.mean);
            }
        }
      out.sd = std::sqrt (ss / (out.count - 1));
    }
  return out;
}

const PairedDelta&
ComparisonReport::delta (Metric metric) const
{
  return deltas.at (static_cast<std::size_t> (metric));
}

const FieldStats&
ComparisonReport::stats (ElectionMode mode, Metric metric) const
{
  const ModeSummary& m = mode == ElectionMode::classic ? classic : adaptive;
  return m.stats.at (static_cast<std::size_t> (metric));
}

namespace {

ModeSummary
summarize_mode (ElectionMode mode, std::span<const RunTrace> traces, int n)
{
  ModeSummary out;
  out.mode = mode;
  for (const RunTrace& t : traces)
    {
      out.runs.push_back (summarize (t.records, n));
    }
  for (Metric m : all_metrics)
    {
      std::vector<std::optional<double>> values;
      for (const RunSummary& s : out.runs)
        {
          values.push_back (metric_value (s, m));
        }
      out.stats[static_cast<std::size_t> (m)] = describe (values);
    }
  return out;
}

} // namespace

ComparisonReport
build_report (const SimConfig& config, std::span<const std::uint64_t> seeds,
              std::span<const RunTrace> classic, std::span<const RunTrace> adaptive,
              bool shared_topology)
{
  if (classic.size () != seeds.size () || adaptive.size () != seeds.size ())
    {
      throw std::invalid_argument ("one classic and one adaptive trace per seed required");
    }

  ComparisonReport report;
  report.seeds.assign (seeds.begin (), seeds.end ());
  report.fingerprint = config_fingerprint (config);
  report.shared_topology = shared_topology;
  report.classic = summarize_mode (ElectionMode::classic, classic, config.field.n);
  report.adaptive = summarize_mode (ElectionMode::adaptive, adaptive, config.field.n);

  for (Metric m : all_metrics)
    {
      PairedDelta d;
      d.metric = m;
      int positive = 0;
      for (std::size_t i = 0; i < seeds.size (); ++i)
        {
          const auto a = metric_value (report.adaptive.runs[i], m);
          const auto c = metric_value (report.classic.runs[i], m);
          if (a && c)
            {
              d.per_seed.push_back (*a - *c);
              positive += *a - *c > 0.0;
            }
          else
            {
              d.per_seed.push_back (std::nullopt);
            }
        }
      d.stats = describe (d.per_seed);
      d.positive_fraction = d.stats.count > 0 ? static_cast<double> (positive) / d.stats.count : 0.0;
      report.deltas.push_back (std::move (d));
    }

  const double crossover = effective_threshold (config.radio);
  for (std::size_t i = 0; i < seeds.size (); ++i)
    {
      report.identical_topology.push_back (classic[i].positions == adaptive[i].positions);
      report.identical_heads.push_back (classic[i].cluster_heads == adaptive[i].cluster_heads);
      report.bs_beyond_crossover.push_back (
        std::all_of (classic[i].positions.begin (), classic[i].positions.end (),
                     [&] (Point p) { return distance (p, config.field.bs) > crossover; }));
    }
  return report;
}

ComparisonReport
compare (const SimConfig& config, std::span<const std::uint64_t> seeds,
         const CompareOptions& options)
{
  if (seeds.empty ())
    {
      throw std::invalid_argument ("comparison needs at least one seed");
    }
  config.validate ();

  std::vector<SimConfig> configs;
  for (std::uint64_t seed : seeds)
    {
      SimConfig c = config;
      c.seed = seed;
      c.topology_seed.reset ();
      c.mode = ElectionMode::classic;
      configs.push_back (c);
    }
  for (std::uint64_t seed : seeds)
    {
      SimConfig a = config;
      a.seed = seed;
      a.mode = ElectionMode::adaptive;
      a.topology_seed.reset ();
      if (!options.shared_topology)
        {
          a.topology_seed = seed + 0x9E3779B97F4A7C15ULL;
        }
      configs.push_back (a);
    }

  std::vector<RunTrace> traces = run_batch (configs, options.jobs);
  const std::span<const RunTrace> all (traces);
  return build_report (config, seeds, all.first (seeds.size ()), all.subspan (seeds.size ()),
                       options.shared_topology);
}

} // namespace leach
