#include "leach/csv.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <charconv>
#include <istream>
#include <sstream>
#include <ostream>
#include <string>

namespace leach {

namespace {

std::vector<std::string_view>
split (std::string_view line)
{
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true)
    {
      const std::size_t comma = line.find (',', start);
      cells.push_back (line.substr (start, comma - start));
      if (comma == std::string_view::npos)
        {
          break;
        }
      start = comma + 1;
    }
  return cells;
}

template <typename T>
T
parse_cell (std::string_view cell, std::size_t line_no)
{
  T value{};
  auto [ptr, ec] = std::from_chars (cell.data (), cell.data () + cell.size (), value);
  if (ec != std::errc () || ptr != cell.data () + cell.size () || cell.empty ())
    {
      throw CsvError (fmt::format ("line {}: malformed value '{}'", line_no, cell));
    }
  return value;
}

std::optional<int>
parse_optional (std::string_view cell, std::size_t line_no)
{
  if (cell == "NA")
    {
      return std::nullopt;
    }
  return parse_cell<int> (cell, line_no);
}

std::string
format_optional (std::optional<int> v)
{
  return v ? fmt::format ("{}", *v) : std::string ("NA");
}

/// Reads the schema and header lines, then hands each data row to `row`.
template <typename RowFn>
void
read_table (std::istream& in, std::string_view schema, std::string_view header,
            std::size_t columns, RowFn row)
{
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline (in, line) || line != schema)
    {
      throw CsvError (fmt::format ("line 1: expected schema line '{}'", schema));
    }
  ++line_no;
  if (!std::getline (in, line) || line != header)
    {
      throw CsvError ("line 2: unexpected column header");
    }
  while (std::getline (in, line))
    {
      ++line_no;
      if (line.empty ())
        {
          continue;
        }
      const auto cells = split (line);
      if (cells.size () != columns)
        {
          throw CsvError (fmt::format ("line {}: expected {} columns, found {}", line_no,
                                       columns, cells.size ()));
        }
      row (cells, line_no);
    }
}

} // namespace

void
write_trace (std::ostream& out, std::span<const RoundRecord> records)
{
  fmt::print (out, "{}\n{}\n", trace_schema, trace_header);
  for (const RoundRecord& r : records)
    {
      fmt::print (out, "{},{},{},{},{},{},{}\n", r.round, r.alive, r.total_residual_energy,
                  r.ch_count, r.packets_to_bs, r.packets_to_ch, r.estimated_avg_energy);
    }
}

std::vector<RoundRecord>
read_trace (std::istream& in)
{
  std::vector<RoundRecord> records;
  read_table (in, trace_schema, trace_header, 7, [&] (const auto& c, std::size_t n) {
    RoundRecord r;
    r.round = parse_cell<int> (c[0], n);
    r.alive = parse_cell<int> (c[1], n);
    r.total_residual_energy = parse_cell<double> (c[2], n);
    r.ch_count = parse_cell<int> (c[3], n);
    r.packets_to_bs = parse_cell<std::int64_t> (c[4], n);
    r.packets_to_ch = parse_cell<std::int64_t> (c[5], n);
    r.estimated_avg_energy = parse_cell<double> (c[6], n);
    records.push_back (r);
  });
  return records;
}

void
write_summary_header (std::ostream& out)
{
  fmt::print (out, "{}\n{}\n", summary_schema, summary_header);
}

void
write_summary_row (std::ostream& out, const SummaryRow& row)
{
  const RunSummary& s = row.summary;
  fmt::print (out, "{},{},{},{},{},{},{},{},{},{}\n", to_string (row.mode), row.seed,
              format_optional (s.first_death_round), format_optional (s.last_death_round),
              format_optional (s.instability_rounds), s.total_packets_to_bs,
              s.total_packets_to_ch, s.mean_ch_per_round, s.rounds_simulated,
              s.censored ? 1 : 0);
}

std::vector<SummaryRow>
read_summaries (std::istream& in)
{
  std::vector<SummaryRow> rows;
  read_table (in, summary_schema, summary_header, 10, [&] (const auto& c, std::size_t n) {
    SummaryRow row;
    try
      {
        row.mode = parse_mode (c[0]);
      }
    catch (const std::exception& e)
      {
        throw CsvError (fmt::format ("line {}: {}", n, e.what ()));
      }
    row.seed = parse_cell<std::uint64_t> (c[1], n);
    row.summary.first_death_round = parse_optional (c[2], n);
    row.summary.last_death_round = parse_optional (c[3], n);
    row.summary.instability_rounds = parse_optional (c[4], n);
    row.summary.total_packets_to_bs = parse_cell<std::int64_t> (c[5], n);
    row.summary.total_packets_to_ch = parse_cell<std::int64_t> (c[6], n);
    row.summary.mean_ch_per_round = parse_cell<double> (c[7], n);
    row.summary.rounds_simulated = parse_cell<int> (c[8], n);
    row.summary.censored = parse_cell<int> (c[9], n) != 0;
    rows.push_back (row);
  });
  return rows;
}

void
write_comparison_runs (std::ostream& out, const ComparisonReport& report)
{
  fmt::print (out, "{}\n{},identical_topology,bs_beyond_crossover,identical_heads\n",
              comparison_runs_schema, summary_header);
  for (std::size_t i = 0; i < report.seeds.size (); ++i)
    {
      for (const ModeSummary* mode : {&report.classic, &report.adaptive})
        {
          std::ostringstream row;
          write_summary_row (row, SummaryRow{mode->mode, report.seeds[i], mode->runs[i]});
          std::string text = row.str ();
          text.pop_back ();
          fmt::print (out, "{},{},{},{}\n", text, report.identical_topology[i] ? 1 : 0,
                      report.bs_beyond_crossover[i] ? 1 : 0, report.identical_heads[i] ? 1 : 0);
        }
    }
}

void
write_comparison_stats (std::ostream& out, const ComparisonReport& report)
{
  fmt::print (out, "{}\n# config {} seeds {} topology {}\n", comparison_stats_schema,
              report.fingerprint, report.seeds.size (),
              report.shared_topology ? "shared" : "independent");
  fmt::print (out, "metric,classic_n,classic_mean,classic_sd,classic_min,classic_max,"
                   "adaptive_n,adaptive_mean,adaptive_sd,adaptive_min,adaptive_max,"
                   "delta_n,delta_mean,delta_sd,delta_min,delta_max,delta_positive_fraction\n");
  for (Metric m : all_metrics)
    {
      const FieldStats& c = report.stats (ElectionMode::classic, m);
      const FieldStats& a = report.stats (ElectionMode::adaptive, m);
      const PairedDelta& d = report.delta (m);
      fmt::print (out, "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", metric_name (m),
                  c.count, c.mean, c.sd, c.min, c.max, a.count, a.mean, a.sd, a.min, a.max,
                  d.stats.count, d.stats.mean, d.stats.sd, d.stats.min, d.stats.max,
                  d.positive_fraction);
    }
}

void
write_digest (std::ostream& out, const ComparisonReport& report, const SimConfig& config)
{
  fmt::print (out, "LEACH vs adaptive LEACH, {} seed(s), {} topologies\n", report.seeds.size (),
              report.shared_topology ? "shared" : "independent");
  fmt::print (out, "base station ({}, {}), field {} m, N = {}, config {}\n\n", config.field.bs.x,
              config.field.bs.y, config.field.side, config.field.n, report.fingerprint);

  const std::pair<Metric, std::string_view> rows[] = {
    {Metric::first_death_round, "stability period (first death)"},
    {Metric::last_death_round, "network lifetime (last death)"},
    {Metric::instability_rounds, "instability period"},
    {Metric::total_packets_to_bs, "packets to BS"},
    {Metric::total_packets_to_ch, "packets to CHs"},
    {Metric::mean_ch_per_round, "CHs per round"},
  };
  fmt::print (out, "{:<32} {:>14} {:>14} {:>14} {:>10}\n", "metric", "classic", "adaptive",
              "mean delta", "delta > 0");
  for (const auto& [metric, label] : rows)
    {
      const FieldStats& c = report.stats (ElectionMode::classic, metric);
      const FieldStats& a = report.stats (ElectionMode::adaptive, metric);
      const PairedDelta& d = report.delta (metric);
      fmt::print (out, "{:<32} {:>14.2f} {:>14.2f} {:>+14.2f} {:>9.0f}%\n", label, c.mean, a.mean,
                  d.stats.mean, 100.0 * d.positive_fraction);
    }

  int censored = 0;
  for (const ModeSummary* m : {&report.classic, &report.adaptive})
    {
      for (const RunSummary& s : m->runs)
        {
          censored += s.censored;
        }
    }
  int beyond = 0;
  int same_heads = 0;
  for (std::size_t i = 0; i < report.seeds.size (); ++i)
    {
      beyond += report.bs_beyond_crossover[i];
      same_heads += report.identical_heads[i];
    }
  fmt::print (out, "\ncensored runs: {}\n", censored);
  fmt::print (out, "seeds with every node beyond the {:.2f} m crossover: {}\n",
              effective_threshold (config.radio), beyond);
  fmt::print (out, "seeds with identical cluster-head sequences: {}\n", same_heads);
}

} // namespace leach
