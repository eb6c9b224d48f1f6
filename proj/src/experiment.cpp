#include "leach/experiment.hpp"
#include "leach/batch.hpp"
#include "leach/csv.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <ostream>

namespace leach {

namespace {

namespace fs = std::filesystem;

void
prepare_out_dir (const fs::path& dir)
{
  std::error_code ec;
  fs::create_directories (dir, ec);
  if (ec || !fs::is_directory (dir))
    {
      throw ExperimentError (fmt::format ("cannot create output directory '{}': {}",
                                          dir.string (), ec ? ec.message () : "not a directory"));
    }
}

template <typename WriteFn>
fs::path
write_file (const fs::path& path, WriteFn write)
{
  std::ofstream out (path, std::ios::binary | std::ios::trunc);
  if (!out)
    {
      throw ExperimentError (fmt::format ("cannot open '{}' for writing", path.string ()));
    }
  write (out);
  out.flush ();
  if (!out)
    {
      throw ExperimentError (fmt::format ("write to '{}' failed", path.string ()));
    }
  return path;
}

} // namespace

std::optional<Point>
preset_position (std::string_view name)
{
  for (const BsPreset& p : bs_presets)
    {
      if (p.name == name)
        {
          return p.position;
        }
    }
  return std::nullopt;
}

std::vector<std::uint64_t>
seed_range (std::uint64_t base, int count)
{
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < count; ++i)
    {
      seeds.push_back (base + static_cast<std::uint64_t> (i));
    }
  return seeds;
}

void
ExperimentSpec::validate () const
{
  base.validate ();
  if (seeds.empty ())
    {
      throw ExperimentError ("seed list is empty; give --seeds N (N >= 1) or --seed-list");
    }
  if (modes.empty ())
    {
      throw ExperimentError ("no election mode selected");
    }
  if (jobs < 1)
    {
      throw ExperimentError (fmt::format ("--jobs must be >= 1 (got {})", jobs));
    }
}

std::vector<fs::path>
cmd_run (const ExperimentSpec& spec)
{
  spec.validate ();
  prepare_out_dir (spec.out_dir);

  std::vector<SimConfig> configs;
  std::vector<SummaryRow> rows;
  for (ElectionMode mode : spec.modes)
    {
      for (std::uint64_t seed : spec.seeds)
        {
          SimConfig c = spec.base;
          c.mode = mode;
          c.seed = seed;
          c.topology_seed.reset ();
          configs.push_back (c);
          rows.push_back (SummaryRow{mode, seed, {}});
        }
    }

  const std::vector<RunTrace> traces = run_batch (configs, spec.jobs);

  std::vector<fs::path> written;
  for (std::size_t i = 0; i < traces.size (); ++i)
    {
      const fs::path path = spec.out_dir
                            / fmt::format ("trace_{}_seed{}.csv", to_string (rows[i].mode),
                                           rows[i].seed);
      written.push_back (write_file (path, [&] (std::ostream& out) {
        write_trace (out, traces[i].records);
      }));
      rows[i].summary = summarize (traces[i].records, spec.base.field.n);
    }
  written.push_back (write_file (spec.out_dir / "summary.csv", [&] (std::ostream& out) {
    write_summary_header (out);
    for (const SummaryRow& row : rows)
      {
        write_summary_row (out, row);
      }
  }));
  return written;
}

ComparisonReport
cmd_compare (const ExperimentSpec& spec)
{
  spec.validate ();
  prepare_out_dir (spec.out_dir);

  CompareOptions options;
  options.jobs = spec.jobs;
  options.shared_topology = spec.shared_topology;
  ComparisonReport report = compare (spec.base, spec.seeds, options);

  write_file (spec.out_dir / "comparison_runs.csv",
              [&] (std::ostream& out) { write_comparison_runs (out, report); });
  write_file (spec.out_dir / "comparison_stats.csv",
              [&] (std::ostream& out) { write_comparison_stats (out, report); });
  write_file (spec.out_dir / "digest.txt",
              [&] (std::ostream& out) { write_digest (out, report, spec.base); });
  return report;
}

int
cmd_validate (const SimConfig& config, std::ostream& out, std::ostream& err)
{
  const auto problems = config.violations ();
  if (!problems.empty ())
    {
      fmt::print (err, "configuration has {} problem(s):\n", problems.size ());
      for (const auto& p : problems)
        {
          fmt::print (err, "  {}\n", p);
        }
      return 2;
    }

  const DerivedQuantities q = derive (config);
  fmt::print (out, "configuration OK ({})\n", config_fingerprint (config));
  fmt::print (out, "d_th      = {:.10g} m  (sqrt(eps_fs / eps_mp))\n", q.d_th);
  if (config.radio.threshold_override)
    {
      fmt::print (out, "d_o       = {:.10g} m  (override in force)\n", q.crossover);
    }
  fmt::print (out, "epoch     = {} rounds  (round(1 / P_opt))\n", q.epoch);
  fmt::print (out, "k         = {:.10g}  (expected cluster heads, N * P_opt)\n", q.k_clusters);
  fmt::print (out, "d_toBS    = {:.10g} m\n", q.d_to_bs);
  fmt::print (out, "d_toCH    = {:.10g} m\n", q.d_to_ch);
  fmt::print (out, "E_total   = {:.10g} J  (N * E_o)\n", q.e_total);
  fmt::print (out, "E_round   = {:.10g} J\n", q.e_round);
  fmt::print (out, "R         = {:.10g} rounds  (E_total / E_round)\n", q.r_max);
  return 0;
}

} // namespace leach
