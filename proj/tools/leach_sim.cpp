// leach_sim: run, compare and validate LEACH / adaptive LEACH experiments.

#include "leach/config.hpp"
#include "leach/csv.hpp"
#include "leach/experiment.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct Options
{
  std::string config_path;
  std::string bs_preset;
  std::vector<double> bs;
  std::optional<int> seeds;
  std::optional<std::uint64_t> base_seed;
  std::vector<std::uint64_t> seed_list;
  std::string mode;
  int jobs = 1;
  std::string out = "out";
  bool independent = false;
};

void
add_common (CLI::App& cmd, Options& o)
{
  cmd.add_option ("--config", o.config_path, "Configuration file (sections of key = value)");
  auto* preset = cmd.add_option ("--bs-preset", o.bs_preset, "Base station: center, corner, edge, far")
                   ->check (CLI::IsMember ({"center", "corner", "edge", "far"}));
  cmd.add_option ("--bs", o.bs, "Base station position X,Y")->delimiter (',')->expected (2)
    ->excludes (preset);
}

void
add_experiment (CLI::App& cmd, Options& o)
{
  add_common (cmd, o);
  auto* count = cmd.add_option ("--seeds", o.seeds, "Number of seeds (base-seed, base-seed+1, ...)");
  cmd.add_option ("--base-seed", o.base_seed, "First seed (default: simulation.seed)");
  cmd.add_option ("--seed-list", o.seed_list, "Explicit comma-separated seeds")
    ->delimiter (',')->excludes (count);
  cmd.add_option ("--jobs", o.jobs, "Parallel runs")->check (CLI::PositiveNumber);
  cmd.add_option ("--out", o.out, "Output directory");
}

leach::SimConfig
base_config (const Options& o)
{
  leach::SimConfig config = o.config_path.empty () ? leach::SimConfig{}
                                                   : leach::load_config (o.config_path);
  if (!o.bs_preset.empty ())
    {
      config.field.bs = *leach::preset_position (o.bs_preset);
    }
  if (o.bs.size () == 2)
    {
      config.field.bs = leach::Point{o.bs[0], o.bs[1]};
    }
  return config;
}

leach::ExperimentSpec
experiment (const Options& o, int default_seeds)
{
  leach::ExperimentSpec spec;
  spec.base = base_config (o);
  if (!o.seed_list.empty ())
    {
      spec.seeds = o.seed_list;
    }
  else
    {
      spec.seeds = leach::seed_range (o.base_seed.value_or (spec.base.seed),
                                      o.seeds.value_or (default_seeds));
    }
  spec.jobs = o.jobs;
  spec.out_dir = o.out;
  spec.shared_topology = !o.independent;
  return spec;
}

} // namespace

int
main (int argc, char** argv)
{
  CLI::App app{"Discrete-round LEACH / adaptive LEACH sensor-network simulator"};
  app.require_subcommand (1);
  Options o;

  auto* run = app.add_subcommand ("run", "Simulate and write per-round traces plus summary.csv");
  add_experiment (*run, o);
  run->add_option ("--mode", o.mode, "classic, adaptive or both (default: protocol.mode)")
    ->check (CLI::IsMember ({"classic", "adaptive", "both"}));

  auto* compare = app.add_subcommand ("compare", "Paired classic vs adaptive comparison");
  add_experiment (*compare, o);
  compare->add_flag ("--independent-topologies", o.independent,
                     "Deploy the adaptive runs on their own topologies");

  auto* validate = app.add_subcommand ("validate", "Check a configuration and print derived constants");
  add_common (*validate, o);

  CLI11_PARSE (app, argc, argv);

  try
    {
      if (*validate)
        {
          return leach::cmd_validate (base_config (o), std::cout, std::cerr);
        }

      if (*run)
        {
          leach::ExperimentSpec spec = experiment (o, 1);
          if (o.mode == "both")
            {
              spec.modes = {leach::ElectionMode::classic, leach::ElectionMode::adaptive};
            }
          else
            {
              spec.modes = {o.mode.empty () ? spec.base.mode : leach::parse_mode (o.mode)};
            }
          const auto files = leach::cmd_run (spec);
          fmt::print ("wrote {} file(s) to {}\n", files.size (), spec.out_dir.string ());
          return 0;
        }

      const leach::ExperimentSpec spec = experiment (o, 30);
      const leach::ComparisonReport report = leach::cmd_compare (spec);
      leach::write_digest (std::cout, report, spec.base);
      return 0;
    }
  catch (const leach::ConfigError& e)
    {
      fmt::print (stderr, "config error: {}\n", e.what ());
      return 2;
    }
  catch (const leach::ExperimentError& e)
    {
      fmt::print (stderr, "error: {}\n", e.what ());
      return 1;
    }
  catch (const std::exception& e)
    {
      fmt::print (stderr, "error: {}\n", e.what ());
      return 1;
    }
}
