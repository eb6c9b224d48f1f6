// Acceptance suite: one PASS/FAIL line per criterion. Optional argv[1] is
// the path to the leach_sim executable for the cross-process determinism
// check.

#include "leach/csv.hpp"
#include "leach/experiment.hpp"
#include "oracles.hpp"

#include <fmt/format.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>

using namespace leach;
namespace fs = std::filesystem;

namespace {

constexpr double equation_tolerance = 1e-9;   // relative
constexpr double conservation_tolerance = 1e-12; // J absolute
constexpr double ch_count_tolerance = 0.15;
constexpr double stability_positive_share = 0.70;
constexpr double parity_tolerance = 0.10;
constexpr int seed_count = 30;
constexpr std::uint64_t base_seed = 1;

// E_total / E_round for the default parameters, evaluated to 30 digits
// outside this code base.
constexpr double hand_r_max = 6822.311896717916;

struct Outcome
{
  bool pass;
  std::string detail;
};

std::string leach_sim_path;

SimConfig
preset_config (std::string_view preset)
{
  SimConfig c;
  c.field.bs = *preset_position (preset);
  return c;
}

const std::vector<std::uint64_t>&
seeds ()
{
  static const auto s = seed_range (base_seed, seed_count);
  return s;
}

/// Comparison reports per preset, computed once and shared by criteria 5-7.
const ComparisonReport&
report_for (std::string_view preset, double e_elec = 5e-9)
{
  static std::map<std::pair<std::string, double>, ComparisonReport> cache;
  const auto key = std::make_pair (std::string (preset), e_elec);
  auto it = cache.find (key);
  if (it == cache.end ())
    {
      SimConfig c = preset_config (preset);
      c.radio.e_elec = e_elec;
      it = cache.emplace (key, compare (c, seeds (), {8, true})).first;
    }
  return it->second;
}

std::string
slurp (const fs::path& path)
{
  std::ifstream in (path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf ();
  return s.str ();
}

bool
same_directory_bytes (const fs::path& a, const fs::path& b, int& files)
{
  std::set<std::string> names_a, names_b;
  for (const auto& e : fs::directory_iterator (a)) names_a.insert (e.path ().filename ().string ());
  for (const auto& e : fs::directory_iterator (b)) names_b.insert (e.path ().filename ().string ());
  if (names_a != names_b)
    {
      return false;
    }
  files = static_cast<int> (names_a.size ());
  for (const auto& name : names_a)
    {
      if (slurp (a / name) != slurp (b / name))
        {
          return false;
        }
    }
  return true;
}

Outcome
equation_oracles ()
{
  std::mt19937_64 gen (2024);
  std::uniform_real_distribution<double> unit (0.0, 1.0);
  auto radio = [&] {
    RadioParams p;
    p.e_elec = 1e-9 * (1 + 99 * unit (gen));
    p.eps_fs = 1e-12 * (1 + 19 * unit (gen));
    p.eps_mp = 1e-16 * (1 + 99 * unit (gen));
    p.e_da = 1e-9 * (1 + 9 * unit (gen));
    return p;
  };
  auto bits = [&] { return static_cast<std::int64_t> (200000 * unit (gen)); };
  auto dist = [&] { return 300.0 * unit (gen); };

  std::map<std::string, double> worst;
  auto track = [&] (const std::string& name, long double got, long double expected) {
    worst[name] = std::max (worst[name], oracle::rel_error (got, expected));
  };

  for (int i = 0; i < 1000; ++i)
    {
      const RadioParams p = radio ();
      const auto ref = oracle::from (p);
      const auto k = bits ();
      const double d = dist ();
      const auto m = 1 + static_cast<std::int64_t> (120 * unit (gen));
      track ("tx", tx_energy (k, d, p), oracle::tx (k, d, ref));
      track ("rx", rx_energy (k, p), oracle::rx (k, ref));
      track ("ch", ch_round_energy (k, m, d, p), oracle::cluster_head (k, m, d, ref));
      track ("non-ch", non_ch_round_energy (k, d, p), oracle::member (k, d, ref));
      track ("d_th", distance_threshold (p), oracle::crossover (p.eps_fs, p.eps_mp));

      const double popt = 0.01 + 0.49 * unit (gen);
      const int round = static_cast<int> (100000 * unit (gen));
      track ("T(s)", leach_threshold (popt, round, true), oracle::threshold (popt, round, true));

      SimConfig c;
      c.radio = p;
      c.field.n = 10 + static_cast<int> (490 * unit (gen));
      c.field.side = 20 + 480 * unit (gen);
      c.popt = popt;
      c.message_bits = 1 + bits ();
      c.e0 = 0.05 + unit (gen);
      const double e_round = expected_round_energy (c);
      track ("E_round", e_round,
             oracle::round_energy (c.field.n, c.message_bits, c.popt, c.field.side, ref));

      EnergyEstimator estimator (c);
      const int r = static_cast<int> (std::floor (estimator.r_max () * unit (gen)));
      for (int j = 0; j < r; ++j)
        {
          estimator.advance ();
        }
      track ("E(r)", estimator.estimated_average_energy (c.field.n),
             oracle::average_energy (c.field.n * c.e0, e_round, r, c.field.n));
    }

  bool pass = true;
  std::string detail;
  for (const auto& [name, err] : worst)
    {
      pass = pass && err <= equation_tolerance;
      detail += fmt::format ("{} {:.1e}; ", name, err);
    }
  return {pass, "max rel error: " + detail + fmt::format ("tol {:.0e}", equation_tolerance)};
}

Outcome
determinism ()
{
  const fs::path root = fs::temp_directory_path () / "leach_acceptance_determinism";
  fs::remove_all (root);

  ExperimentSpec spec;
  spec.base = preset_config ("center");
  spec.seeds = seed_range (base_seed, 4);
  spec.modes = {ElectionMode::classic, ElectionMode::adaptive};

  std::vector<fs::path> dirs;
  for (int jobs : {1, 1, 4})
    {
      spec.jobs = jobs;
      spec.out_dir = root / fmt::format ("run_{}", dirs.size ());
      cmd_run (spec);
      dirs.push_back (spec.out_dir);
    }
  for (int jobs : {1, 6})
    {
      spec.jobs = jobs;
      spec.out_dir = root / fmt::format ("compare_{}", jobs);
      cmd_compare (spec);
    }

  int files = 0;
  bool pass = same_directory_bytes (dirs[0], dirs[1], files)
              && same_directory_bytes (dirs[0], dirs[2], files);
  int compare_files = 0;
  pass = pass && same_directory_bytes (root / "compare_1", root / "compare_6", compare_files);

  std::string cli = "CLI not checked";
  if (!leach_sim_path.empty ())
    {
      int cli_files = 0;
      bool cli_ok = true;
      for (int jobs : {1, 5})
        {
          const std::string cmd = fmt::format (
            "\"{}\" run --bs-preset edge --seeds 3 --base-seed 9 --mode both --jobs {} --out \"{}\" > /dev/null",
            leach_sim_path, jobs, (root / fmt::format ("cli_{}", jobs)).string ());
          cli_ok = cli_ok && std::system (cmd.c_str ()) == 0;
        }
      cli_ok = cli_ok && same_directory_bytes (root / "cli_1", root / "cli_5", cli_files);
      pass = pass && cli_ok;
      cli = fmt::format ("CLI processes jobs 1 vs 5: {} ({} files)", cli_ok ? "identical" : "DIFFERENT",
                         cli_files);
    }
  return {pass, fmt::format ("run x2 + jobs 4: {} files; compare jobs 1 vs 6: {} files; {}", files,
                             compare_files, cli)};
}

Outcome
conservation ()
{
  long runs = 0, rounds = 0, violations = 0;
  double worst = 0.0;
  for (const BsPreset& preset : bs_presets)
    {
      for (ElectionMode mode : {ElectionMode::classic, ElectionMode::adaptive})
        {
          for (std::uint64_t seed : seeds ())
            {
              SimConfig c = preset_config (preset.name);
              c.mode = mode;
              c.seed = seed;
              Simulation sim (c);
              double previous = total_energy (sim.nodes ());
              std::vector<char> dead (static_cast<std::size_t> (c.field.n), 0);
              while (!sim.finished ())
                {
                  const RoundReport& report = sim.step ();
                  double debits = 0.0;
                  for (double d : report.debits)
                    {
                      debits += d;
                    }
                  const double current = report.record.total_residual_energy;
                  const double gap = std::abs ((previous - current) - debits);
                  worst = std::max (worst, gap);
                  violations += gap > conservation_tolerance;
                  violations += current > previous;
                  for (int id : report.cluster_heads)
                    {
                      violations += dead[id] != 0;
                    }
                  for (const Node& n : sim.nodes ())
                    {
                      if (dead[n.id])
                        {
                          violations += report.debits[n.id] != 0.0 || n.alive
                                        || n.cluster_of.has_value ();
                        }
                      dead[n.id] = !n.alive;
                    }
                  previous = current;
                  ++rounds;
                }
              ++runs;
            }
        }
    }
  return {violations == 0, fmt::format ("{} runs, {} rounds, {} violations, worst drop/debit gap {:.2e} J (tol {:.0e})",
                                        runs, rounds, violations, worst, conservation_tolerance)};
}

Outcome
election_statistics ()
{
  int epochs = 0, bad_mean = 0, bad_rotation = 0;
  double lo = 1e9, hi = 0.0;
  for (std::uint64_t seed : seeds ())
    {
      SimConfig c;
      c.seed = seed;
      const RunTrace trace = run_traced (c);
      const int epoch = epoch_length (c.popt);
      for (std::size_t start = 0; start + epoch <= trace.records.size (); start += epoch)
        {
          if (trace.records[start + epoch - 1].alive < c.field.n)
            {
              break;
            }
          std::vector<int> times (static_cast<std::size_t> (c.field.n), 0);
          double heads = 0.0;
          for (std::size_t r = start; r < start + epoch; ++r)
            {
              heads += trace.records[r].ch_count;
              for (int id : trace.cluster_heads[r])
                {
                  ++times[id];
                }
            }
          const double mean = heads / epoch;
          lo = std::min (lo, mean);
          hi = std::max (hi, mean);
          bad_mean += std::abs (mean - c.popt * c.field.n) > ch_count_tolerance * c.popt * c.field.n;
          bad_rotation += std::any_of (times.begin (), times.end (), [] (int t) { return t != 1; });
          ++epochs;
        }
    }
  return {epochs > 0 && bad_mean == 0 && bad_rotation == 0,
          fmt::format ("{} full-strength epochs over {} seeds; CH/round per epoch in [{:.3f}, {:.3f}] "
                       "(target 5 +/- 15%); {} epochs off target, {} with a node not elected exactly once",
                       epochs, seeds ().size (), lo, hi, bad_mean, bad_rotation)};
}

std::string
delta_line (const ComparisonReport& r, Metric m)
{
  const PairedDelta& d = r.delta (m);
  return fmt::format ("{} classic {:.1f} adaptive {:.1f} delta {:+.1f} (>0 in {:.0f}%)", metric_name (m),
                      r.stats (ElectionMode::classic, m).mean, r.stats (ElectionMode::adaptive, m).mean,
                      d.stats.mean, 100 * d.positive_fraction);
}

Outcome
inside_improvement (double e_elec = 5e-9)
{
  const ComparisonReport& r = report_for ("center", e_elec);
  const PairedDelta& stability = r.delta (Metric::first_death_round);
  const PairedDelta& instability = r.delta (Metric::instability_rounds);
  const bool all_shared = std::all_of (r.identical_topology.begin (), r.identical_topology.end (),
                                       [] (bool b) { return b; });
  const bool pass = all_shared && stability.stats.count == seed_count && stability.stats.mean > 0.0
                    && stability.positive_fraction >= stability_positive_share
                    && instability.stats.mean < 0.0;
  return {pass, delta_line (r, Metric::first_death_round) + "; "
                  + delta_line (r, Metric::instability_rounds)
                  + fmt::format ("; need mean stability delta > 0 in >= {:.0f}% of seeds and mean instability delta < 0",
                                 100 * stability_positive_share)};
}

double
relative_mean_delta (const ComparisonReport& r, Metric m)
{
  return r.delta (m).stats.mean / r.stats (ElectionMode::classic, m).mean;
}

Outcome
outside_equivalence (double e_elec = 5e-9)
{
  bool pass = true;
  std::string detail;
  for (std::string_view preset : {"corner", "edge", "far"})
    {
      const ComparisonReport& r = report_for (preset, e_elec);
      int beyond = 0, beyond_identical = 0;
      for (std::size_t i = 0; i < r.seeds.size (); ++i)
        {
          if (r.bs_beyond_crossover[i])
            {
              ++beyond;
              beyond_identical += r.identical_heads[i] && r.classic.runs[i] == r.adaptive.runs[i];
            }
        }
      const double lifetime = relative_mean_delta (r, Metric::last_death_round);
      const double stability = relative_mean_delta (r, Metric::first_death_round);
      const bool ok = beyond == beyond_identical
                      && (beyond == seed_count
                          || (std::abs (lifetime) <= parity_tolerance && std::abs (stability) <= parity_tolerance));
      pass = pass && ok;
      detail += fmt::format ("{}: {}/{} all-beyond seeds identical, lifetime {:+.1f}%, stability {:+.1f}%; ",
                             preset, beyond_identical, beyond, 100 * lifetime, 100 * stability);
    }

  // The presets almost never put every node beyond d_th, so also exercise
  // the identity branch with a distant base station.
  SimConfig far = preset_config ("far");
  far.field.bs = {300, 300};
  far.radio.e_elec = e_elec;
  const ComparisonReport r = compare (far, seeds (), {8, true});
  int identical = 0;
  for (std::size_t i = 0; i < r.seeds.size (); ++i)
    {
      identical += r.bs_beyond_crossover[i] && r.identical_heads[i] && r.classic.runs[i] == r.adaptive.runs[i];
    }
  pass = pass && identical == seed_count;
  detail += fmt::format ("BS (300,300): {}/{} seeds identical; tol +/-{:.0f}%", identical, seed_count,
                         100 * parity_tolerance);
  return {pass, detail};
}

double
paired_relative (const ComparisonReport& r, Metric m)
{
  double sum = 0.0;
  for (std::size_t i = 0; i < r.seeds.size (); ++i)
    {
      const double c = *metric_value (r.classic.runs[i], m);
      const double a = *metric_value (r.adaptive.runs[i], m);
      sum += (a - c) / c;
    }
  return sum / static_cast<double> (r.seeds.size ());
}

Outcome
throughput_parity (double e_elec = 5e-9)
{
  bool pass = true;
  std::string detail;
  for (const BsPreset& preset : bs_presets)
    {
      const ComparisonReport& r = report_for (preset.name, e_elec);
      const double to_ch = paired_relative (r, Metric::total_packets_to_ch);
      const double to_bs = paired_relative (r, Metric::total_packets_to_bs);
      const bool outside = preset.name != "center";
      pass = pass && std::abs (to_ch) <= parity_tolerance;
      if (outside)
        {
          pass = pass && std::abs (to_bs) <= parity_tolerance;
        }
      detail += fmt::format ("{}: to-CH {:+.1f}%, to-BS {:+.1f}%{}; ", preset.name, 100 * to_ch, 100 * to_bs,
                             outside ? "" : " (reported)");
    }
  return {pass, detail + fmt::format ("tol +/-{:.0f}%", 100 * parity_tolerance)};
}

Outcome
estimator_consistency ()
{
  const SimConfig c;
  EnergyEstimator estimator (c);
  const double e_total = c.field.n * c.e0;
  double worst = 0.0;
  int rounds = 0;
  while (estimator.e_total_remaining () > 0.0)
    {
      const long double closed = oracle::average_energy (e_total, estimator.e_round (),
                                                         estimator.current_round (), c.field.n);
      worst = std::max (worst, oracle::rel_error (estimator.estimated_average_energy (c.field.n), closed));
      estimator.advance ();
      ++rounds;
    }
  const bool clamped_at_r = estimator.current_round () == static_cast<int> (std::ceil (hand_r_max));

  std::ostringstream out, err;
  const int code = cmd_validate (c, out, err);
  std::smatch match;
  const std::string text = out.str ();
  double reported = 0.0;
  if (std::regex_search (text, match, std::regex (R"(\nR\s+=\s+([0-9.eE+-]+) rounds)")))
    {
      reported = std::stod (match[1]);
    }
  const double r_err = std::abs (reported - hand_r_max) / hand_r_max;
  const bool pass = worst <= equation_tolerance && clamped_at_r && code == 0 && r_err <= equation_tolerance;
  return {pass, fmt::format ("{} rounds to the clamp, worst iterative/closed-form rel error {:.1e}; validate "
                             "reports R = {} vs hand {:.10g} (rel {:.1e})",
                             rounds, worst, reported, hand_r_max, r_err)};
}

} // namespace

int
main (int argc, char** argv)
{
  if (argc > 1)
    {
      leach_sim_path = argv[1];
    }

  const std::vector<std::pair<std::string, std::function<Outcome ()>>> criteria = {
    {"1 equation oracles", equation_oracles},
    {"2 determinism", determinism},
    {"3 energy conservation", conservation},
    {"4 classic election statistics", election_statistics},
    {"5 BS inside: adaptive improves stability", [] { return inside_improvement (); }},
    {"6 BS outside: adaptive matches classic", [] { return outside_equivalence (); }},
    {"7 throughput parity", [] { return throughput_parity (); }},
    {"8 estimator consistency", estimator_consistency},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria)
    {
      const Outcome o = check ();
      failed += !o.pass;
      fmt::print ("[{}] {}: {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
      std::fflush (stdout);
    }

  // Sensitivity, not part of the verdict: the same comparisons with the
  // 50 nJ/bit electronics energy of the classic LEACH radio model.
  fmt::print ("\n[info] E_elec = 50 nJ/bit instead of the 5 nJ/bit default:\n");
  const std::pair<std::string, std::function<Outcome ()>> sensitivity[] = {
    {"5", [] { return inside_improvement (50e-9); }},
    {"6", [] { return outside_equivalence (50e-9); }},
    {"7", [] { return throughput_parity (50e-9); }},
  };
  for (const auto& [name, check] : sensitivity)
    {
      const Outcome o = check ();
      fmt::print ("[info] criterion {} would {}: {}\n", name, o.pass ? "pass" : "fail", o.detail);
    }

  fmt::print ("\n{} of {} criteria passed\n", criteria.size () - failed, criteria.size ());
  return failed == 0 ? 0 : 1;
}
