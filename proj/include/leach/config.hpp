#ifndef LEACH_CONFIG_HPP
#define LEACH_CONFIG_HPP

#include "leach/election.hpp"
#include "leach/radio.hpp"
#include "leach/topology.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leach {

/// What happens to a node whose residual energy cannot cover its
/// transmission this round.
enum class DeathPolicy
{
  /// Send anyway, count the packet, clamp the residual to zero.
  count_final_packet,
  /// Do not send; the residual is written off and the packet is lost.
  drop_final_packet,
};

/// Full parameterization of one simulation run. Defaults reproduce the
/// reference parameter table (with eps_fs / eps_mp in their physical roles).
struct SimConfig
{
  FieldSpec field;
  RadioParams radio;
  double e0 = 0.5;
  double popt = 0.05;
  std::int64_t message_bits = 4000;
  int max_rounds = 20000;
  ElectionMode mode = ElectionMode::classic;
  std::uint64_t seed = 1;
  /// Seed for node placement; defaults to `seed` when unset.
  std::optional<std::uint64_t> topology_seed;
  /// Divide the estimated total energy by the alive count instead of N.
  bool n_divisor_tracks_deaths = false;
  DeathPolicy death_policy = DeathPolicy::count_final_packet;

  std::uint64_t placement_seed () const { return topology_seed.value_or (seed); }

  /// Every violated invariant as "section.key: message"; empty when valid.
  std::vector<std::string> violations () const;

  /// Throws ConfigError listing all violations.
  void validate () const;
};

class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

std::string_view to_string (ElectionMode mode);
ElectionMode parse_mode (std::string_view text);

/// Parses the sectioned key = value format:
///
///   [field]      side, n, bs_x, bs_y
///   [radio]      E_elec, eps_fs, eps_mp, E_DA, d_o (optional crossover override)
///   [protocol]   E_o, P_opt, K, mode, n_divisor_tracks_deaths, final_packet
///   [simulation] max_rounds, seed
///
/// Missing keys keep their defaults. Unknown sections or keys, and
/// malformed values, throw ConfigError naming the offending key. The result
/// is not validated; call validate() or violations().
SimConfig parse_config (std::string_view text);
SimConfig load_config (const std::filesystem::path& path);

/// Canonical key = value rendering; parse_config(render_config(c)) == c.
std::string render_config (const SimConfig& config);

/// 64-bit FNV-1a of render_config(), printed as 16 hex digits.
std::string config_fingerprint (const SimConfig& config);

/// Quantities the adaptive estimator derives from a configuration.
struct DerivedQuantities
{
  double d_th;           ///< sqrt(eps_fs / eps_mp)
  double crossover;      ///< threshold in force (d_o override or d_th)
  double k_clusters;     ///< N * P_opt
  double d_to_bs;        ///< expected head-to-BS distance
  double d_to_ch;        ///< expected member-to-head distance
  double e_total;        ///< N * E_o
  double e_round;        ///< expected energy per round
  double r_max;          ///< E_total / E_round
  int epoch;             ///< round(1 / P_opt)
};

DerivedQuantities derive (const SimConfig& config);

} // namespace leach

#endif
