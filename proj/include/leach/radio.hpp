#ifndef LEACH_RADIO_HPP
#define LEACH_RADIO_HPP

#include <cstdint>
#include <optional>

namespace leach {

/// Energy constants of the first-order radio model. All values in joules,
/// meters and bits.
struct RadioParams
{
  double e_elec = 5e-9;       ///< TX/RX electronics, J/bit
  double eps_fs = 10e-12;     ///< free-space amplifier, J/bit/m^2
  double eps_mp = 0.0013e-12; ///< multipath amplifier, J/bit/m^4
  double e_da = 5e-9;         ///< aggregation, J/bit/signal

  /// Replaces sqrt(eps_fs / eps_mp) as the free-space/multipath crossover
  /// (and as the base-station inside/outside test) when set.
  std::optional<double> threshold_override;

  /// Throws std::invalid_argument if any constant is not strictly positive.
  void validate () const;
};

/// sqrt(eps_fs / eps_mp), the crossover distance between the d^2 and d^4
/// amplifier models.
double distance_threshold (const RadioParams& params);

/// The crossover actually used by the simulator: the override if present,
/// otherwise distance_threshold().
double effective_threshold (const RadioParams& params);

/// Piecewise transmit cost. Distances strictly below the crossover use the
/// free-space amplifier, everything else the multipath amplifier.
double tx_energy (std::int64_t bits, double distance, const RadioParams& params);

double rx_energy (std::int64_t bits, const RadioParams& params);

/// Round cost of a cluster head whose cluster has `members` nodes counting
/// itself: members - 1 receptions, aggregation of every signal, and one
/// aggregated transmission to the base station.
double ch_round_energy (std::int64_t bits, std::int64_t members, double d_to_bs,
                        const RadioParams& params);

/// Round cost of a normal node: one transmission to its cluster head.
double non_ch_round_energy (std::int64_t bits, double d_to_ch, const RadioParams& params);

} // namespace leach

#endif
