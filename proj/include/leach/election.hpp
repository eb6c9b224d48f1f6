#ifndef LEACH_ELECTION_HPP
#define LEACH_ELECTION_HPP

#include "leach/radio.hpp"
#include "leach/random.hpp"
#include "leach/topology.hpp"

#include <span>
#include <vector>

namespace leach {

struct SimConfig;

enum class ElectionMode
{
  /// Plain LEACH threshold.
  classic,
  /// Nodes within the crossover distance of the base station additionally
  /// require residual energy above the estimated network average.
  adaptive,
};

/// Rounds per epoch, round(1 / popt).
int epoch_length (double popt);

/// LEACH election threshold T(s) for round `round`. Zero for ineligible
/// nodes; reaches 1 in the last round of an epoch when 1/popt is integral.
double leach_threshold (double popt, int round, bool eligible);

/// Expected energy dissipated network-wide in one round:
///   L (2 N E_elec + N E_DA + k eps_mp d_toBS^4 + N eps_fs d_toCH^2)
/// with k = N popt, d_toBS = 0.765 side / 2 and d_toCH = side / sqrt(2 pi k).
double expected_round_energy (const SimConfig& config);

/// A-priori linear schedule of the network's remaining energy, which every
/// node can evaluate without hearing from the others. The remaining total
/// is decremented by the expected round energy once per round and clamped
/// at zero.
class EnergyEstimator
{
public:
  EnergyEstimator (double e_total_initial, double e_round);
  explicit EnergyEstimator (const SimConfig& config);

  double e_total_initial () const { return m_initial; }
  double e_total_remaining () const { return m_remaining; }
  double e_round () const { return m_round_energy; }
  double r_max () const { return m_initial / m_round_energy; }
  int current_round () const { return m_round; }

  /// Remaining total divided by `n`.
  double estimated_average_energy (int n) const;

  /// Moves to the next round.
  void advance ();

private:
  double m_initial;
  double m_round_energy;
  double m_remaining;
  // Neumaier compensation for the running decrement.
  double m_compensation = 0.0;
  int m_round = 0;
};

/// Inputs to one election besides the node list.
struct ElectionContext
{
  int round = 0;
  ElectionMode mode = ElectionMode::classic;
  /// Estimated average residual energy for this round.
  double average_energy = 0.0;
  RadioParams radio;
  Point bs;
  double popt = 0.05;
};

/// Runs one cluster-head election over `nodes` (ascending id order). Every
/// alive eligible node draws exactly one uniform from `rng`, whatever the
/// mode, so classic and adaptive runs consume identical streams. Updates
/// role and g_counter in place and returns elected ids in ascending order.
///
/// g_counter is cleared for every node in the first round of each epoch, so
/// the eligible set G restarts in phase with T(s); within an epoch a head
/// gets epoch - 1 and ineligible nodes count down by one per round.
std::vector<int> elect (std::span<Node> nodes, const ElectionContext& ctx, Rng& rng);

} // namespace leach

#endif
