#ifndef LEACH_ENGINE_HPP
#define LEACH_ENGINE_HPP

#include "leach/config.hpp"
#include "leach/election.hpp"
#include "leach/random.hpp"
#include "leach/topology.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace leach {

/// Observables at the end of one round. Packet counters are cumulative
/// since round 0; `estimated_avg_energy` is the value the election used.
struct RoundRecord
{
  int round = 0;
  int alive = 0;
  double total_residual_energy = 0.0;
  int ch_count = 0;
  std::int64_t packets_to_bs = 0;
  std::int64_t packets_to_ch = 0;
  double estimated_avg_energy = 0.0;

  friend bool operator== (const RoundRecord&, const RoundRecord&) = default;
};

struct ClusterAssignment
{
  /// Cluster head of each normal node, indexed by node id. Empty for heads,
  /// dead nodes and direct senders.
  std::vector<std::optional<int>> head_of;
  /// Cluster size including the head, indexed by node id (0 for non-heads).
  std::vector<int> members;
  std::vector<int> heads;
  /// No head was elected: every alive node sends straight to the BS.
  bool direct_to_bs = false;
};

/// Joins every alive normal node to its nearest head and records it in
/// Node::cluster_of.
ClusterAssignment form_clusters (std::span<Node> nodes, std::span<const int> chs);

struct RoundTraffic
{
  /// Energy actually removed from each node this round, by id.
  std::vector<double> debits;
  std::int64_t packets_to_bs = 0;
  std::int64_t packets_to_ch = 0;
  std::vector<int> deaths;
};

/// Data-transfer phase: normal nodes send one message to their head (or to
/// the BS in a headless round), heads aggregate and forward one message.
/// Debits are applied after every transmission of the round is accounted;
/// nodes left with residual <= 0 are clamped to zero and marked dead.
RoundTraffic steady_state (std::span<Node> nodes, const ClusterAssignment& assignment,
                           const RadioParams& radio, Point bs, std::int64_t message_bits,
                           DeathPolicy policy = DeathPolicy::count_final_packet);

struct RoundReport
{
  RoundRecord record;
  std::vector<int> cluster_heads;
  std::vector<double> debits;
  bool direct_to_bs = false;
};

/// One run, stepped a round at a time. Each step is elect, form clusters,
/// steady state, in that order.
class Simulation
{
public:
  explicit Simulation (const SimConfig& config);

  /// True once every node is dead or max_rounds rounds have run.
  bool finished () const;
  const RoundReport& step ();

  const SimConfig& config () const { return m_config; }
  std::span<const Node> nodes () const { return m_nodes; }
  const EnergyEstimator& estimator () const { return m_estimator; }
  int round () const { return m_round; }
  int alive () const { return m_alive; }

private:
  SimConfig m_config;
  std::vector<Node> m_nodes;
  EnergyEstimator m_estimator;
  Rng m_rng;
  int m_round = 0;
  int m_alive = 0;
  std::int64_t m_packets_to_bs = 0;
  std::int64_t m_packets_to_ch = 0;
  RoundReport m_last;
};

struct RunTrace
{
  std::vector<RoundRecord> records;
  /// Elected heads per round, ascending ids.
  std::vector<std::vector<int>> cluster_heads;
  std::vector<Point> positions;
};

std::vector<RoundRecord> run (const SimConfig& config);
RunTrace run_traced (const SimConfig& config);

double total_energy (std::span<const Node> nodes);

} // namespace leach

#endif
