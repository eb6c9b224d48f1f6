#include "leach/engine.hpp"
#include "leach/radio.hpp"

#include <algorithm>

namespace leach {

namespace {

const SimConfig&
checked (const SimConfig& config)
{
  config.validate ();
  return config;
}

} // namespace

ClusterAssignment
form_clusters (std::span<Node> nodes, std::span<const int> chs)
{
  ClusterAssignment out;
  out.head_of.assign (nodes.size (), std::nullopt);
  out.members.assign (nodes.size (), 0);
  out.heads.assign (chs.begin (), chs.end ());
  out.direct_to_bs = chs.empty ();

  std::vector<Node> heads;
  heads.reserve (chs.size ());
  for (int id : chs)
    {
      heads.push_back (nodes[id]);
      out.members[id] = 1;
    }

  for (Node& node : nodes)
    {
      node.cluster_of.reset ();
      if (!node.alive || node.role == Role::cluster_head || out.direct_to_bs)
        {
          continue;
        }
      const auto head = nearest_cluster_head (node, heads);
      node.cluster_of = head;
      out.head_of[node.id] = head;
      ++out.members[*head];
    }
  return out;
}

RoundTraffic
steady_state (std::span<Node> nodes, const ClusterAssignment& assignment,
              const RadioParams& radio, Point bs, std::int64_t message_bits,
              DeathPolicy policy)
{
  RoundTraffic traffic;
  traffic.debits.assign (nodes.size (), 0.0);

  // Returns whether the transmission went out.
  auto charge = [&] (const Node& node, double cost) {
    if (policy == DeathPolicy::drop_final_packet && cost > node.energy)
      {
        traffic.debits[node.id] = node.energy;
        return false;
      }
    traffic.debits[node.id] = std::min (cost, node.energy);
    return true;
  };

  for (const Node& node : nodes)
    {
      if (!node.alive || node.role == Role::cluster_head)
        {
          continue;
        }
      if (assignment.direct_to_bs)
        {
          if (charge (node, tx_energy (message_bits, distance (node.pos, bs), radio)))
            {
              ++traffic.packets_to_bs;
            }
          continue;
        }
      const Node& head = nodes[*assignment.head_of[node.id]];
      const double cost = non_ch_round_energy (message_bits, distance (node.pos, head.pos), radio);
      if (charge (node, cost))
        {
          ++traffic.packets_to_ch;
        }
    }

  for (int id : assignment.heads)
    {
      const Node& head = nodes[id];
      const double cost = ch_round_energy (message_bits, assignment.members[id],
                                           distance (head.pos, bs), radio);
      if (charge (head, cost))
        {
          ++traffic.packets_to_bs;
        }
    }

  for (Node& node : nodes)
    {
      if (!node.alive)
        {
          continue;
        }
      node.energy -= traffic.debits[node.id];
      if (node.energy <= 0.0)
        {
          node.energy = 0.0;
          node.alive = false;
          node.role = Role::normal;
          traffic.deaths.push_back (node.id);
        }
    }
  return traffic;
}

double
total_energy (std::span<const Node> nodes)
{
  double sum = 0.0;
  for (const Node& node : nodes)
    {
      sum += node.energy;
    }
  return sum;
}

Simulation::Simulation (const SimConfig& config)
  : m_config (checked (config)),
    m_nodes (deploy (config.field, config.e0, config.placement_seed ())),
    m_estimator (config),
    m_rng (config.seed, static_cast<std::uint32_t> (Stream::election))
{
  m_alive = static_cast<int> (std::count_if (m_nodes.begin (), m_nodes.end (),
                                             [] (const Node& n) { return n.alive; }));
}

bool
Simulation::finished () const
{
  return m_alive == 0 || m_round >= m_config.max_rounds;
}

const RoundReport&
Simulation::step ()
{
  const int divisor = m_config.n_divisor_tracks_deaths ? m_alive : m_config.field.n;

  ElectionContext ctx;
  ctx.round = m_round;
  ctx.mode = m_config.mode;
  ctx.average_energy = m_estimator.estimated_average_energy (divisor);
  ctx.radio = m_config.radio;
  ctx.bs = m_config.field.bs;
  ctx.popt = m_config.popt;

  const std::vector<int> heads = elect (m_nodes, ctx, m_rng);
  const ClusterAssignment assignment = form_clusters (m_nodes, heads);
  RoundTraffic traffic = steady_state (m_nodes, assignment, m_config.radio, m_config.field.bs,
                                       m_config.message_bits, m_config.death_policy);

  m_alive -= static_cast<int> (traffic.deaths.size ());
  m_packets_to_bs += traffic.packets_to_bs;
  m_packets_to_ch += traffic.packets_to_ch;

  m_last.record = RoundRecord{
    .round = m_round,
    .alive = m_alive,
    .total_residual_energy = total_energy (m_nodes),
    .ch_count = static_cast<int> (heads.size ()),
    .packets_to_bs = m_packets_to_bs,
    .packets_to_ch = m_packets_to_ch,
    .estimated_avg_energy = ctx.average_energy,
  };
  m_last.cluster_heads = heads;
  m_last.debits = std::move (traffic.debits);
  m_last.direct_to_bs = assignment.direct_to_bs;

  m_estimator.advance ();
  ++m_round;
  return m_last;
}

std::vector<RoundRecord>
run (const SimConfig& config)
{
  return run_traced (config).records;
}

RunTrace
run_traced (const SimConfig& config)
{
  Simulation sim (config);
  RunTrace trace;
  for (const Node& node : sim.nodes ())
    {
      trace.positions.push_back (node.pos);
    }
  while (!sim.finished ())
    {
      const RoundReport& report = sim.step ();
      trace.records.push_back (report.record);
      trace.cluster_heads.push_back (report.cluster_heads);
    }
  return trace;
}

} // namespace leach
