#include "leach/election.hpp"
#include "leach/config.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leach {

int
epoch_length (double popt)
{
  if (!(popt > 0.0 && popt < 1.0))
    {
      throw std::invalid_argument ("P_opt must lie in (0, 1)");
    }
  return static_cast<int> (std::lround (1.0 / popt));
}

double
leach_threshold (double popt, int round, bool eligible)
{
  const int epoch = epoch_length (popt);
  if (round < 0)
    {
      throw std::invalid_argument ("round must be >= 0");
    }
  if (!eligible)
    {
      return 0.0;
    }

  const int phase = round % epoch;
  const double denominator = 1.0 - popt * static_cast<double> (phase);
  assert (denominator > 0.0);

  // popt / (1 - popt (1/popt - 1)) is exactly 1 but rounds to 1 - 1ulp.
  if (phase == epoch - 1 && std::abs (popt * epoch - 1.0) < 1e-12)
    {
      return 1.0;
    }
  return popt / denominator;
}

double
expected_round_energy (const SimConfig& config)
{
  const double n = config.field.n;
  const double bits = static_cast<double> (config.message_bits);
  const double k_clusters = n * config.popt;
  const double d_to_bs = 0.765 * config.field.side / 2.0;
  const double d_to_ch = config.field.side / std::sqrt (2.0 * std::numbers::pi * k_clusters);
  const RadioParams& radio = config.radio;

  return bits * (2.0 * n * radio.e_elec + n * radio.e_da
                 + k_clusters * radio.eps_mp * std::pow (d_to_bs, 4)
                 + n * radio.eps_fs * d_to_ch * d_to_ch);
}

EnergyEstimator::EnergyEstimator (double e_total_initial, double e_round)
  : m_initial (e_total_initial),
    m_round_energy (e_round),
    m_remaining (e_total_initial)
{
  if (!(e_total_initial > 0.0) || !(e_round > 0.0))
    {
      throw std::invalid_argument ("estimator needs positive total and round energy");
    }
}

EnergyEstimator::EnergyEstimator (const SimConfig& config)
  : EnergyEstimator (config.field.n * config.e0, expected_round_energy (config))
{
}

double
EnergyEstimator::estimated_average_energy (int n) const
{
  if (n < 1)
    {
      return 0.0;
    }
  return m_remaining / static_cast<double> (n);
}

void
EnergyEstimator::advance ()
{
  ++m_round;
  if (m_remaining == 0.0)
    {
      return;
    }

  const double term = -m_round_energy;
  const double sum = m_remaining + term;
  if (std::abs (m_remaining) >= std::abs (term))
    {
      m_compensation += (m_remaining - sum) + term;
    }
  else
    {
      m_compensation += (term - sum) + m_remaining;
    }

  const double corrected = sum + m_compensation;
  if (corrected <= 0.0)
    {
      m_remaining = 0.0;
      m_compensation = 0.0;
      return;
    }
  // Keep the compensated value as the visible running total and carry only
  // the part the addition could not represent.
  m_compensation = (sum - corrected) + m_compensation;
  m_remaining = corrected;
}

std::vector<int>
elect (std::span<Node> nodes, const ElectionContext& ctx, Rng& rng)
{
  const int epoch = epoch_length (ctx.popt);
  const double threshold = leach_threshold (ctx.popt, ctx.round, true);
  const double crossover = effective_threshold (ctx.radio);

  const bool epoch_start = ctx.round % epoch == 0;

  std::vector<int> elected;
  for (Node& node : nodes)
    {
      node.role = Role::normal;
      if (!node.alive)
        {
          continue;
        }
      if (epoch_start)
        {
          node.g_counter = 0;
        }
      if (node.g_counter > 0)
        {
          --node.g_counter;
          continue;
        }

      const double u = rng.uniform01 ();
      bool wins = u < threshold;
      if (ctx.mode == ElectionMode::adaptive
          && distance (node.pos, ctx.bs) <= crossover)
        {
          wins = wins && ctx.average_energy > 0.0 && node.energy > ctx.average_energy;
        }

      if (wins)
        {
          node.role = Role::cluster_head;
          node.g_counter = epoch - 1;
          elected.push_back (node.id);
        }
    }
  return elected;
}

} // namespace leach
