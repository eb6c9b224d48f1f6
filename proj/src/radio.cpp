#include "leach/radio.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace leach {

namespace {

void
require_nonnegative (double value, const char* what)
{
  if (!(value >= 0.0))
    {
      throw std::invalid_argument (std::string (what) + " must be >= 0, got "
                                   + std::to_string (value));
    }
}

} // namespace

void
RadioParams::validate () const
{
  auto positive = [] (double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite (v))
      {
        throw std::invalid_argument (std::string ("radio.") + name
                                     + " must be a finite value > 0");
      }
  };
  positive (e_elec, "E_elec");
  positive (eps_fs, "eps_fs");
  positive (eps_mp, "eps_mp");
  positive (e_da, "E_DA");
  if (threshold_override)
    {
      positive (*threshold_override, "d_o");
    }
}

double
distance_threshold (const RadioParams& params)
{
  return std::sqrt (params.eps_fs / params.eps_mp);
}

double
effective_threshold (const RadioParams& params)
{
  return params.threshold_override ? *params.threshold_override
                                   : distance_threshold (params);
}

double
tx_energy (std::int64_t bits, double distance, const RadioParams& params)
{
  require_nonnegative (static_cast<double> (bits), "bits");
  require_nonnegative (distance, "distance");

  const double k = static_cast<double> (bits);
  if (distance < effective_threshold (params))
    {
      return k * params.e_elec + k * params.eps_fs * distance * distance;
    }
  const double d2 = distance * distance;
  return k * params.e_elec + k * params.eps_mp * d2 * d2;
}

double
rx_energy (std::int64_t bits, const RadioParams& params)
{
  require_nonnegative (static_cast<double> (bits), "bits");
  return static_cast<double> (bits) * params.e_elec;
}

double
ch_round_energy (std::int64_t bits, std::int64_t members, double d_to_bs,
                 const RadioParams& params)
{
  if (members < 1)
    {
      throw std::invalid_argument ("cluster must contain at least its head");
    }
  require_nonnegative (static_cast<double> (bits), "bits");

  const double k = static_cast<double> (bits);
  const double receive = k * params.e_elec * static_cast<double> (members - 1);
  const double aggregate = k * params.e_da * static_cast<double> (members);
  return receive + aggregate + tx_energy (bits, d_to_bs, params);
}

double
non_ch_round_energy (std::int64_t bits, double d_to_ch, const RadioParams& params)
{
  return tx_energy (bits, d_to_ch, params);
}

} // namespace leach
