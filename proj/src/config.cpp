#include "leach/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace leach {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>&
known_keys ()
{
  static const std::map<std::string, std::set<std::string>> keys{
    {"field", {"side", "n", "bs_x", "bs_y"}},
    {"radio", {"E_elec", "eps_fs", "eps_mp", "E_DA", "d_o"}},
    {"protocol", {"E_o", "P_opt", "K", "mode", "n_divisor_tracks_deaths", "final_packet"}},
    {"simulation", {"max_rounds", "seed", "topology_seed"}},
  };
  return keys;
}

[[noreturn]] void
bad_value (const std::string& key, const std::string& value, const char* expected)
{
  throw ConfigError (fmt::format ("{}: expected {}, got '{}'", key, expected, value));
}

template <typename T>
T
parse_number (const std::string& key, const std::string& value, const char* expected)
{
  T out{};
  const char* first = value.data ();
  const char* last = first + value.size ();
  auto [ptr, ec] = std::from_chars (first, last, out);
  if (ec != std::errc () || ptr != last || value.empty ())
    {
      bad_value (key, value, expected);
    }
  return out;
}

bool
parse_bool (const std::string& key, const std::string& value)
{
  if (value == "true" || value == "1" || value == "yes")
    {
      return true;
    }
  if (value == "false" || value == "0" || value == "no")
    {
      return false;
    }
  bad_value (key, value, "true or false");
}

void
check_positive (std::vector<std::string>& out, const char* key, double v)
{
  if (!(v > 0.0) || !std::isfinite (v))
    {
      out.push_back (fmt::format ("{}: must be a finite value > 0 (got {})", key, v));
    }
}

} // namespace

std::string_view
to_string (ElectionMode mode)
{
  return mode == ElectionMode::classic ? "classic" : "adaptive";
}

ElectionMode
parse_mode (std::string_view text)
{
  if (text == "classic")
    {
      return ElectionMode::classic;
    }
  if (text == "adaptive")
    {
      return ElectionMode::adaptive;
    }
  throw ConfigError (fmt::format ("unknown election mode '{}' (classic or adaptive)", text));
}

std::vector<std::string>
SimConfig::violations () const
{
  std::vector<std::string> out;
  check_positive (out, "field.side", field.side);
  if (field.n < 1)
    {
      out.push_back (fmt::format ("field.n: must be >= 1 (got {})", field.n));
    }
  if (!std::isfinite (field.bs.x) || !std::isfinite (field.bs.y))
    {
      out.push_back ("field.bs_x/bs_y: base station coordinates must be finite");
    }
  check_positive (out, "radio.E_elec", radio.e_elec);
  check_positive (out, "radio.eps_fs", radio.eps_fs);
  check_positive (out, "radio.eps_mp", radio.eps_mp);
  check_positive (out, "radio.E_DA", radio.e_da);
  if (radio.threshold_override)
    {
      check_positive (out, "radio.d_o", *radio.threshold_override);
    }
  check_positive (out, "protocol.E_o", e0);
  if (!(popt > 0.0 && popt < 1.0))
    {
      out.push_back (fmt::format ("protocol.P_opt: must lie in (0, 1) (got {})", popt));
    }
  if (message_bits < 1)
    {
      out.push_back (fmt::format ("protocol.K: must be >= 1 bit (got {})", message_bits));
    }
  if (max_rounds < 1)
    {
      out.push_back (fmt::format ("simulation.max_rounds: must be >= 1 (got {})", max_rounds));
    }
  return out;
}

void
SimConfig::validate () const
{
  const auto problems = violations ();
  if (!problems.empty ())
    {
      std::string message = "invalid configuration:";
      for (const auto& p : problems)
        {
          message += "\n  " + p;
        }
      throw ConfigError (message);
    }
}

SimConfig
parse_config (std::string_view text)
{
  pt::ptree tree;
  try
    {
      std::istringstream in{std::string (text)};
      pt::read_ini (in, tree);
    }
  catch (const pt::ini_parser_error& e)
    {
      throw ConfigError (fmt::format ("line {}: {}", e.line (), e.message ()));
    }

  SimConfig config;
  for (const auto& [section, body] : tree)
    {
      const auto known = known_keys ().find (section);
      if (known == known_keys ().end () || !body.data ().empty ())
        {
          throw ConfigError (fmt::format ("unknown section or top-level key '{}'", section));
        }
      for (const auto& [name, node] : body)
        {
          const std::string key = section + "." + name;
          if (!known->second.contains (name))
            {
              throw ConfigError (fmt::format ("{}: unknown key", key));
            }
          const std::string value = node.get_value<std::string> ();
          const auto real = [&] { return parse_number<double> (key, value, "a number"); };

          if (key == "field.side") config.field.side = real ();
          else if (key == "field.n") config.field.n = parse_number<int> (key, value, "an integer");
          else if (key == "field.bs_x") config.field.bs.x = real ();
          else if (key == "field.bs_y") config.field.bs.y = real ();
          else if (key == "radio.E_elec") config.radio.e_elec = real ();
          else if (key == "radio.eps_fs") config.radio.eps_fs = real ();
          else if (key == "radio.eps_mp") config.radio.eps_mp = real ();
          else if (key == "radio.E_DA") config.radio.e_da = real ();
          else if (key == "radio.d_o") config.radio.threshold_override = real ();
          else if (key == "protocol.E_o") config.e0 = real ();
          else if (key == "protocol.P_opt") config.popt = real ();
          else if (key == "protocol.K")
            config.message_bits = parse_number<std::int64_t> (key, value, "an integer bit count");
          else if (key == "protocol.mode")
            {
              if (value != "classic" && value != "adaptive")
                {
                  bad_value (key, value, "classic or adaptive");
                }
              config.mode = parse_mode (value);
            }
          else if (key == "protocol.n_divisor_tracks_deaths")
            config.n_divisor_tracks_deaths = parse_bool (key, value);
          else if (key == "protocol.final_packet")
            {
              if (value == "count") config.death_policy = DeathPolicy::count_final_packet;
              else if (value == "drop") config.death_policy = DeathPolicy::drop_final_packet;
              else bad_value (key, value, "count or drop");
            }
          else if (key == "simulation.max_rounds")
            config.max_rounds = parse_number<int> (key, value, "an integer");
          else if (key == "simulation.seed")
            config.seed = parse_number<std::uint64_t> (key, value, "an unsigned integer");
          else if (key == "simulation.topology_seed")
            config.topology_seed = parse_number<std::uint64_t> (key, value, "an unsigned integer");
        }
    }
  return config;
}

SimConfig
load_config (const std::filesystem::path& path)
{
  std::ifstream in (path);
  if (!in)
    {
      throw ConfigError (fmt::format ("cannot read config file '{}'", path.string ()));
    }
  std::ostringstream buffer;
  buffer << in.rdbuf ();
  return parse_config (buffer.str ());
}

std::string
render_config (const SimConfig& c)
{
  std::string out;
  out += fmt::format ("[field]\nside = {}\nn = {}\nbs_x = {}\nbs_y = {}\n\n",
                      c.field.side, c.field.n, c.field.bs.x, c.field.bs.y);
  out += fmt::format ("[radio]\nE_elec = {}\neps_fs = {}\neps_mp = {}\nE_DA = {}\n",
                      c.radio.e_elec, c.radio.eps_fs, c.radio.eps_mp, c.radio.e_da);
  if (c.radio.threshold_override)
    {
      out += fmt::format ("d_o = {}\n", *c.radio.threshold_override);
    }
  out += fmt::format ("\n[protocol]\nE_o = {}\nP_opt = {}\nK = {}\nmode = {}\n"
                      "n_divisor_tracks_deaths = {}\nfinal_packet = {}\n\n",
                      c.e0, c.popt, c.message_bits, to_string (c.mode),
                      c.n_divisor_tracks_deaths,
                      c.death_policy == DeathPolicy::count_final_packet ? "count" : "drop");
  out += fmt::format ("[simulation]\nmax_rounds = {}\nseed = {}\n", c.max_rounds, c.seed);
  if (c.topology_seed)
    {
      out += fmt::format ("topology_seed = {}\n", *c.topology_seed);
    }
  return out;
}

std::string
config_fingerprint (const SimConfig& config)
{
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : render_config (config))
    {
      hash ^= ch;
      hash *= 0x100000001b3ULL;
    }
  return fmt::format ("{:016x}", hash);
}

DerivedQuantities
derive (const SimConfig& config)
{
  DerivedQuantities q{};
  q.d_th = distance_threshold (config.radio);
  q.crossover = effective_threshold (config.radio);
  q.k_clusters = config.field.n * config.popt;
  q.d_to_bs = 0.765 * config.field.side / 2.0;
  q.d_to_ch = config.field.side / std::sqrt (2.0 * std::numbers::pi * q.k_clusters);
  q.e_total = config.field.n * config.e0;
  q.e_round = expected_round_energy (config);
  q.r_max = q.e_total / q.e_round;
  q.epoch = epoch_length (config.popt);
  return q;
}

} // namespace leach
