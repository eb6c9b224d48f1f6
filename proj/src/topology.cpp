#include "leach/topology.hpp"
#include "leach/random.hpp"

#include <cmath>
#include <stdexcept>

namespace leach {

Rng::Rng (std::uint64_t seed, std::uint32_t stream)
{
  std::seed_seq seq{static_cast<std::uint32_t> (seed),
                    static_cast<std::uint32_t> (seed >> 32), stream};
  m_engine.seed (seq);
}

double
Rng::uniform01 ()
{
  return static_cast<double> (m_engine () >> 11) * 0x1.0p-53;
}

void
FieldSpec::validate () const
{
  if (!(side > 0.0) || !std::isfinite (side))
    {
      throw std::invalid_argument ("field.side must be a finite value > 0");
    }
  if (n < 1)
    {
      throw std::invalid_argument ("field.n must be >= 1");
    }
  if (!std::isfinite (bs.x) || !std::isfinite (bs.y))
    {
      throw std::invalid_argument ("base station coordinates must be finite");
    }
}

double
distance (Point a, Point b)
{
  return std::hypot (a.x - b.x, a.y - b.y);
}

std::vector<Node>
deploy (const FieldSpec& field, double e0, std::uint64_t seed)
{
  field.validate ();
  Rng rng (seed, static_cast<std::uint32_t> (Stream::topology));

  std::vector<Node> nodes;
  nodes.reserve (static_cast<std::size_t> (field.n));
  for (int i = 0; i < field.n; ++i)
    {
      Node node;
      node.id = i;
      node.pos.x = rng.uniform01 () * field.side;
      node.pos.y = rng.uniform01 () * field.side;
      node.energy = e0;
      node.alive = e0 > 0.0;
      nodes.push_back (node);
    }
  return nodes;
}

std::optional<int>
nearest_cluster_head (const Node& node, std::span<const Node> chs)
{
  std::optional<int> best;
  double best_distance = 0.0;
  for (const Node& ch : chs)
    {
      const double d = distance (node.pos, ch.pos);
      if (!best || d < best_distance || (d == best_distance && ch.id < *best))
        {
          best = ch.id;
          best_distance = d;
        }
    }
  return best;
}

} // namespace leach
