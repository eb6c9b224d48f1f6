#ifndef LEACH_TOPOLOGY_HPP
#define LEACH_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace leach {

struct Point
{
  double x = 0.0;
  double y = 0.0;

  friend bool operator== (const Point&, const Point&) = default;
};

/// Square deployment field [0, side]^2 with N nodes and one base station.
/// The base station may sit anywhere, including outside the field.
struct FieldSpec
{
  double side = 100.0;
  Point bs{50.0, 50.0};
  int n = 100;

  void validate () const;
};

enum class Role
{
  normal,
  cluster_head,
};

struct Node
{
  int id = 0;
  Point pos;
  double energy = 0.0;
  /// Rounds left before the node may stand for election again; zero means
  /// the node is in the eligible set G.
  int g_counter = 0;
  bool alive = true;
  Role role = Role::normal;
  std::optional<int> cluster_of;

  bool eligible () const { return alive && g_counter == 0; }
};

double distance (Point a, Point b);

/// Uniform i.i.d. placement over the field, ids 0..n-1, each node at `e0`.
/// A pure function of (field, e0, seed).
std::vector<Node> deploy (const FieldSpec& field, double e0, std::uint64_t seed);

/// Id of the head in `chs` closest to `node`; ties go to the lowest id.
/// Returns nullopt when there are no heads this round.
std::optional<int> nearest_cluster_head (const Node& node, std::span<const Node> chs);

} // namespace leach

#endif
