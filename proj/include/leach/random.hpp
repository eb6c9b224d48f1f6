#ifndef LEACH_RANDOM_HPP
#define LEACH_RANDOM_HPP

#include <cstdint>
#include <random>

namespace leach {

/// Seeded stream of doubles in [0, 1). Distinct `stream` values give
/// independent sequences for the same seed. The mapping from engine output
/// to double is fixed here rather than left to std::uniform_real_distribution
/// so traces stay identical across standard libraries.
class Rng
{
public:
  Rng (std::uint64_t seed, std::uint32_t stream);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01 ();

private:
  std::mt19937_64 m_engine;
};

/// Named streams carved out of one run seed.
enum class Stream : std::uint32_t
{
  topology = 0,
  election = 1,
};

} // namespace leach

#endif
