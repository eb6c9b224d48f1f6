#ifndef LEACH_BATCH_HPP
#define LEACH_BATCH_HPP

#include "leach/config.hpp"
#include "leach/engine.hpp"

#include <span>
#include <vector>

namespace leach {

/// Runs every config on up to `jobs` worker threads. Results come back in
/// input order; runs share no mutable state, so the output does not depend
/// on `jobs`.
std::vector<RunTrace> run_batch (std::span<const SimConfig> configs, int jobs);

} // namespace leach

#endif
