#include "leach/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace leach {

std::vector<RunTrace>
run_batch (std::span<const SimConfig> configs, int jobs)
{
  std::vector<RunTrace> results (configs.size ());
  const std::size_t workers = std::clamp<std::size_t> (
    static_cast<std::size_t> (std::max (jobs, 1)), 1, std::max<std::size_t> (configs.size (), 1));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = next++; i < configs.size (); i = next++)
      {
        try
          {
            results[i] = run_traced (configs[i]);
          }
        catch (...)
          {
            std::lock_guard lock (failure_mutex);
            if (!failure)
              {
                failure = std::current_exception ();
              }
          }
      }
  };

  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w)
      {
        pool.emplace_back (work);
      }
    work ();
  }

  if (failure)
    {
      std::rethrow_exception (failure);
    }
  return results;
}

} // namespace leach
