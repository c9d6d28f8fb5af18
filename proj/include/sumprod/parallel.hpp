#pragma once

#include <cstddef>
#include <functional>

namespace sumprod {

// Worker count used when a caller passes jobs <= 0. Defaults to 1; the CLI
// sets it from --jobs.
int default_jobs() noexcept;
void set_default_jobs(int jobs) noexcept;

// Splits [0, n) into `chunks` contiguous ranges and runs body(chunk, begin,
// end) for each, on up to `jobs` threads. Chunk boundaries depend only on n
// and chunks, so callers that merge per-chunk results in chunk order get
// output independent of the worker count.
void parallel_chunks(std::size_t n, std::size_t chunks, int jobs,
                     const std::function<void(std::size_t, std::size_t,
                                              std::size_t)>& body);

// Runs body(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& body);

int resolve_jobs(int jobs) noexcept;

}  // namespace sumprod
