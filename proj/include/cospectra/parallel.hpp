#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace cospectra {

/// Worker count resolution: the COSPECTRA_WORKERS environment variable
/// overrides everything, then an explicit request, then hardware concurrency.
int resolve_worker_count(std::optional<int> requested = std::nullopt);

/// Run fn(0..count-1) across up to `workers` threads. The first exception
/// thrown by any worker is re-thrown on the calling thread.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace cospectra
