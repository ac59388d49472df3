#pragma once

#include <cstddef>
#include <functional>

namespace polyprod {

/// Calls f(i) for every i in [0, n), spread over up to `threads` workers
/// (0 = hardware concurrency). Callers write results into slot i, so the
/// outcome does not depend on scheduling. The first exception by index is
/// rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f, unsigned threads = 0);

}  // namespace polyprod
