#pragma once

#include <functional>

namespace sifca::detail {

// Runs body(i) for i in [0, n) on `threads` workers (0 = hardware
// concurrency). Each index runs exactly once; the first exception is rethrown.
void parallel_for(int n, unsigned threads, const std::function<void(int)>& body);

}  // namespace sifca::detail
