#pragma once

// Index-parallel evaluation whose results do not depend on the width.

#include <cstddef>
#include <functional>

namespace wright {

// Width from the WRIGHT_THREADS environment variable when it holds a
// positive integer, else the hardware concurrency (at least 1).
unsigned parallel_width();

// Calls body(i) for every i in [0, n) on up to parallel_width() threads.
// body must only write to storage owned by index i. The first exception
// (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wright
