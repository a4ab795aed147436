#pragma once

#include <functional>

namespace ck {

// Worker count: hardware concurrency, capped by CENTER_KIT_THREADS when set.
int worker_count();

// Runs fn(i) for i in [0, n). Callers write results into slot i, so the outcome does not
// depend on scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace ck
