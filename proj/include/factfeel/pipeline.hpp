#pragma once

#include <string>

#include "factfeel/config.hpp"

namespace factfeel {

// ingest -> learn (Iter 0) -> bootstrap -> eval -> analyze, with a run.json
// manifest (resolved config, config hash, per-stage timings). On failure the
// partial artifacts stay on disk next to a FAILED marker.
// Returns the process exit status (0 on success).
int run_pipeline(const RunConfig& config);

}  // namespace factfeel
