#pragma once

namespace tempoflow {

// requested > 0 wins; otherwise TEMPOFLOW_JOBS, otherwise the OpenMP default.
int resolve_jobs(int requested);

}  // namespace tempoflow
