#pragma once

namespace kummerwit {

// Worker count for the OpenMP kernels: `requested` when positive, else the
// KUMMERWIT_WORKERS environment variable, else the OpenMP default.
int resolve_workers(int requested = 0);

}  // namespace kummerwit
