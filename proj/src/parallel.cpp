#include "kummerwit/parallel.hpp"

#include <omp.h>

#include <cstdlib>

namespace kummerwit {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KUMMERWIT_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

}  // namespace kummerwit
