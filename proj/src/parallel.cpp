#include "sscs/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace sscs {

int configure_threads_from_env() {
  if (const char* env = std::getenv("SSCS_THREADS")) {
    try {
      int width = std::stoi(env);
      if (width > 0) omp_set_num_threads(width);
    } catch (const std::exception&) {
      // ignore malformed values, keep the runtime default
    }
  }
  return omp_get_max_threads();
}

}  // namespace sscs
