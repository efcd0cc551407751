#include "minspan/parallel.hpp"

#include <cstdlib>
#include <string>

namespace minspan {

int worker_count() {
  if (const char* env = std::getenv("MINSPAN_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace minspan
