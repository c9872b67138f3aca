#include "eigenpoly/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace eigenpoly {

int max_threads() {
  if (const char* env = std::getenv("EIGENPOLY_THREADS")) {
    try {
      int k = std::stoi(env);
      if (k > 0) return k;
    } catch (...) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace eigenpoly
