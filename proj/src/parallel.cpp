#include "knotcert/parallel.hpp"

#include <cstdlib>
#include <string>

namespace knotcert {

unsigned worker_threads() {
  if (const char* env = std::getenv("KNOTCERT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace knotcert
