#include "quadembed/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace quadembed {

  unsigned worker_count() {
    if (char const* env = std::getenv("QUADEMBED_THREADS")) {
      char*         end   = nullptr;
      unsigned long value = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        return static_cast<unsigned>(std::min<unsigned long>(value, 1024));
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

}  // namespace quadembed
