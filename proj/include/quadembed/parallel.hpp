#ifndef QUADEMBED_PARALLEL_HPP_
#define QUADEMBED_PARALLEL_HPP_

namespace quadembed {

  // Number of worker threads: QUADEMBED_THREADS if set to a positive
  // integer, else the hardware concurrency.
  unsigned worker_count();

}  // namespace quadembed

#endif  // QUADEMBED_PARALLEL_HPP_
