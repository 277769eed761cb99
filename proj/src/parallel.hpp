#pragma once

#include <omp.h>

#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>

namespace matecensus::detail {

inline int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Exceptions must not escape an OpenMP region. Records the failure with the
// smallest item index so the rethrown error does not depend on scheduling.
class FirstError {
 public:
  void record(std::int64_t index, std::exception_ptr error) {
    std::lock_guard lock(mutex_);
    if (index < index_) {
      index_ = index;
      error_ = std::move(error);
    }
  }

  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::int64_t index_ = std::numeric_limits<std::int64_t>::max();
  std::exception_ptr error_;
};

}  // namespace matecensus::detail
