#pragma once

#include <cstdint>
#include <string>

#include "hgmatch/errors.hpp"

namespace hgmatch {

// Node counter shared by the backtracking searches. Every search step
// charges one unit; crossing the ceiling raises BudgetError.
class Budget {
 public:
  static constexpr std::int64_t kDefaultNodes = 10'000'000;

  explicit Budget(std::int64_t limit = kDefaultNodes) : limit_(limit) {}

  void charge(std::int64_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw BudgetError("search budget exceeded (limit " +
                        std::to_string(limit_) + " nodes)");
    }
  }

  std::int64_t used() const { return used_; }
  std::int64_t limit() const { return limit_; }

 private:
  std::int64_t limit_;
  std::int64_t used_ = 0;
};

}  // namespace hgmatch
