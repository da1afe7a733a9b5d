#ifndef EXSUM_WORK_HPP
#define EXSUM_WORK_HPP

#include <cstdint>
#include <limits>

#include "exsum/errors.hpp"

namespace exsum {

/// Counts abstract work units and throws BudgetExceeded past the budget.
class WorkMeter {
 public:
  explicit WorkMeter(std::uint64_t budget = std::numeric_limits<std::uint64_t>::max())
      : budget_(budget) {}

  void charge(std::uint64_t units) {
    used_ += units;
    if (used_ > budget_) throw BudgetExceeded();
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t budget() const { return budget_; }
  std::uint64_t remaining() const { return used_ >= budget_ ? 0 : budget_ - used_; }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

}  // namespace exsum

#endif  // EXSUM_WORK_HPP
