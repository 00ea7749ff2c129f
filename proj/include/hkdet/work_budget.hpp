#ifndef HKDET_WORK_BUDGET_HPP
#define HKDET_WORK_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hkdet {

// Thrown when an exhaustive enumeration exceeds its step allowance.
class WorkBudgetError : public std::runtime_error {
 public:
  explicit WorkBudgetError(std::uint64_t limit, const std::string& context = "")
      : std::runtime_error(context.empty()
                               ? "work budget of " + std::to_string(limit) +
                                     " enumeration steps exhausted"
                               : "work budget of " + std::to_string(limit) +
                                     " enumeration steps exhausted while " + context),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

// Step allowance for one enumeration-oracle invocation. A step is one
// candidate tuple, margin prefix, or exponent matrix visited, so the budget
// bounds runtime up to a small constant factor. There is no silent
// truncation: exceeding the budget throws WorkBudgetError.
class WorkBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 100'000'000;

  WorkBudget() : WorkBudget(kDefaultLimit) {}
  explicit WorkBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) throw WorkBudgetError(limit_);
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace hkdet

#endif  // HKDET_WORK_BUDGET_HPP
