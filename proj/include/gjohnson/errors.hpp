#ifndef GJOHNSON_ERRORS_HPP_
#define GJOHNSON_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gjohnson {

/// Invalid graph parameters, indices, probabilities or other caller input.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine ran out of its node-expansion budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t nodes_expanded, const std::string& progress);

  std::uint64_t nodes_expanded() const { return nodes_expanded_; }
  const std::string& progress() const { return progress_; }

 private:
  std::uint64_t nodes_expanded_;
  std::string progress_;
};

/// A result list would exceed the caller-supplied cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not. Signals a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Node-expansion counter shared by every exhaustive routine.
///
/// A budget is charged once per search-tree node pushed. Once `used()`
/// passes `limit()`, `charge` throws BudgetExceeded.
class WorkBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 100'000'000;

  explicit WorkBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) throw BudgetExceeded(used_, "");
  }

  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t remaining() const { return used_ >= limit_ ? 0 : limit_ - used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace gjohnson

#endif  // GJOHNSON_ERRORS_HPP_
