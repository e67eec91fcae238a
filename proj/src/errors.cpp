#include "gjohnson/errors.hpp"

#include <fmt/format.h>

namespace gjohnson {

BudgetExceeded::BudgetExceeded(std::uint64_t nodes_expanded,
                               const std::string& progress)
    : std::runtime_error(
          progress.empty()
              ? fmt::format("work budget exceeded after {} node expansions",
                            nodes_expanded)
              : fmt::format("work budget exceeded after {} node expansions ({})",
                            nodes_expanded, progress)),
      nodes_expanded_(nodes_expanded),
      progress_(progress) {}

}  // namespace gjohnson
