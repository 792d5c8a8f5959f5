#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "f2c/errors.hpp"

namespace f2c {

// Resource limits threaded through the expensive operations. Exceeding any
// of them raises BudgetExceeded instead of running into a cost cliff.
struct Budget {
  int max_subgroup_order = 200;
  int max_iso_order = 48;
  // Upper bound on the dense echelon basis (columns squared) used when
  // solving a bar-resolution system.
  std::uint64_t max_dense_cells = 40'000'000;
  // Zero means no wall-clock limit.
  double time_limit_seconds = 0.0;

  void start_clock() {
    if (time_limit_seconds > 0)
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(time_limit_seconds));
  }
  void check_time(const char* where) const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      fail_budget(std::string("time limit exceeded in ") + where);
  }

  std::optional<std::chrono::steady_clock::time_point> deadline;
};

inline const Budget& default_budget() {
  static const Budget b;
  return b;
}

}  // namespace f2c
