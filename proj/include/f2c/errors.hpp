#pragma once

#include <stdexcept>
#include <string>

namespace f2c {

// Each class maps to one CLI exit code (1, 2, 3 respectively).
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw InvalidInput(msg); }
[[noreturn]] inline void fail_budget(const std::string& msg) { throw BudgetExceeded(msg); }
[[noreturn]] inline void fail_invariant(const std::string& msg) { throw InvariantViolation(msg); }

inline void ensure(bool cond, const char* what) {
  if (!cond) fail_invariant(what);
}

}  // namespace f2c
