#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace f2c {

// Exit codes: 0 success, 1 invalid input, 2 budget exceeded, 3 invariant violation.
struct CommandResult {
  int exit_code = 0;
  std::string command;
  nlohmann::json payload;
  std::optional<std::string> markdown;
  bool want_markdown = false;
  std::string message;  // help text, or the error description

  // What the binary writes to stdout.
  std::string rendered() const;
};

// `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace f2c
