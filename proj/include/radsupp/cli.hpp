#pragma once

// The `radsupp` command line, callable in-process for tests.

#include <string>
#include <vector>

#include "radsupp/serialize.hpp"

namespace radsupp {

enum class Status { Ok, NotRadicalSupport, Error, Indeterminate };

struct CommandResult {
  Status status = Status::Ok;
  Json payload;             // schema record, printed with --json
  std::string text;         // human-readable rendering
  std::string diagnostics;  // log lines for stderr
  bool json = false;

  /// 0 ok, 1 definite negative, 2 usage or input error, 3 indeterminate.
  int exit_code() const { return static_cast<int>(status); }
  /// What the process writes to stdout.
  std::string output() const;
};

/// args excludes the program name, e.g. {"check", "1 2; 2 3"}.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace radsupp
