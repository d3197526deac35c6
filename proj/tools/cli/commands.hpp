#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace ahp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitNoWitness = 2;
inline constexpr int kExitUsage = 64;

enum class OutputMode { text, json, csv };

struct Execution {
  /// The run record; "result", "certificate" and "exit_code" are the fields
  /// compared by replay.
  json record;
  int exit_code = kExitOk;
  OutputMode mode = OutputMode::text;
  std::optional<std::string> out_path;
  /// Help or usage text produced by the parser, if any.
  std::string parser_output;
};

/// Parses and runs one invocation (arguments without the program name).
/// Never throws.
Execution execute(const std::vector<std::string>& args);

std::string render(const Execution& e);

/// execute + render + write to `out` (or to --out).  Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ahp::cli
