#pragma once

#include <string>
#include <vector>

namespace dk::cli {

inline constexpr const char* kVersion = "0.1.0";

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 fail, 2 error
  std::string output;
};

/// Runs one command in-process; `args` excludes the program name. The report
/// is buffered and returned whole, never written directly.
RunResult run(const std::vector<std::string>& args);

}  // namespace dk::cli
