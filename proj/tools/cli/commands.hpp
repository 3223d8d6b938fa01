#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace regdiv::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kResourceLimit = 3,
};

// Runs one `regdiv <command> [options]` invocation. `args` excludes the
// program name. Normal output goes to `out` unless --output is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Line plot of s(1..values.size()) in a fixed 800x400 viewBox.
std::string render_svg_plot(const std::vector<std::uint64_t>& values);

}  // namespace regdiv::cli
