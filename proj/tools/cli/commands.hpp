#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace padicqw {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct CheckResult {
  std::string name;
  double tolerance;
  double observed_error;
  bool passed;
};

// The invariant suite behind `verify`.
std::vector<CheckResult> run_verification(const RunConfig& cfg);

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_walk(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fg_walk(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses the command line and dispatches; returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padicqw
