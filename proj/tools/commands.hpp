#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"

namespace extlift::cli {

struct Options {
  bool json = false;
  int max_n = 12;
  /// Fallback sampling seed when neither the flags nor the instance give a
  /// signature.
  std::optional<std::uint64_t> seed;
  std::optional<std::string> vector;
  std::optional<std::string> heights;
  std::optional<std::string> reorientation;
};

inline constexpr int kHardMaxN = 20;

struct CommandResult {
  std::string output;
  std::string error;
  int exit_code = 0;  // 0 ok, 1 failed verification, 2 bad input
};

const std::vector<std::string>& command_names();

CommandResult run_command(const std::string& name, const Instance& instance, const Options& options);

}  // namespace extlift::cli
