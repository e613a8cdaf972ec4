#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "fernlab/scenario.hpp"

namespace fernlab::cli {

struct RunOptions {
  std::optional<std::uint64_t> seed_override;  // --seed beats the scenario's seed
  int samples = 1;
  bool want_dot = false;
};

struct RunResult {
  nlohmann::ordered_json doc;       // {"command", "inputs", "seed", "outputs", "warnings"}
  std::optional<std::string> dot;   // set for steinberg --dot
};

// Dispatches one of {dims, envelope, fern, lines, flatten, steinberg, gl4}.
RunResult run_command(const std::string& command, const ScenarioFile& sf, const RunOptions& opts);

}  // namespace fernlab::cli
