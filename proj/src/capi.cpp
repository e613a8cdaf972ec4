#include "fernlab.h"

#include <json.hpp>

#include <new>
#include <string>

#include "fernlab/errors.hpp"
#include "fernlab/runner.hpp"

struct fernlab_result {
  std::string json;
  std::string dot;
  std::string error;
  bool has_json = false;
  bool has_dot = false;
  bool has_error = false;
};

namespace {

fernlab_status run_impl(const char* command, const char* scenario_json,
                        const char* options_json, fernlab_result& res) {
  using namespace fernlab;
  try {
    if (command == nullptr || scenario_json == nullptr)
      fail(ErrorKind::Parse, "command and scenario must be non-null");

    cli::RunOptions opts;
    if (options_json != nullptr && *options_json != '\0') {
      nlohmann::json o;
      try {
        o = nlohmann::json::parse(options_json);
      } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::Parse, std::string("options: ") + e.what());
      }
      if (o.contains("seed")) opts.seed_override = o["seed"].get<std::uint64_t>();
      if (o.contains("samples")) opts.samples = o["samples"].get<int>();
      if (o.contains("dot")) opts.want_dot = o["dot"].get<bool>();
    }

    cli::ScenarioFile sf = cli::parse_scenario(scenario_json);
    cli::RunResult r = cli::run_command(command, sf, opts);
    res.json = r.doc.dump(2);
    res.json.push_back('\n');
    res.has_json = true;
    if (r.dot) {
      res.dot = *r.dot;
      res.has_dot = true;
    }
    return FERNLAB_OK;
  } catch (const Error& e) {
    res.error = e.what();
    res.has_error = true;
    return static_cast<fernlab_status>(exit_code(e.kind()));
  } catch (const std::exception& e) {
    res.error = e.what();
    res.has_error = true;
    return FERNLAB_COMPUTE;
  }
}

}  // namespace

extern "C" {

fernlab_status fernlab_run(const char* command, const char* scenario_json,
                           const char* options_json, fernlab_result** out) {
  if (out == nullptr) return FERNLAB_USAGE;
  auto* res = new (std::nothrow) fernlab_result;
  if (res == nullptr) {
    *out = nullptr;
    return FERNLAB_COMPUTE;
  }
  fernlab_status st = run_impl(command, scenario_json, options_json, *res);
  *out = res;
  return st;
}

const char* fernlab_result_json(const fernlab_result* res) {
  return (res && res->has_json) ? res->json.c_str() : nullptr;
}

const char* fernlab_result_dot(const fernlab_result* res) {
  return (res && res->has_dot) ? res->dot.c_str() : nullptr;
}

const char* fernlab_result_error(const fernlab_result* res) {
  return (res && res->has_error) ? res->error.c_str() : nullptr;
}

void fernlab_result_free(fernlab_result* res) { delete res; }

const char* fernlab_version(void) { return "fernlab 0.1.0"; }

}  // extern "C"
