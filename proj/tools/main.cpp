#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fernlab.h"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return {};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  ok = true;
  return ss.str();
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::cout << row[c];
      if (c + 1 < row.size()) std::cout << std::string(widths[c] - row[c].size() + 2, ' ');
    }
    std::cout << "\n";
  }
}

std::string scalar_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::string list_str(const json& v) { return v.dump(); }

void render_report(const std::string& title, const json& rep) {
  std::cout << title << "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"  name", "value", "oracle", "anchor"});
  for (auto it = rep.begin(); it != rep.end(); ++it) {
    const json& e = it.value();
    rows.push_back({"  " + it.key(), scalar_str(e["value"]), scalar_str(e["oracle"]),
                    e["anchor"].get<std::string>()});
  }
  print_table(rows);
  std::cout << "\n";
}

void render_human(const json& doc) {
  const json& out = doc["outputs"];
  const std::string command = doc["command"].get<std::string>();
  std::cout << "command: " << command << "   seed: " << doc["seed"] << "\n\n";

  if (command == "dims") {
    render_report("ext dimensions (u = identity)", out["ext_identity"]);
    render_report("ext dimensions (u = longest)", out["ext_longest"]);
    std::vector<std::vector<std::string>> rows{{"  u", "hom dim"}};
    for (const auto& h : out["hom_u"]) rows.push_back({"  " + list_str(h["u"]), scalar_str(h["dim"])});
    std::cout << "hom_u\n";
    print_table(rows);
    std::cout << "\n";
    render_report("representation-side dimensions", out["rep"]);
    if (out.contains("t_count")) {
      std::vector<std::vector<std::string>> tc{{"  t_prev", "r_s", "h", "value", "oracle"}};
      for (const auto& e : out["t_count"])
        tc.push_back({"  " + scalar_str(e["t_prev"]), scalar_str(e["r_s"]), scalar_str(e["h"]),
                      scalar_str(e["value"]), scalar_str(e["oracle"])});
      std::cout << "t_count\n";
      print_table(tc);
      std::cout << "\n";
    }
    render_report("kernel (sampled or supplied g)", out["kernel"]);
  } else if (command == "envelope") {
    for (const auto& s : out["samples"]) {
      std::cout << "dim Ad_g(b) = " << s["dim_adgb"] << ", envelope circ = " << s["envelope_circ"]
                << ", full = " << s["envelope_full"]
                << ", full == Ad_g(b): " << scalar_str(s["full_equals_adgb"]) << "\n";
      std::vector<std::vector<std::string>> rows{{"  u", "tau_dim", "p_dim"}};
      for (const auto& row : s["summands"])
        rows.push_back({"  " + list_str(row["u"]), scalar_str(row["tau_dim"]), scalar_str(row["p_dim"])});
      print_table(rows);
      std::cout << "\n";
    }
  } else if (command == "fern") {
    std::cout << "all witnesses members: " << scalar_str(out["all_members"])
              << ", span check: " << scalar_str(out["spans"])
              << ", envelope(full) == Ad_g(b): " << scalar_str(out["envelope_full_equals_adgb"])
              << "\n";
    std::vector<std::vector<std::string>> rows{{"  (i,j)", "u", "x", "member"}};
    for (const auto& w : out["witnesses"])
      rows.push_back({"  (" + scalar_str(w["i"]) + "," + scalar_str(w["j"]) + ")", list_str(w["u"]),
                      list_str(w["x"]), scalar_str(w["member"])});
    print_table(rows);
  } else if (command == "lines") {
    std::cout << "noncritical: " << scalar_str(out["noncritical"]) << "\n";
    std::vector<std::vector<std::string>> rows{{"  line", "generator"}};
    int l = 1;
    for (const auto& gen : out["lines"]) rows.push_back({"  L_" + std::to_string(l++), list_str(gen)});
    print_table(rows);
  } else if (command == "flatten") {
    std::cout << "Delta' = " << list_str(out["delta_prime"]) << "\n";
    std::vector<std::vector<std::string>> rows{{"  i", "kept coords", "flat line", "collapsed"}};
    for (const auto& f : out["flats"])
      rows.push_back({"  " + scalar_str(f["i"]), list_str(f["kept_coords"]), list_str(f["line"]),
                      scalar_str(f["collapsed"])});
    print_table(rows);
  } else if (command == "steinberg") {
    if (out.contains("fibers")) {
      std::vector<std::vector<std::string>> rows{{"  J", "fiber size", "descent witness"}};
      for (const auto& f : out["fibers"])
        rows.push_back({"  " + list_str(f["J"]), scalar_str(f["size"]), list_str(f["descent_witness"])});
      std::cout << "descent fibers\n";
      print_table(rows);
      std::cout << "\n";
    }
    const json& iv = out["interval"];
    std::cout << "interval [" << list_str(iv["j0"]) << ", " << list_str(iv["j1"])
              << "], size " << iv["size"] << "\n";
    for (const auto& m : iv["members"]) std::cout << "  " << list_str(m) << "\n";
    const json& gc = out["generic_count"];
    std::cout << "generic constituents: " << gc["value"] << " (oracle " << scalar_str(gc["oracle"])
              << ")\n";
  } else if (command == "gl4") {
    std::cout << "rebased check verdict: " << scalar_str(out["verdict"]) << "\n";
  }

  if (doc.contains("warnings") && !doc["warnings"].empty()) {
    std::cout << "\nwarnings:\n";
    for (const auto& w : doc["warnings"]) std::cout << "  " << w.get<std::string>() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fernlab: exact linear algebra and combinatorics toolbox"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string dot_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int samples = 1;
  bool json_mode = false;

  const std::vector<std::string> commands = {"dims",    "envelope",  "fern", "lines",
                                             "flatten", "steinberg", "gl4"};
  for (const auto& name : commands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    sub->add_flag("--json", json_mode, "emit the JSON payload");
    sub->add_option("--dot", dot_path, "write a DOT lattice to this path");
    sub->add_option("--seed", seed, "sampling seed (overrides the scenario)")
        ->check(CLI::NonNegativeNumber)
        ->each([&](const std::string&) { seed_given = true; });
    sub->add_option("--samples", samples, "number of sampled g (envelope)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();

  bool ok = false;
  std::string scenario = read_file(scenario_path, ok);
  if (!ok) {
    std::cerr << "error: cannot read scenario file '" << scenario_path << "'\n";
    return 1;
  }

  nlohmann::json opts;
  if (seed_given) opts["seed"] = seed;
  opts["samples"] = samples;
  opts["dot"] = !dot_path.empty();
  const std::string opts_text = opts.dump();

  fernlab_result* res = nullptr;
  fernlab_status st = fernlab_run(command.c_str(), scenario.c_str(), opts_text.c_str(), &res);
  if (st != FERNLAB_OK) {
    const char* msg = fernlab_result_error(res);
    std::cerr << "error: " << (msg ? msg : "unknown failure") << "\n";
    fernlab_result_free(res);
    return static_cast<int>(st);
  }

  const char* payload = fernlab_result_json(res);
  if (json_mode) {
    std::cout << (payload ? payload : "");
  } else {
    render_human(nlohmann::json::parse(payload));
  }

  if (!dot_path.empty()) {
    const char* dot = fernlab_result_dot(res);
    if (dot) {
      std::ofstream out(dot_path, std::ios::binary);
      out << dot;
    } else {
      std::cerr << "note: command produced no DOT output\n";
    }
  }

  fernlab_result_free(res);
  return 0;
}
