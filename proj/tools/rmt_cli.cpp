#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rmt/errors.hpp"
#include "rmt/harness.hpp"
#include "rmt/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rmt::ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Monte Carlo and closed-form averages of characteristic polynomials "
      "of random matrix products"};
  app.require_subcommand(0, 1);

  std::string config_path, out_path, format_override;
  std::uint64_t seed_override = 0;
  long long samples_override = 0;
  int shards_override = 0;

  app.add_option("--config", config_path, "JSON experiment description")
      ->required();
  CLI::Option* seed_opt =
      app.add_option("--seed", seed_override, "override the config seed");
  CLI::Option* samples_opt = app.add_option("--samples", samples_override,
                                            "override the sample count");
  CLI::Option* shards_opt =
      app.add_option("--shards", shards_override, "override the shard count");
  app.add_option("--out", out_path,
                 "write the selected format here (atomic rename)");
  CLI::Option* format_opt =
      app.add_option("--format", format_override, "output format")
          ->check(CLI::IsMember({"json", "csv"}));

  std::optional<std::string> forced_command;
  for (const char* name : {"sample", "estimate", "analytic", "compare",
                           "hard-edge", "quadrature"}) {
    CLI::App* sub = app.add_subcommand(
        name, std::string("run the '") + name + "' command from the config");
    sub->fallthrough();
    sub->callback([&forced_command, name] { forced_command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    nlohmann::json root;
    try {
      root = nlohmann::json::parse(read_file(config_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw rmt::ConfigError(std::string("config is not valid JSON: ") +
                             e.what());
    }
    if (!root.is_object())
      throw rmt::ConfigError("config must be a JSON object");
    if (forced_command) root["command"] = *forced_command;
    if (seed_opt->count() > 0) root["seed"] = seed_override;
    if (samples_opt->count() > 0) root["samples"] = samples_override;
    if (shards_opt->count() > 0) root["shards"] = shards_override;
    if (format_opt->count() > 0) root["format"] = format_override;

    rmt::ExperimentConfig cfg = rmt::parse_experiment_config(root.dump());
    rmt::RunOutcome outcome = rmt::run_experiment(cfg);

    const std::string& payload =
        cfg.format == "csv" ? outcome.csv : outcome.report_json;
    if (cfg.format == "csv" && outcome.csv.empty())
      throw rmt::ConfigError("this command has no CSV output; use json");
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      rmt::atomic_write_file(out_path, payload);
    }
    return outcome.exit_code;
  } catch (const rmt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
