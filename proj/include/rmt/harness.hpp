#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmt/charpoly.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/hard_edge.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

enum class Command { Sample, Estimate, Analytic, Compare, HardEdge, Quadrature };

const char* command_name(Command c);
Command command_from_name(const std::string& name);

// Self-check that the comparison machinery can actually detect a wrong
// reference: each configured control perturbs the analytic side (or the
// estimate) and the ratio test is then required to fail.
struct NegativeControl {
  int nu_offset = 0;          // shift every factor's nu on the analytic side
  double plant_sigmas = 0.0;  // bump the first estimate by this many sigma
};

struct HardEdgeConfig {
  SeriesParams hatted;  // size-independent factor data (see hard_edge_scan)
  std::vector<int> n_list;
  std::vector<double> x_grid;
  double threshold = 1e-2;  // required sup-distance at the largest n
};

struct ExperimentConfig {
  Command command = Command::Compare;
  std::uint64_t seed = 1;
  long long samples = 10000;
  int shards = 1;
  std::string format = "json";  // "json" or "csv"
  ProductSpec product;          // empty only for hard-edge runs
  std::vector<double> masses;
  bool joint = false;  // one estimate with all masses instead of a curve
  McmcConfig mcmc;
  QuadratureConfig quadrature;
  std::optional<HardEdgeConfig> hard_edge;
  std::optional<NegativeControl> negative_control;
  std::string config_hash;  // fingerprint of the originating JSON text
};

// Parses and validates a JSON experiment description.  Unknown keys are
// rejected so typos cannot silently change a run.
ExperimentConfig parse_experiment_config(const std::string& json_text);

struct RunOutcome {
  int exit_code = 0;        // 0 = pass, 1 = a verdict failed
  std::string report_json;  // always produced
  std::string csv;          // empty when the command has no tabular output
};

// Runs one experiment.  Configuration and runtime errors propagate as
// exceptions (the CLI maps them to exit code 2); verdict failures are
// reported through exit_code = 1.
RunOutcome run_experiment(const ExperimentConfig& cfg);

// Reference curve for the product at each single mass: the closed series for
// beta = 2, and the parameter-mapped series (single factor only) otherwise.
std::vector<double> analytic_curve(const ProductSpec& spec,
                                   const std::vector<double>& masses);

// Joint closed form with all masses at once.  Only k = 1 (the series) and,
// for beta = 2, k = 2 (the two-angle contour rule) are available; other
// requests throw UnsupportedMassCount.
double joint_analytic_value(const ProductSpec& spec,
                            const std::vector<double>& masses,
                            const QuadratureConfig& quad);

}  // namespace rmt
