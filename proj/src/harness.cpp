#include "rmt/harness.hpp"

#include <cmath>
#include <initializer_list>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rmt/dyson.hpp"
#include "rmt/errors.hpp"
#include "rmt/report.hpp"
#include "rmt/series.hpp"

namespace rmt {

using nlohmann::json;

const char* command_name(Command c) {
  switch (c) {
    case Command::Sample: return "sample";
    case Command::Estimate: return "estimate";
    case Command::Analytic: return "analytic";
    case Command::Compare: return "compare";
    case Command::HardEdge: return "hard-edge";
    case Command::Quadrature: return "quadrature";
  }
  return "unknown";
}

Command command_from_name(const std::string& name) {
  if (name == "sample") return Command::Sample;
  if (name == "estimate") return Command::Estimate;
  if (name == "analytic") return Command::Analytic;
  if (name == "compare") return Command::Compare;
  if (name == "hard-edge") return Command::HardEdge;
  if (name == "quadrature") return Command::Quadrature;
  throw ConfigError("unknown command '" + name + "'");
}

namespace {

void check_keys(const json& j, const char* where,
                std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known)
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
  }
}

EnsembleSpec parse_spec(const json& j) {
  if (!j.is_object()) throw ConfigError("an ensemble must be a JSON object");
  check_keys(j, "ensemble", {"kind", "beta", "n", "nu", "gamma", "mu", "kappa"});
  EnsembleSpec s;
  s.kind = ensemble_kind_from_name(j.at("kind").get<std::string>());
  s.beta = j.value("beta", 2);
  s.n = j.at("n").get<int>();
  s.nu = j.value("nu", 0);
  s.gamma_scale = j.value("gamma", 1.0);
  s.mu = j.value("mu", 0.0);
  s.kappa = j.value("kappa", 0.0);
  return s;
}

HardEdgeConfig parse_hard_edge(const json& j) {
  check_keys(j, "hard_edge",
             {"factors", "gamma_sq", "uniform_nu", "n_list", "x_grid",
              "threshold"});
  HardEdgeConfig he;
  he.hatted.n = 1;  // per-row n comes from n_list
  for (const json& f : j.at("factors")) {
    check_keys(f, "hard_edge factor", {"kind", "nu", "exponent"});
    SeriesFactor sf;
    sf.kind = ensemble_kind_from_name(f.at("kind").get<std::string>());
    sf.nu = f.value("nu", 0.0);
    sf.exponent = f.value("exponent", 0.0);
    he.hatted.factors.push_back(sf);
  }
  he.hatted.gamma_sq_total = j.value("gamma_sq", 1.0);
  if (j.contains("uniform_nu")) {
    he.hatted.nu_convention = NuConvention::Uniform;
    he.hatted.uniform_nu = j.at("uniform_nu").get<double>();
  }
  he.n_list = j.at("n_list").get<std::vector<int>>();
  he.x_grid = j.at("x_grid").get<std::vector<double>>();
  he.threshold = j.value("threshold", 1e-2);
  if (!(he.threshold > 0.0)) throw ConfigError("threshold must be positive");
  return he;
}

json envelope(const ExperimentConfig& cfg) {
  json out;
  out["version"] = kToolVersion;
  out["command"] = command_name(cfg.command);
  out["seed"] = cfg.seed;
  out["config_hash"] = cfg.config_hash;
  return out;
}

EstimatorConfig estimator_config(const ExperimentConfig& cfg) {
  EstimatorConfig est;
  est.n_samples = cfg.samples;
  est.shards = cfg.shards;
  est.seed = cfg.seed;
  est.mcmc = cfg.mcmc;
  return est;
}

std::string simple_csv(const char* header,
                       const std::vector<std::pair<double, double>>& rows) {
  std::ostringstream out;
  out << header << "\n";
  for (const auto& [a, b] : rows)
    out << format_g17(a) << ',' << format_g17(b) << "\n";
  return out.str();
}

RunOutcome run_sample(const ExperimentConfig& cfg) {
  ProductSampler sampler(cfg.product, cfg.mcmc, cfg.seed);
  std::ostringstream csv;
  csv << "sample,index,value\n";
  CompensatedSum mean;
  long long rows = 0;
  for (long long s = 0; s < cfg.samples; ++s) {
    ProductSample sample = sampler.next();
    SpectrumWithMultiplicity spectrum = gram_spectrum(sample.product);
    if (spectrum.beta == 4 && !spectrum.kramers_collapsed)
      spectrum = collapse_kramers(spectrum);
    for (std::size_t i = 0; i < spectrum.values.size(); ++i) {
      csv << s << ',' << i << ',' << format_g17(spectrum.values[i]) << "\n";
      mean.add(spectrum.values[i]);
      ++rows;
    }
  }
  json report = envelope(cfg);
  report["n_samples"] = cfg.samples;
  report["rows"] = rows;
  report["mean_eigenvalue"] = mean.total() / static_cast<double>(rows);
  return {0, report.dump(2) + "\n", csv.str()};
}

RunOutcome run_estimate(const ExperimentConfig& cfg) {
  json report = envelope(cfg);
  report["n_samples"] = cfg.samples;
  if (cfg.joint) {
    Estimate e = estimate_Z(cfg.product, cfg.masses, estimator_config(cfg));
    report["masses"] = cfg.masses;
    report["value"] = e.value;
    report["stderr"] = e.std_err;
    return {0, report.dump(2) + "\n", ""};
  }
  CurveEstimate curve =
      estimate_Z_curve(cfg.product, cfg.masses, estimator_config(cfg));
  json points = json::array();
  for (std::size_t i = 0; i < curve.points.size(); ++i)
    points.push_back({{"mass", curve.masses[i]},
                      {"value", curve.points[i].value},
                      {"stderr", curve.points[i].std_err}});
  report["points"] = points;
  return {0, report.dump(2) + "\n", curve_to_csv(curve)};
}

RunOutcome run_analytic(const ExperimentConfig& cfg) {
  json report = envelope(cfg);
  if (cfg.joint) {
    report["masses"] = cfg.masses;
    report["value"] =
        joint_analytic_value(cfg.product, cfg.masses, cfg.quadrature);
    return {0, report.dump(2) + "\n", ""};
  }
  std::vector<double> values = analytic_curve(cfg.product, cfg.masses);
  json points = json::array();
  std::vector<std::pair<double, double>> rows;
  for (std::size_t i = 0; i < values.size(); ++i) {
    points.push_back({{"mass", cfg.masses[i]}, {"value", values[i]}});
    rows.emplace_back(cfg.masses[i], values[i]);
  }
  report["points"] = points;
  return {0, report.dump(2) + "\n", simple_csv("mass,value", rows)};
}

RunOutcome run_compare(const ExperimentConfig& cfg) {
  CurveEstimate curve =
      estimate_Z_curve(cfg.product, cfg.masses, estimator_config(cfg));
  std::vector<double> reference = analytic_curve(cfg.product, cfg.masses);
  RatioTestResult main = ratio_constancy_test(curve, reference);

  bool all_detected = true;
  json controls = json::array();
  if (cfg.negative_control) {
    const NegativeControl& nc = *cfg.negative_control;
    if (nc.nu_offset != 0) {
      ProductSpec shifted = cfg.product;
      for (EnsembleSpec& f : shifted.factors) f.nu += nc.nu_offset;
      RatioTestResult t =
          ratio_constancy_test(curve, analytic_curve(shifted, cfg.masses));
      controls.push_back({{"kind", "nu-offset"},
                          {"max_deviation_sigmas", t.max_deviation_sigmas},
                          {"detected", !t.pass}});
      all_detected = all_detected && !t.pass;
    }
    if (nc.plant_sigmas > 0.0) {
      CurveEstimate planted = curve;
      planted.points.front().value +=
          nc.plant_sigmas * std::max(planted.points.front().std_err, 1e-300);
      RatioTestResult t = ratio_constancy_test(planted, reference);
      controls.push_back({{"kind", "planted-bias"},
                          {"max_deviation_sigmas", t.max_deviation_sigmas},
                          {"detected", !t.pass}});
      all_detected = all_detected && !t.pass;
    }
  }

  bool pass = main.pass && all_detected;
  json report = envelope(cfg);
  report["n_samples"] = cfg.samples;
  report["ratio"] = main.ratio;
  report["max_deviation_sigmas"] = main.max_deviation_sigmas;
  report["pass"] = pass;
  if (!controls.empty()) report["negative_controls"] = controls;
  json points = json::array();
  for (std::size_t i = 0; i < curve.points.size(); ++i)
    points.push_back({{"mass", curve.masses[i]},
                      {"value", curve.points[i].value},
                      {"stderr", curve.points[i].std_err},
                      {"analytic", reference[i]},
                      {"ratio", curve.points[i].value / reference[i]}});
  report["points"] = points;
  return {pass ? 0 : 1, report.dump(2) + "\n", curve_to_csv(curve)};
}

RunOutcome run_hard_edge(const ExperimentConfig& cfg) {
  if (!cfg.hard_edge)
    throw ConfigError("hard-edge runs need a 'hard_edge' section");
  const HardEdgeConfig& he = *cfg.hard_edge;
  std::vector<HardEdgeRow> rows =
      hard_edge_scan(he.hatted, he.n_list, he.x_grid);
  bool decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    decreasing = decreasing &&
                 rows[i].sup_distance < rows[i - 1].sup_distance;
  bool pass = decreasing && rows.back().sup_distance < he.threshold;

  json report = envelope(cfg);
  json jrows = json::array();
  std::vector<std::pair<double, double>> csv_rows;
  for (const HardEdgeRow& r : rows) {
    jrows.push_back({{"n", r.n}, {"sup_distance", r.sup_distance}});
    csv_rows.emplace_back(static_cast<double>(r.n), r.sup_distance);
  }
  report["rows"] = jrows;
  report["strictly_decreasing"] = decreasing;
  report["threshold"] = he.threshold;
  report["pass"] = pass;
  return {pass ? 0 : 1, report.dump(2) + "\n",
          simple_csv("n,sup_distance", csv_rows)};
}

RunOutcome run_quadrature(const ExperimentConfig& cfg) {
  if (cfg.product.factors.size() != 1)
    throw ConfigError("quadrature rules cover a single factor");
  SingleParams p = cfg.product.factors.front().single_params();
  json report = envelope(cfg);
  if (cfg.joint) {
    if (cfg.masses.size() != 2)
      throw ConfigError("joint quadrature needs exactly two masses");
    std::complex<double> v = cbe2_quadrature(
        DysonIndex::of(p.beta).beta_tilde, p, cfg.masses[0], cfg.masses[1],
        cfg.quadrature);
    report["masses"] = cfg.masses;
    report["value"] = v.real();
    report["imag_residual"] = v.imag();
    return {0, report.dump(2) + "\n", ""};
  }
  if (p.beta != 2)
    throw ConfigError(
        "the single-mass rule is written for beta = 2; reduce other beta "
        "values with the parameter map first");
  json points = json::array();
  std::vector<std::pair<double, double>> rows;
  double max_imag = 0.0;
  for (double m : cfg.masses) {
    std::complex<double> v = contour_quadrature_k1(p, m, cfg.quadrature);
    points.push_back({{"mass", m}, {"value", v.real()}});
    rows.emplace_back(m, v.real());
    max_imag = std::max(max_imag, std::fabs(v.imag()));
  }
  report["points"] = points;
  report["max_imag_residual"] = max_imag;
  return {0, report.dump(2) + "\n", simple_csv("mass,value", rows)};
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    if (!root.is_object()) throw ConfigError("config must be a JSON object");
    check_keys(root, "config",
               {"command", "seed", "samples", "shards", "format", "ensemble",
                "product", "masses", "joint", "mcmc", "quadrature",
                "hard_edge", "negative_control"});
    ExperimentConfig cfg;
    cfg.command = command_from_name(root.at("command").get<std::string>());
    cfg.seed = root.value("seed", std::uint64_t{1});
    cfg.samples = root.value("samples", 10000LL);
    cfg.shards = root.value("shards", 1);
    cfg.format = root.value("format", "json");
    if (cfg.format != "json" && cfg.format != "csv")
      throw ConfigError("format must be 'json' or 'csv'");
    if (cfg.samples < 1) throw ConfigError("samples must be >= 1");
    if (cfg.shards < 1) throw ConfigError("shards must be >= 1");

    if (root.contains("ensemble") && root.contains("product"))
      throw ConfigError("give either 'ensemble' or 'product', not both");
    if (root.contains("ensemble"))
      cfg.product.factors.push_back(parse_spec(root["ensemble"]));
    if (root.contains("product"))
      for (const json& f : root["product"])
        cfg.product.factors.push_back(parse_spec(f));

    if (root.contains("masses"))
      cfg.masses = root["masses"].get<std::vector<double>>();
    for (double m : cfg.masses)
      if (!std::isfinite(m)) throw ConfigError("masses must be finite");
    cfg.joint = root.value("joint", false);

    if (root.contains("mcmc")) {
      const json& m = root["mcmc"];
      check_keys(m, "mcmc",
                 {"step_scale", "burn_in", "thinning", "chain_stream"});
      cfg.mcmc.step_scale = m.value("step_scale", cfg.mcmc.step_scale);
      cfg.mcmc.burn_in = m.value("burn_in", cfg.mcmc.burn_in);
      cfg.mcmc.thinning = m.value("thinning", cfg.mcmc.thinning);
      cfg.mcmc.chain_stream = m.value("chain_stream", cfg.mcmc.chain_stream);
    }
    if (root.contains("quadrature")) {
      const json& q = root["quadrature"];
      check_keys(q, "quadrature", {"nodes", "radius", "auto_radius"});
      cfg.quadrature.nodes = q.value("nodes", cfg.quadrature.nodes);
      cfg.quadrature.radius = q.value("radius", cfg.quadrature.radius);
      cfg.quadrature.auto_radius =
          q.value("auto_radius", cfg.quadrature.auto_radius);
    }
    if (root.contains("hard_edge"))
      cfg.hard_edge = parse_hard_edge(root["hard_edge"]);
    if (root.contains("negative_control")) {
      const json& nc = root["negative_control"];
      check_keys(nc, "negative_control", {"nu_offset", "plant_sigmas"});
      NegativeControl control;
      control.nu_offset = nc.value("nu_offset", 0);
      control.plant_sigmas = nc.value("plant_sigmas", 0.0);
      if (control.nu_offset == 0 && control.plant_sigmas <= 0.0)
        throw ConfigError(
            "negative_control needs nu_offset != 0 or plant_sigmas > 0");
      cfg.negative_control = control;
    }

    bool needs_ensemble = cfg.command != Command::HardEdge;
    if (needs_ensemble && cfg.product.factors.empty())
      throw ConfigError("this command needs an 'ensemble' or 'product'");
    bool needs_masses = cfg.command == Command::Estimate ||
                        cfg.command == Command::Analytic ||
                        cfg.command == Command::Compare ||
                        cfg.command == Command::Quadrature;
    if (needs_masses && cfg.masses.empty())
      throw ConfigError("this command needs a non-empty 'masses' list");
    if (cfg.command == Command::HardEdge && !cfg.hard_edge)
      throw ConfigError("hard-edge runs need a 'hard_edge' section");

    cfg.config_hash = fnv1a_hex(root.dump());
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
}

std::vector<double> analytic_curve(const ProductSpec& spec,
                                   const std::vector<double>& masses) {
  spec.validate(1);
  SeriesParams sp;
  double mass_scale = 1.0;
  int beta = spec.factors.front().beta;
  if (beta == 2) {
    sp.n = spec.factors.front().n;
    sp.gamma_sq_total = 1.0;
    for (const EnsembleSpec& f : spec.factors) {
      SingleParams s = f.single_params();
      sp.factors.push_back({s.kind, s.nu, s.exponent});
      sp.gamma_sq_total *= s.gamma_sq;
    }
  } else {
    if (spec.factors.size() != 1)
      throw ConfigError(
          "the beta = 1, 4 reduction is single-factor only; use beta = 2 for "
          "products");
    MappedSingle mapped = map_beta14(spec.factors.front().single_params());
    sp = mapped.params;
    mass_scale = mapped.mass_scale;
  }
  std::vector<double> out;
  out.reserve(masses.size());
  for (double m : masses) out.push_back(product_series(sp, mass_scale * m));
  return out;
}

double joint_analytic_value(const ProductSpec& spec,
                            const std::vector<double>& masses,
                            const QuadratureConfig& quad) {
  if (masses.empty()) throw ConfigError("need at least one mass");
  if (masses.size() == 1) return analytic_curve(spec, masses).front();
  if (masses.size() > 2)
    throw UnsupportedMassCount(
        "closed forms are implemented for one or two masses");
  spec.validate(static_cast<int>(masses.size()));
  if (spec.factors.size() != 1)
    throw UnsupportedMassCount(
        "the two-mass closed form covers a single factor only");
  SingleParams p = spec.factors.front().single_params();
  if (p.beta != 2)
    throw UnsupportedMassCount(
        "the two-mass closed form is implemented for beta = 2 only");
  return cbe2_quadrature(DysonIndex::of(p.beta).beta_tilde, p, masses[0],
                         masses[1], quad)
      .real();
}

RunOutcome run_experiment(const ExperimentConfig& cfg) {
  if (cfg.command != Command::HardEdge) cfg.product.validate();
  switch (cfg.command) {
    case Command::Sample: return run_sample(cfg);
    case Command::Estimate: return run_estimate(cfg);
    case Command::Analytic: return run_analytic(cfg);
    case Command::Compare: return run_compare(cfg);
    case Command::HardEdge: return run_hard_edge(cfg);
    case Command::Quadrature: return run_quadrature(cfg);
  }
  throw ConfigError("unknown command");
}

}  // namespace rmt
