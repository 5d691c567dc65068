#include "rmt/charpoly.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "rmt/errors.hpp"
#include "rmt/special.hpp"

namespace rmt {

namespace {

const std::vector<double>& collapsed_values(
    const SpectrumWithMultiplicity& spectrum,
    SpectrumWithMultiplicity& storage) {
  if (spectrum.beta == 4 && !spectrum.kramers_collapsed) {
    storage = collapse_kramers(spectrum);
    return storage.values;
  }
  return spectrum.values;
}

double eval_one_mass(const std::vector<double>& values, double m) {
  double p = 1.0;
  for (double lambda : values) p *= lambda - m;
  return p;
}

}  // namespace

double char_poly_observable(const SpectrumWithMultiplicity& spectrum,
                            const std::vector<double>& masses) {
  if (masses.empty()) throw ConfigError("need at least one mass");
  SpectrumWithMultiplicity storage;
  const std::vector<double>& values = collapsed_values(spectrum, storage);
  double p = 1.0;
  for (double m : masses) p *= eval_one_mass(values, m);
  return p;
}

std::complex<double> char_poly_observable(
    const SpectrumWithMultiplicity& spectrum,
    const std::vector<std::complex<double>>& masses) {
  if (masses.empty()) throw ConfigError("need at least one mass");
  SpectrumWithMultiplicity storage;
  const std::vector<double>& values = collapsed_values(spectrum, storage);
  std::complex<double> p = 1.0;
  for (const auto& m : masses) {
    std::complex<double> q = 1.0;
    for (double lambda : values) q *= lambda - m;
    p *= q;
  }
  return p;
}

namespace {

// Shared shard engine.  Each shard owns an independently seeded sampler;
// shard partial sums are combined in shard order so a run is a pure
// function of (spec, grid, cfg).
struct Accumulated {
  long long count = 0;
  std::vector<double> sum;          // per point
  Eigen::MatrixXd cross;            // sum of v_i v_j
};

Accumulated run_shards(
    const ProductSpec& spec, std::size_t n_points, const EstimatorConfig& cfg,
    const std::function<void(const std::vector<double>&, std::vector<double>&)>&
        evaluate) {
  if (cfg.n_samples < 1) throw ConfigError("need n_samples >= 1");
  if (cfg.shards < 1) throw ConfigError("need shards >= 1");
  if (cfg.shards > cfg.n_samples)
    throw ConfigError("more shards than samples");

  const auto p = static_cast<Eigen::Index>(n_points);
  Accumulated total;
  total.sum.assign(n_points, 0.0);
  total.cross = Eigen::MatrixXd::Zero(p, p);

  std::vector<double> row(n_points);
  for (int shard = 0; shard < cfg.shards; ++shard) {
    long long quota = cfg.n_samples / cfg.shards +
                      (shard < cfg.n_samples % cfg.shards ? 1 : 0);
    ProductSampler sampler(spec, cfg.mcmc, derive_seed(cfg.seed, shard));
    std::vector<CompensatedSum> sum(n_points);
    std::vector<CompensatedSum> cross(n_points * n_points);
    for (long long s = 0; s < quota; ++s) {
      ProductSample sample = sampler.next();
      SpectrumWithMultiplicity spectrum = gram_spectrum(sample.product);
      if (spectrum.beta == 4 && !spectrum.kramers_collapsed)
        spectrum = collapse_kramers(spectrum);
      evaluate(spectrum.values, row);
      for (std::size_t i = 0; i < n_points; ++i) {
        sum[i].add(row[i]);
        for (std::size_t j = i; j < n_points; ++j)
          cross[i * n_points + j].add(row[i] * row[j]);
      }
    }
    total.count += quota;
    for (std::size_t i = 0; i < n_points; ++i) {
      total.sum[i] += sum[i].total();
      for (std::size_t j = i; j < n_points; ++j)
        total.cross(static_cast<Eigen::Index>(i),
                    static_cast<Eigen::Index>(j)) +=
            cross[i * n_points + j].total();
    }
  }
  for (Eigen::Index i = 0; i < p; ++i)
    for (Eigen::Index j = 0; j < i; ++j) total.cross(i, j) = total.cross(j, i);
  return total;
}

CurveEstimate finish(const Accumulated& acc, const std::vector<double>& grid,
                     const EstimatorConfig& cfg) {
  const auto p = static_cast<Eigen::Index>(grid.size());
  const double n = static_cast<double>(acc.count);
  CurveEstimate out;
  out.masses = grid;
  out.mean_covariance = Eigen::MatrixXd::Zero(p, p);
  Eigen::VectorXd mean(p);
  for (Eigen::Index i = 0; i < p; ++i)
    mean(i) = acc.sum[static_cast<std::size_t>(i)] / n;
  if (acc.count > 1) {
    for (Eigen::Index i = 0; i < p; ++i)
      for (Eigen::Index j = 0; j < p; ++j)
        out.mean_covariance(i, j) =
            (acc.cross(i, j) - n * mean(i) * mean(j)) / (n - 1.0) / n;
  }
  out.points.reserve(grid.size());
  for (Eigen::Index i = 0; i < p; ++i) {
    Estimate e;
    e.value = mean(i);
    e.std_err = std::sqrt(std::max(0.0, out.mean_covariance(i, i)));
    e.n_samples = acc.count;
    e.seed = cfg.seed;
    out.points.push_back(e);
  }
  return out;
}

}  // namespace

Estimate estimate_Z(const ProductSpec& spec, const std::vector<double>& masses,
                    const EstimatorConfig& cfg) {
  if (masses.empty()) throw ConfigError("need at least one mass");
  spec.validate(static_cast<int>(masses.size()));
  Accumulated acc = run_shards(
      spec, 1, cfg,
      [&masses](const std::vector<double>& values, std::vector<double>& row) {
        double p = 1.0;
        for (double m : masses) p *= eval_one_mass(values, m);
        row[0] = p;
      });
  return finish(acc, {0.0}, cfg).points.front();
}

Estimate estimate_Z(const EnsembleSpec& spec,
                    const std::vector<double>& masses,
                    const EstimatorConfig& cfg) {
  return estimate_Z(ProductSpec{{spec}}, masses, cfg);
}

CurveEstimate estimate_Z_curve(const ProductSpec& spec,
                               const std::vector<double>& mass_grid,
                               const EstimatorConfig& cfg) {
  if (mass_grid.empty()) throw ConfigError("need at least one grid point");
  spec.validate(1);
  Accumulated acc = run_shards(
      spec, mass_grid.size(), cfg,
      [&mass_grid](const std::vector<double>& values,
                   std::vector<double>& row) {
        for (std::size_t g = 0; g < mass_grid.size(); ++g)
          row[g] = eval_one_mass(values, mass_grid[g]);
      });
  return finish(acc, mass_grid, cfg);
}

CurveEstimate estimate_Z_curve(const EnsembleSpec& spec,
                               const std::vector<double>& mass_grid,
                               const EstimatorConfig& cfg) {
  return estimate_Z_curve(ProductSpec{{spec}}, mass_grid, cfg);
}

RatioTestResult ratio_constancy_test(const CurveEstimate& mc,
                                     const std::vector<double>& analytic) {
  if (mc.points.size() != analytic.size() || analytic.empty())
    throw ConfigError("grid size mismatch between estimate and reference");
  const std::size_t g = analytic.size();
  std::vector<double> ratio(g), sigma(g);
  for (std::size_t i = 0; i < g; ++i) {
    if (std::fabs(analytic[i]) < 1e-12)
      throw DegenerateGrid(
          "reference value too close to zero for a ratio test at grid index " +
          std::to_string(i));
    ratio[i] = mc.points[i].value / analytic[i];
    sigma[i] = std::max(mc.points[i].std_err / std::fabs(analytic[i]), 1e-300);
  }
  double wsum = 0.0, rsum = 0.0;
  for (std::size_t i = 0; i < g; ++i) {
    double w = 1.0 / (sigma[i] * sigma[i]);
    wsum += w;
    rsum += w * ratio[i];
  }
  RatioTestResult out;
  out.ratio = rsum / wsum;
  for (std::size_t i = 0; i < g; ++i)
    out.max_deviation_sigmas = std::max(
        out.max_deviation_sigmas, std::fabs(ratio[i] - out.ratio) / sigma[i]);
  out.pass = out.max_deviation_sigmas <= 3.0;
  return out;
}

double leading_coefficient_ratio(double value,
                                 const std::vector<double>& masses, int n) {
  double lead = 1.0;
  for (double m : masses) lead *= std::pow(-m, n);
  if (lead == 0.0) throw DegenerateGrid("zero mass has no leading term");
  return value / lead;
}

}  // namespace rmt
