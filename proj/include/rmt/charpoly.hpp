#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/spectrum.hpp"

namespace rmt {

// prod_a prod_i (lambda_i - m_a) over the collapsed spectrum.  A beta = 4
// spectrum that still carries its Kramers doubling is collapsed first, so
// every eigenvalue enters exactly once regardless of beta.
double char_poly_observable(const SpectrumWithMultiplicity& spectrum,
                            const std::vector<double>& masses);
std::complex<double> char_poly_observable(
    const SpectrumWithMultiplicity& spectrum,
    const std::vector<std::complex<double>>& masses);

// Monte Carlo estimate of one scalar average.
struct Estimate {
  double value = 0.0;
  double std_err = 0.0;
  long long n_samples = 0;
  std::uint64_t seed = 0;
};

struct EstimatorConfig {
  long long n_samples = 10000;
  int shards = 1;
  std::uint64_t seed = 1;
  McmcConfig mcmc;
};

// Average of the joint observable with all masses applied to each sample.
Estimate estimate_Z(const ProductSpec& spec, const std::vector<double>& masses,
                    const EstimatorConfig& cfg);
Estimate estimate_Z(const EnsembleSpec& spec,
                    const std::vector<double>& masses,
                    const EstimatorConfig& cfg);

// One single-mass average per grid point, evaluated on common random
// numbers: each sampled spectrum is reused across the whole grid, and the
// covariance of the resulting means is reported alongside the estimates.
struct CurveEstimate {
  std::vector<double> masses;
  std::vector<Estimate> points;
  Eigen::MatrixXd mean_covariance;  // covariance of the reported means
};

CurveEstimate estimate_Z_curve(const ProductSpec& spec,
                               const std::vector<double>& mass_grid,
                               const EstimatorConfig& cfg);
CurveEstimate estimate_Z_curve(const EnsembleSpec& spec,
                               const std::vector<double>& mass_grid,
                               const EstimatorConfig& cfg);

// Tests whether mc.points / analytic is constant across the grid within
// statistical error: the pointwise ratios are combined into an
// inverse-variance weighted mean and the largest deviation from it, in
// units of the pointwise standard error, must not exceed 3.
struct RatioTestResult {
  double ratio = 0.0;
  double max_deviation_sigmas = 0.0;
  bool pass = false;
};

RatioTestResult ratio_constancy_test(const CurveEstimate& mc,
                                     const std::vector<double>& analytic);

// Diagnostic: value / prod_a (-m_a)^n, which tends to 1 as the masses grow
// large compared to the spectrum.
double leading_coefficient_ratio(double value,
                                 const std::vector<double>& masses, int n);

}  // namespace rmt
