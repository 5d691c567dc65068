#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rmt/field_matrix.hpp"
#include "rmt/rng.hpp"
#include "rmt/series.hpp"
#include "rmt/spectrum.hpp"

namespace rmt {

struct McmcConfig {
  double step_scale = 0.5;  // initial random-walk step; adapted in burn-in
  long long burn_in = 10000;
  int thinning = 10;
  std::uint64_t chain_stream = 0;  // extra stream id mixed into chain seeds
};

// One matrix factor.  The matrix is rectangular n x (n+nu); its Gram matrix
// carries the induced det^{nu * gamma / 2} weight.  Densities:
//   WishartLaguerre  exp(-tr WW^dagger / G^2)            (trace in the rep)
//   CauchyLorentz    det^{-mu}(G^2 + WW^dagger)          (det in the rep)
//   Jacobi           det^{kappa}(G^2 - WW^dagger) on the contraction support
// with G = gamma_scale.
struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::WishartLaguerre;
  int beta = 2;
  int n = 1;
  int nu = 0;
  double gamma_scale = 1.0;
  double mu = 0.0;     // CauchyLorentz only
  double kappa = 0.0;  // Jacobi only

  double gamma_sq() const { return gamma_scale * gamma_scale; }
  Field field() const { return field_of_beta(beta); }

  // Throws ConfigError when the parameters are outside the validity region;
  // k_masses is the number of mass insertions the spec will be used with
  // (the CauchyLorentz moment-existence bound depends on it).
  void validate(int k_masses = 0) const;

  // Reduction inputs for the analytic side (complex-form series after the
  // beta = 1, 4 parameter maps).
  SingleParams single_params() const;
};

// Existence bound on the CauchyLorentz tail exponent with k mass insertions:
// mu > k/g + (2n+nu)/gt - (g*gt - 1)/2.
double cl_mu_bound(int beta, int n, int nu, int k_masses);

// Haar size N_H realizing the Jacobi density by truncation: the surplus
// kp = gt*kappa + gt/g - 1 must land on a non-negative integer (within 1e-9);
// then a Haar matrix of logical size N_H = 2n + nu + kp truncated to its
// top-left n x (n+nu) block and scaled by gamma_scale has exactly the Jacobi
// density.  Returns nullopt when kappa is not realizable this way.
std::optional<Eigen::Index> jacobi_haar_size(const EnsembleSpec& spec);

// Direct samplers.
FieldMatrix sample_wishart_laguerre(const EnsembleSpec& spec, RngState& rng);
// Truncation path only; throws UnrealizableParameters when jacobi_haar_size
// is empty (use the Metropolis chain for those parameters).
FieldMatrix sample_jacobi(const EnsembleSpec& spec, RngState& rng);

// Component-wise random-walk Metropolis over the independent real components
// of the rectangular matrix, targeting the CauchyLorentz or Jacobi density.
// The step size is tuned towards ~30% acceptance during burn-in and frozen
// afterwards.  Throws ChainDiverged if the log-density turns NaN/+inf.
class MetropolisMatrixChain {
 public:
  MetropolisMatrixChain(const EnsembleSpec& spec, const McmcConfig& cfg,
                        std::uint64_t seed);

  FieldMatrix next();  // advances `thinning` sweeps, returns the state
  double acceptance_rate() const;  // post-burn-in fraction
  double step_scale() const { return step_; }

 private:
  void sweep();
  double log_density(const Eigen::MatrixXcd& rep) const;

  EnsembleSpec spec_;
  McmcConfig cfg_;
  RngState rng_;
  Eigen::MatrixXcd rep_;
  double log_density_ = 0.0;
  double step_ = 0.5;
  long long accepted_ = 0, proposed_ = 0;  // post-burn-in counters
};

// One-shot chain draw (burn-in included; expensive — use the chain class for
// streams of samples).
FieldMatrix sample_cauchy_lorentz(const EnsembleSpec& spec, RngState& rng,
                                  const McmcConfig& cfg);

// Uniform streaming source for any kind: direct draws where a construction
// exists, a Metropolis chain otherwise.
class EnsembleSampler {
 public:
  EnsembleSampler(const EnsembleSpec& spec, const McmcConfig& cfg,
                  std::uint64_t seed);
  FieldMatrix next();
  const EnsembleSpec& spec() const { return spec_; }

 private:
  EnsembleSpec spec_;
  RngState rng_;
  std::optional<MetropolisMatrixChain> chain_;
};

struct ProductSpec {
  std::vector<EnsembleSpec> factors;
  void validate(int k_masses = 0) const;  // non-empty, shared (beta, n)
  int beta() const { return factors.front().beta; }
  int n() const { return factors.front().n; }
};

struct ProductSample {
  std::vector<FieldMatrix> factors;  // raw rectangular draws, spec order
  FieldMatrix product;               // left-to-right product of reductions
};

// Reduction + multiplication used on drawn factors: a single factor passes
// through unchanged; in longer products every rectangular factor W is
// replaced by the equal-law square factor (WW^dagger)^{1/2} U with U an
// independent Haar rotation (dropping U would change the product law).
FieldMatrix product_of_factors(const std::vector<FieldMatrix>& factors,
                               RngState& rng);

// Streaming sampler for a product: factor draws come from per-factor derived
// seed streams, reduction rotations from one more.
class ProductSampler {
 public:
  ProductSampler(const ProductSpec& spec, const McmcConfig& cfg,
                 std::uint64_t seed);
  ProductSample next();
  const ProductSpec& spec() const { return spec_; }

 private:
  ProductSpec spec_;
  std::vector<EnsembleSampler> samplers_;
  RngState rotation_rng_;
};

// One-shot product draw; chain-backed factors are seeded from `rng` and pay
// their burn-in on every call.
ProductSample sample_product(const ProductSpec& spec, RngState& rng,
                             const McmcConfig& cfg = {});

}  // namespace rmt
