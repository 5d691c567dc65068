#include <cmath>
#include <vector>

#include "doctest.h"
#include "rmt/charpoly.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/haar.hpp"
#include "test_util.hpp"

using namespace rmt;

namespace {

EnsembleSpec wl_spec(int beta, int n, int nu, double gamma = 1.0) {
  EnsembleSpec s;
  s.kind = EnsembleKind::WishartLaguerre;
  s.beta = beta;
  s.n = n;
  s.nu = nu;
  s.gamma_scale = gamma;
  return s;
}

EnsembleSpec cl_spec(int beta, int n, int nu, double mu, double gamma = 1.0) {
  EnsembleSpec s;
  s.kind = EnsembleKind::CauchyLorentz;
  s.beta = beta;
  s.n = n;
  s.nu = nu;
  s.mu = mu;
  s.gamma_scale = gamma;
  return s;
}

EnsembleSpec j_spec(int beta, int n, int nu, double kappa, double gamma = 1.0) {
  EnsembleSpec s;
  s.kind = EnsembleKind::Jacobi;
  s.beta = beta;
  s.n = n;
  s.nu = nu;
  s.kappa = kappa;
  s.gamma_scale = gamma;
  return s;
}

double single_eigenvalue(const FieldMatrix& w) {
  SpectrumWithMultiplicity s = gram_spectrum(w);
  if (s.beta == 4 && !s.kramers_collapsed) s = collapse_kramers(s);
  REQUIRE(s.values.size() == 1);
  return s.values[0];
}

McmcConfig fast_chain() {
  McmcConfig cfg;
  cfg.burn_in = 3000;
  cfg.thinning = 5;
  return cfg;
}

}  // namespace

TEST_CASE("Gaussian n = 1 eigenvalue means per division algebra") {
  const double g = 1.3, g2 = g * g;
  const double expected[] = {0.5 * g2, g2, g2};
  int idx = 0;
  RngState rng(1001);
  for (int beta : {1, 2, 4}) {
    EnsembleSpec spec = wl_spec(beta, 1, 0, g);
    std::vector<double> xs;
    for (int i = 0; i < 20000; ++i)
      xs.push_back(single_eigenvalue(sample_wishart_laguerre(spec, rng)));
    rmt_test::MeanErr m = rmt_test::iid_mean(xs);
    CHECK(std::fabs(m.mean - expected[idx]) < 5.0 * m.std_err);
    ++idx;
  }
}

TEST_CASE("truncation sizes follow the integer-surplus dictionary") {
  CHECK(jacobi_haar_size(j_spec(2, 1, 0, 6.0)).value() == 8);
  CHECK(jacobi_haar_size(j_spec(1, 1, 0, 2.5)).value() == 8);
  CHECK(jacobi_haar_size(j_spec(4, 1, 1, 2.5)).value() == 5);
  CHECK(jacobi_haar_size(j_spec(4, 1, 0, 0.5)).value() == 2);
  CHECK_FALSE(jacobi_haar_size(j_spec(4, 1, 1, 1.75)).has_value());
  CHECK_FALSE(jacobi_haar_size(j_spec(1, 1, 0, 2.4)).has_value());
  CHECK_FALSE(jacobi_haar_size(j_spec(4, 2, 0, 0.25)).has_value());
  RngState rng(1);
  CHECK_THROWS_AS(sample_jacobi(j_spec(4, 1, 1, 1.75), rng),
                  UnrealizableParameters);
}

TEST_CASE("unitary truncation reproduces its exact spectral law") {
  // beta = 2, n = 1, nu = 0, kappa = 6: lambda ~ Beta(1, 7).
  RngState rng(2002);
  EnsembleSpec spec = j_spec(2, 1, 0, 6.0);
  std::vector<double> xs;
  for (int i = 0; i < 10000; ++i)
    xs.push_back(single_eigenvalue(sample_jacobi(spec, rng)));
  double d = rmt_test::ks_statistic(
      xs, [](double x) { return 1.0 - std::pow(1.0 - x, 7.0); });
  CHECK(d * std::sqrt(10000.0) < 1.628);  // 1% critical value
}

TEST_CASE("orthogonal and symplectic truncations land on their Beta means") {
  RngState rng(2003);
  // beta = 1: lambda ~ Beta(1/2, 7/2), mean 1/8.
  EnsembleSpec o = j_spec(1, 1, 0, 2.5);
  std::vector<double> xs;
  for (int i = 0; i < 10000; ++i)
    xs.push_back(single_eigenvalue(sample_jacobi(o, rng)));
  rmt_test::MeanErr m1 = rmt_test::iid_mean(xs);
  CHECK(std::fabs(m1.mean - 0.125) < 5.0 * m1.std_err);

  // beta = 4, nu = 1, kappa = 2.5 -> N_H = 5: lambda ~ Beta(4, 6), mean 0.4.
  EnsembleSpec s = j_spec(4, 1, 1, 2.5);
  xs.clear();
  for (int i = 0; i < 10000; ++i)
    xs.push_back(single_eigenvalue(sample_jacobi(s, rng)));
  rmt_test::MeanErr m4 = rmt_test::iid_mean(xs);
  CHECK(std::fabs(m4.mean - 0.4) < 5.0 * m4.std_err);
}

TEST_CASE("heavy-tail chains hit their exact n = 1 moments") {
  struct Case {
    int beta, nu;
    double mu, expected;
  };
  // E lambda for the density lambda^p (1 + lambda)^{-q} with
  // (p, q) = ((nu-1)/2, mu), (nu, mu), (2 nu + 1, 2 mu) for beta = 1, 2, 4.
  const Case cases[] = {
      {2, 0, 3.0, 1.0},
      {2, 1, 4.0, 2.0},
      {1, 0, 3.0, 1.0 / 3.0},
      {4, 0, 3.0, 2.0 / 3.0},
  };
  for (const Case& c : cases) {
    EnsembleSpec spec = cl_spec(c.beta, 1, c.nu, c.mu);
    MetropolisMatrixChain chain(spec, fast_chain(), 4000 + c.beta);
    std::vector<double> xs;
    for (int i = 0; i < 8000; ++i)
      xs.push_back(single_eigenvalue(chain.next()));
    rmt_test::MeanErr m = rmt_test::batch_means(xs, 80);
    CHECK(std::fabs(m.mean - c.expected) < 5.0 * m.std_err);
    CHECK(chain.acceptance_rate() > 0.1);
    CHECK(chain.acceptance_rate() < 0.6);
  }
}

TEST_CASE("chains and samplers are bitwise deterministic in the seed") {
  EnsembleSpec spec = cl_spec(2, 2, 1, 8.0);
  McmcConfig cfg = fast_chain();
  MetropolisMatrixChain a(spec, cfg, 5);
  MetropolisMatrixChain b(spec, cfg, 5);
  CHECK(a.next().rep() == b.next().rep());
  McmcConfig other = cfg;
  other.chain_stream = 1;
  MetropolisMatrixChain c(spec, other, 5);
  CHECK(a.next().rep() != c.next().rep());
}

TEST_CASE("chain samples keep field structure and stay on support") {
  McmcConfig cfg = fast_chain();
  cfg.burn_in = 500;
  for (int beta : {1, 2, 4}) {
    EnsembleSpec jac = j_spec(beta, 2, 1, 2.3, 1.4);  // non-integer surplus
    if (jacobi_haar_size(jac)) continue;  // want the chain path
    MetropolisMatrixChain chain(jac, cfg, 17);
    for (int i = 0; i < 50; ++i) {
      FieldMatrix w = chain.next();
      CHECK(validate_symmetry(w));
      SpectrumWithMultiplicity s = gram_spectrum(w);
      for (double v : s.values) {
        CHECK(v >= -1e-9);
        CHECK(v <= 1.4 * 1.4 + 1e-9);
      }
    }
  }
}

TEST_CASE("the Gaussian kind has no chain and the bounds guard tails") {
  CHECK_THROWS_AS(MetropolisMatrixChain(wl_spec(2, 2, 0), McmcConfig{}, 1),
                  ConfigError);
  CHECK(cl_mu_bound(2, 1, 0, 1) == doctest::Approx(3.0));
  CHECK(cl_mu_bound(1, 1, 0, 1) == doctest::Approx(1.5));
  CHECK(cl_mu_bound(4, 1, 0, 1) == doctest::Approx(2.0));
  EnsembleSpec tight = cl_spec(2, 1, 0, 2.9);
  CHECK_NOTHROW(tight.validate(0));
  CHECK_THROWS_AS(tight.validate(1), ConfigError);
  EnsembleSpec shallow = j_spec(2, 1, 0, -0.6);
  CHECK_THROWS_AS(shallow.validate(0), ConfigError);
}

TEST_CASE("a single-factor product passes the rectangle through untouched") {
  RngState rng(31);
  FieldMatrix w = gaussian_matrix(Field::Complex, 2, 5, rng);
  RngState rot(77);
  FieldMatrix p = product_of_factors({w}, rot);
  CHECK(p.rep() == w.rep());
  CHECK(p.cols() == 5);
}

TEST_CASE("square factors multiply directly") {
  ProductSpec spec;
  spec.factors = {wl_spec(2, 3, 0), wl_spec(2, 3, 0)};
  ProductSampler sampler(spec, McmcConfig{}, 99);
  ProductSample s = sampler.next();
  REQUIRE(s.factors.size() == 2);
  CHECK(s.product.rep() == (s.factors[0] * s.factors[1]).rep());
}

TEST_CASE("rectangular factors contribute their full Gram determinant") {
  // E det of the product Gram = prod_a (n + nu_a)! / nu_a! for unit-scale
  // Gaussian factors over the complex field: here 2 * 6 = 12.
  ProductSpec spec;
  spec.factors = {wl_spec(2, 2, 0), wl_spec(2, 2, 1)};
  EstimatorConfig cfg;
  cfg.n_samples = 40000;
  cfg.seed = 561;
  Estimate e = estimate_Z(spec, {0.0}, cfg);
  CHECK(std::fabs(e.value - 12.0) < 5.0 * e.std_err);
}

TEST_CASE("product construction rejects mismatched factors") {
  ProductSpec bad;
  bad.factors = {wl_spec(2, 2, 0), wl_spec(2, 3, 0)};
  CHECK_THROWS_AS(bad.validate(0), ConfigError);
  bad.factors = {wl_spec(2, 2, 0), wl_spec(4, 2, 0)};
  CHECK_THROWS_AS(bad.validate(0), ConfigError);

  RngState rng(1);
  FieldMatrix a = gaussian_matrix(Field::Complex, 2, 3, rng);
  FieldMatrix b = gaussian_matrix(Field::Real, 2, 2, rng);
  RngState rot(2);
  std::vector<FieldMatrix> fs = {a, b};
  CHECK_THROWS_AS(product_of_factors(fs, rot), DimensionMismatch);
  FieldMatrix thin = gaussian_matrix(Field::Complex, 3, 2, rng);
  fs = {thin, thin};
  CHECK_THROWS_AS(product_of_factors(fs, rot), DimensionMismatch);
}

TEST_CASE("product sampling is deterministic and supports chain factors") {
  ProductSpec spec;
  spec.factors = {wl_spec(2, 1, 1), cl_spec(2, 1, 0, 6.0)};
  McmcConfig cfg = fast_chain();
  cfg.burn_in = 300;
  ProductSampler s1(spec, cfg, 7), s2(spec, cfg, 7);
  ProductSample a = s1.next(), b = s2.next();
  CHECK(a.product.rep() == b.product.rep());
  CHECK(validate_symmetry(a.product));

  RngState rng(8);
  ProductSample c = sample_product(spec, rng, cfg);
  CHECK(validate_symmetry(c.product));
  CHECK(c.product.rows() == 1);
}

TEST_CASE("mixed product factors agree between sampler and one-shot paths") {
  EnsembleSpec spec = cl_spec(2, 1, 0, 6.0);
  RngState rng(12);
  FieldMatrix w = sample_cauchy_lorentz(spec, rng, fast_chain());
  CHECK(validate_symmetry(w));
  SpectrumWithMultiplicity s = gram_spectrum(w);
  CHECK(s.values.front() >= 0.0);
}
