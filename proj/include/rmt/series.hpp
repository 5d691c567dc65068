#pragma once

#include <string>
#include <vector>

#include "rmt/special.hpp"

namespace rmt {

enum class EnsembleKind { WishartLaguerre, CauchyLorentz, Jacobi };

const char* ensemble_kind_name(EnsembleKind k);
EnsembleKind ensemble_kind_from_name(const std::string& s);

// One factor of a matrix-product ensemble, reduced to the parameters that
// enter the finite mass series:
//   WishartLaguerre  exponent unused
//   CauchyLorentz    exponent = mu   (tail decay)
//   Jacobi           exponent = kappa (truncation surplus)
struct SeriesFactor {
  EnsembleKind kind = EnsembleKind::WishartLaguerre;
  double nu = 0.0;
  double exponent = 0.0;
};

// PerFactor: every factor contributes its own nu to the term denominators.
// Uniform: all factors share `uniform_nu` (the per-factor values are ignored).
enum class NuConvention { PerFactor, Uniform };

struct SeriesParams {
  int n = 1;
  std::vector<SeriesFactor> factors;
  double gamma_sq_total = 1.0;  // product of the squared factor scales
  NuConvention nu_convention = NuConvention::PerFactor;
  double uniform_nu = 0.0;
};

// Finite series for the mean characteristic polynomial of the product, up to
// an m-independent constant:
//
//   S(m) = sum_{j=0}^{n} (-m / G2)^j / (j! (n-j)!)
//          * prod_a 1/(nu_a + j)!
//          * prod_{Jacobi a}  Gamma(n + kappa_a + nu_a + j + 1)
//          * prod_{Cauchy a}  1 / Gamma(mu_a - n - nu_a - j)
//
// with G2 = gamma_sq_total.  Factors are evaluated in a canonical order so
// the result is bitwise independent of the order they were listed in.
SignedLog product_series_scaled(const SeriesParams& params, double m);
double product_series(const SeriesParams& params, double m);

SeriesParams laguerre_series_params(int n, double nu, double gamma_sq = 1.0);
SeriesParams cauchy_series_params(int n, double nu, double mu,
                                  double gamma_sq = 1.0);
SeriesParams jacobi_series_params(int n, double nu, double kappa,
                                  double gamma_sq = 1.0);

// Single-factor series values (the product series with one factor).
double laguerre_series(int n, double nu, double gamma_sq, double m);
double cl_series(int n, double nu, double mu, double gamma_sq, double m);
double jacobi_series(int n, double nu, double kappa, double gamma_sq,
                     double m);

// Single-factor ensemble over any of the three division algebras.
struct SingleParams {
  int beta = 2;
  EnsembleKind kind = EnsembleKind::WishartLaguerre;
  int n = 1;
  double nu = 0.0;
  double exponent = 0.0;  // mu or kappa; unused for the Gaussian kind
  double gamma_sq = 1.0;
};

// Reduction of the beta = 1, 4 mean characteristic polynomial to the beta = 2
// series form: evaluate `params` at mass (mass_scale * m).  The parameter maps
// (with gt = 2, 1, 1 and g = 1, 1, 2 for beta = 1, 2, 4):
//   WishartLaguerre mass_scale = gt
//   CauchyLorentz   mu    -> gt * mu    - gt / g + 1
//   Jacobi          kappa -> gt * kappa + gt / g - 1
struct MappedSingle {
  SeriesParams params;
  double mass_scale = 1.0;
};

MappedSingle map_beta14(const SingleParams& p);

}  // namespace rmt
