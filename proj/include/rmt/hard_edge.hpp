#pragma once

#include <vector>

#include "rmt/series.hpp"

namespace rmt {

// Small-eigenvalue limit function of an L-factor product,
//   f(x) = sum_{j >= 0} (-x)^j / (j! * prod_a (nu_a + j)!),
// truncated once a term drops below 1e-16 of the running scale.  For a single
// nu this is x^{-nu/2} J_nu(2 sqrt(x)); f(0) = 1 / prod_a nu_a!.
// Throws NonConvergent if 10^4 terms do not reach the tolerance.
double hard_edge_limit(const std::vector<double>& nu_list, double x);

struct HardEdgeRow {
  int n = 0;
  double sup_distance = 0.0;
};

// Convergence scan of the finite-n series towards hard_edge_limit.
//
// `hatted` carries size-independent factor data: each CauchyLorentz exponent
// is read as mu_hat = mu/n - 1 (> 0) and each Jacobi exponent as
// kappa_hat = kappa/n + 1 (> 0).  For every n in `n_list` the actual series
// parameters are mu = n*(mu_hat + 1), kappa = n*(kappa_hat - 1), and the
// series is evaluated at the rescaled argument
//   m(x) = gamma_sq_total * x / (n * prod_CL(n*mu_hat) * prod_J(n*kappa_hat)).
// Both the series and the limit are normalized by their x = 0 value; the row
// records the sup-distance over `x_grid`.
std::vector<HardEdgeRow> hard_edge_scan(const SeriesParams& hatted,
                                        const std::vector<int>& n_list,
                                        const std::vector<double>& x_grid);

}  // namespace rmt
