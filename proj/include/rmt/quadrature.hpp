#pragma once

#include <complex>

#include "rmt/series.hpp"

namespace rmt {

struct QuadratureConfig {
  int nodes = 256;      // trapezoid points per angle; >= 16
  double radius = 1.0;  // contour radius (single-mass rule only)
  // WishartLaguerre only: replace `radius` by max(1, sqrt((n+nu+1) G^2 |m|)),
  // which tracks the integrand's saddle and keeps the enclosed cancellation
  // small enough for ~1e-12 relative accuracy at large n*m.
  bool auto_radius = false;
};

// Single-mass circle rule
//   (1/N) sum_k f(z_k) z_k,   z_k = r exp(2 pi i k / N),
// for f(z) = z^{-(n+nu+1)} (z - m)^n w(z) with the kind-specific weight
//   WishartLaguerre  w(z) = exp(z / G^2)
//   CauchyLorentz    w(z) = (G^2 + z)^{mu - n - 1}
//   Jacobi           w(z) = (G^2 - z)^{-(n + kappa + 1)}
// (G^2 = p.gamma_sq).  Exact for the residue at the origin once the node
// count resolves the integrand; the imaginary part is roundoff for real m.
// Requires p.beta == 2 (reduce other fields with map_beta14 first) and
// integer nu (the origin factor must be single-valued on the circle).
// Throws PoleOnContour when the radius reaches the weight singularity
// at |z| = G^2 for the CauchyLorentz and Jacobi kinds.
std::complex<double> contour_quadrature_k1(const SingleParams& p, double m,
                                           const QuadratureConfig& cfg);

// Two-mass, two-angle rule on the unit circle:
//   mean over node pairs of  |z1 - z2|^2 w2(z1) w2(z2) S(z1, z2) / (n+1)
// divided by the same rule with S set to 1, where
//   S = sum_{p=0}^{n} A^p B^{n-p},
//   A = (z1 - m1)(z2 - m2),  B = (z1 - m2)(z2 - m1),
// and the per-node weight carries the two-mass exponent shifts:
//   WishartLaguerre  w2(z) = z^{-(n+nu)} exp(z / G^2)
//   CauchyLorentz    w2(z) = z^{-(n+nu)} (G^2 + z)^{mu - n - 2}
//   Jacobi           w2(z) = z^{-(n+nu)} (G^2 - z)^{-(n + kappa + 2)}
// S is accumulated pairwise symmetrically, so swapping the masses returns a
// bitwise-identical value.  Only beta_tilde == 2 is implemented; 4 and 1
// (the beta = 1, 4 duals) are experimental and rejected.
std::complex<double> cbe2_quadrature(double beta_tilde, const SingleParams& p,
                                     double m1, double m2,
                                     const QuadratureConfig& cfg);

}  // namespace rmt
