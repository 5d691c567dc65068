#pragma once

namespace rmt {

// Classical Jacobi polynomial P_n^{(a,b)}(x) by its three-term recurrence.
double jacobi_polynomial(int n, double a, double b, double x);

// Monic generalized-Laguerre polynomial p_k for the weight
// x^nu exp(-x / gamma_sq) on (0, inf), by the monic recurrence
//   p_{k+1}(x) = (x - b_k) p_k(x) - c_k p_{k-1}(x)
//   b_k = gamma_sq * (2k + nu + 1),  c_k = gamma_sq^2 * k * (k + nu).
double monic_laguerre(int k, double nu, double gamma_sq, double x);

// Christoffel-Darboux combination of consecutive monic polynomials,
//   [p_{n+1}(x) p_n(y) - p_{n+1}(y) p_n(x)] / (x - y).
double laguerre_cd_kernel(int n, double nu, double gamma_sq, double x,
                          double y);

}  // namespace rmt
