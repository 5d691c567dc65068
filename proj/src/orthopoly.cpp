#include "rmt/orthopoly.hpp"

#include "rmt/errors.hpp"

namespace rmt {

double jacobi_polynomial(int n, double a, double b, double x) {
  if (n < 0) throw ConfigError("polynomial degree must be >= 0");
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
  for (int k = 2; k <= n; ++k) {
    double s = 2.0 * k + a + b;
    double num = (s - 1.0) * ((s * (s - 2.0)) * x + a * a - b * b) * p1 -
                 2.0 * (k + a - 1.0) * (k + b - 1.0) * s * p0;
    double den = 2.0 * k * (k + a + b) * (s - 2.0);
    p0 = p1;
    p1 = num / den;
  }
  return p1;
}

double monic_laguerre(int k, double nu, double gamma_sq, double x) {
  if (k < 0) throw ConfigError("polynomial degree must be >= 0");
  double p0 = 1.0;
  if (k == 0) return p0;
  double p1 = x - gamma_sq * (nu + 1.0);
  for (int j = 1; j < k; ++j) {
    double bj = gamma_sq * (2.0 * j + nu + 1.0);
    double cj = gamma_sq * gamma_sq * j * (j + nu);
    double next = (x - bj) * p1 - cj * p0;
    p0 = p1;
    p1 = next;
  }
  return p1;
}

double laguerre_cd_kernel(int n, double nu, double gamma_sq, double x,
                          double y) {
  if (x == y) throw CoincidentMasses("kernel arguments must differ");
  double pnx = monic_laguerre(n, nu, gamma_sq, x);
  double pny = monic_laguerre(n, nu, gamma_sq, y);
  double qx = monic_laguerre(n + 1, nu, gamma_sq, x);
  double qy = monic_laguerre(n + 1, nu, gamma_sq, y);
  return (qx * pny - qy * pnx) / (x - y);
}

}  // namespace rmt
