#include "rmt/hard_edge.hpp"

#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {

double hard_edge_limit(const std::vector<double>& nu_list, double x) {
  if (x < 0.0) throw ConfigError("hard_edge_limit needs x >= 0");
  if (nu_list.empty()) throw ConfigError("hard_edge_limit needs >= 1 factor");
  for (double nu : nu_list)
    if (nu < 0.0) throw ConfigError("hard_edge_limit needs nu >= 0");

  double term = 1.0;
  for (double nu : nu_list) term /= std::tgamma(nu + 1.0);
  CompensatedSum sum;
  sum.add(term);
  double scale = std::fabs(term);
  for (int j = 1; j <= 10000; ++j) {
    term *= -x / j;
    for (double nu : nu_list) term /= nu + j;
    sum.add(term);
    scale = std::max(scale, std::fabs(sum.total()));
    if (std::fabs(term) < 1e-16 * scale) return sum.total();
  }
  throw NonConvergent("hard edge limit series did not converge");
}

namespace {

double normalized_exp_ratio(const SignedLog& value, const SignedLog& at_zero) {
  if (at_zero.is_zero()) throw DegenerateGrid("normalization point is zero");
  if (value.is_zero()) return 0.0;
  return value.sign * at_zero.sign * std::exp(value.log_abs - at_zero.log_abs);
}

}  // namespace

std::vector<HardEdgeRow> hard_edge_scan(const SeriesParams& hatted,
                                        const std::vector<int>& n_list,
                                        const std::vector<double>& x_grid) {
  if (n_list.empty()) throw ConfigError("scan needs >= 1 matrix size");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw ConfigError("scan sizes must be strictly ascending");
  if (n_list.front() < 1) throw ConfigError("scan sizes must be >= 1");
  if (x_grid.empty()) throw ConfigError("scan needs >= 1 grid point");

  std::vector<double> nus;
  for (const auto& f : hatted.factors)
    nus.push_back(hatted.nu_convention == NuConvention::Uniform
                      ? hatted.uniform_nu
                      : f.nu);

  double limit_zero = hard_edge_limit(nus, 0.0);
  std::vector<HardEdgeRow> rows;
  for (int n : n_list) {
    SeriesParams actual = hatted;
    actual.n = n;
    double scale = n;
    for (auto& f : actual.factors) {
      if (f.kind == EnsembleKind::CauchyLorentz) {
        if (f.exponent <= 0.0)
          throw ConfigError("scan needs positive scaled tail exponents");
        scale *= n * f.exponent;
        f.exponent = n * (f.exponent + 1.0);
      } else if (f.kind == EnsembleKind::Jacobi) {
        if (f.exponent <= 0.0)
          throw ConfigError("scan needs positive scaled truncation exponents");
        scale *= n * f.exponent;
        f.exponent = n * (f.exponent - 1.0);
      }
    }
    SignedLog at_zero = product_series_scaled(actual, 0.0);
    double sup = 0.0;
    for (double x : x_grid) {
      double m = hatted.gamma_sq_total * x / scale;
      double lhs = normalized_exp_ratio(product_series_scaled(actual, m),
                                        at_zero);
      double rhs = hard_edge_limit(nus, x) / limit_zero;
      sup = std::max(sup, std::fabs(lhs - rhs));
    }
    rows.push_back({n, sup});
  }
  return rows;
}

}  // namespace rmt
