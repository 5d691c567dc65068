#include "rmt/series.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "rmt/dyson.hpp"
#include "rmt/errors.hpp"

namespace rmt {

const char* ensemble_kind_name(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::WishartLaguerre: return "wishart-laguerre";
    case EnsembleKind::CauchyLorentz: return "cauchy-lorentz";
    case EnsembleKind::Jacobi: return "jacobi";
  }
  return "?";
}

EnsembleKind ensemble_kind_from_name(const std::string& s) {
  if (s == "wishart-laguerre") return EnsembleKind::WishartLaguerre;
  if (s == "cauchy-lorentz") return EnsembleKind::CauchyLorentz;
  if (s == "jacobi") return EnsembleKind::Jacobi;
  throw ConfigError("unknown ensemble kind: " + s);
}

namespace {

std::vector<SeriesFactor> canonical_factors(const SeriesParams& params) {
  std::vector<SeriesFactor> fs = params.factors;
  if (params.nu_convention == NuConvention::Uniform)
    for (auto& f : fs) f.nu = params.uniform_nu;
  std::sort(fs.begin(), fs.end(), [](const SeriesFactor& a,
                                     const SeriesFactor& b) {
    return std::make_tuple(static_cast<int>(a.kind), a.nu, a.exponent) <
           std::make_tuple(static_cast<int>(b.kind), b.nu, b.exponent);
  });
  return fs;
}

SignedLog series_term(const std::vector<SeriesFactor>& fs, int n, double log_m,
                      int mass_sign, double log_g2, int j) {
  SignedLog t = SignedLog::one();
  if (j > 0) {
    int s = (mass_sign < 0 || (j & 1) == 0) ? 1 : -1;  // sign of (-m)^j
    t = t * SignedLog{j * (log_m - log_g2), s};
  }
  t = t * recip_gamma(j + 1.0);
  t = t * recip_gamma(n - j + 1.0);
  for (const auto& f : fs) {
    t = t * recip_gamma(f.nu + j + 1.0);
    if (f.kind == EnsembleKind::Jacobi)
      t = t * gamma_signed(n + f.exponent + f.nu + j + 1.0);
    else if (f.kind == EnsembleKind::CauchyLorentz)
      t = t * recip_gamma(f.exponent - n - f.nu - j);
  }
  return t;
}

}  // namespace

SignedLog product_series_scaled(const SeriesParams& params, double m) {
  if (params.n < 1) throw ConfigError("series needs n >= 1");
  if (params.factors.empty()) throw ConfigError("series needs >= 1 factor");
  if (params.gamma_sq_total <= 0.0)
    throw ConfigError("series needs a positive scale");
  std::vector<SeriesFactor> fs = canonical_factors(params);
  for (const auto& f : fs)
    if (f.nu < 0.0) throw ConfigError("series needs nu >= 0");

  double log_g2 = std::log(params.gamma_sq_total);
  int mass_sign = m > 0 ? 1 : (m < 0 ? -1 : 0);
  double log_m = mass_sign == 0 ? 0.0 : std::log(std::fabs(m));

  std::vector<SignedLog> terms;
  terms.reserve(params.n + 1);
  int j_max = mass_sign == 0 ? 0 : params.n;  // only j = 0 survives at m = 0
  for (int j = 0; j <= j_max; ++j)
    terms.push_back(series_term(fs, params.n, log_m, mass_sign, log_g2, j));
  return signed_log_sum(terms);
}

double product_series(const SeriesParams& params, double m) {
  return product_series_scaled(params, m).value();
}

SeriesParams laguerre_series_params(int n, double nu, double gamma_sq) {
  return {n, {{EnsembleKind::WishartLaguerre, nu, 0.0}}, gamma_sq,
          NuConvention::PerFactor, 0.0};
}

SeriesParams cauchy_series_params(int n, double nu, double mu,
                                  double gamma_sq) {
  return {n, {{EnsembleKind::CauchyLorentz, nu, mu}}, gamma_sq,
          NuConvention::PerFactor, 0.0};
}

SeriesParams jacobi_series_params(int n, double nu, double kappa,
                                  double gamma_sq) {
  return {n, {{EnsembleKind::Jacobi, nu, kappa}}, gamma_sq,
          NuConvention::PerFactor, 0.0};
}

double laguerre_series(int n, double nu, double gamma_sq, double m) {
  return product_series(laguerre_series_params(n, nu, gamma_sq), m);
}

double cl_series(int n, double nu, double mu, double gamma_sq, double m) {
  return product_series(cauchy_series_params(n, nu, mu, gamma_sq), m);
}

double jacobi_series(int n, double nu, double kappa, double gamma_sq,
                     double m) {
  return product_series(jacobi_series_params(n, nu, kappa, gamma_sq), m);
}

MappedSingle map_beta14(const SingleParams& p) {
  DysonIndex d = DysonIndex::of(p.beta);
  double gt = d.gamma_tilde;
  double g = d.gamma;
  MappedSingle out;
  out.params.n = p.n;
  out.params.gamma_sq_total = p.gamma_sq;
  SeriesFactor f{p.kind, p.nu, 0.0};
  switch (p.kind) {
    case EnsembleKind::WishartLaguerre:
      out.mass_scale = gt;
      break;
    case EnsembleKind::CauchyLorentz:
      f.exponent = gt * p.exponent - gt / g + 1.0;
      break;
    case EnsembleKind::Jacobi:
      f.exponent = gt * p.exponent + gt / g - 1.0;
      break;
  }
  out.params.factors.push_back(f);
  return out;
}

}  // namespace rmt
