#include "rmt/quadrature.hpp"

#include <cmath>
#include <vector>

#include "rmt/errors.hpp"

namespace rmt {

namespace {

using Complex = std::complex<double>;

Complex pow_uint(Complex z, long long e) {
  Complex r{1.0, 0.0};
  for (long long i = 0; i < e; ++i) r *= z;
  return r;
}

struct ComplexSum {
  CompensatedSum re, im;
  void add(Complex z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Complex total() const { return {re.total(), im.total()}; }
};

void check_common(const SingleParams& p, const QuadratureConfig& cfg) {
  if (p.beta != 2)
    throw ConfigError("quadrature implements the complex form; reduce other "
                      "beta values with map_beta14 first");
  if (p.n < 1) throw ConfigError("quadrature needs n >= 1");
  if (p.nu < 0.0 || p.nu != std::rint(p.nu))
    throw ConfigError("quadrature needs integer nu >= 0");
  if (p.gamma_sq <= 0.0) throw ConfigError("quadrature needs a positive scale");
  if (cfg.nodes < 16) throw ConfigError("quadrature needs >= 16 nodes");
}

void check_pole_distance(const SingleParams& p, double radius) {
  if (p.kind == EnsembleKind::WishartLaguerre) return;
  if (radius >= p.gamma_sq - 1e-6)
    throw PoleOnContour("contour radius reaches the weight singularity");
}

Complex weight_k1(const SingleParams& p, Complex z) {
  switch (p.kind) {
    case EnsembleKind::WishartLaguerre:
      return std::exp(z / p.gamma_sq);
    case EnsembleKind::CauchyLorentz:
      return std::pow(p.gamma_sq + z, p.exponent - p.n - 1.0);
    case EnsembleKind::Jacobi:
      return std::pow(p.gamma_sq - z, -(p.n + p.exponent + 1.0));
  }
  throw ConfigError("unknown ensemble kind");
}

}  // namespace

std::complex<double> contour_quadrature_k1(const SingleParams& p, double m,
                                           const QuadratureConfig& cfg) {
  check_common(p, cfg);
  double radius = cfg.radius;
  if (cfg.auto_radius && p.kind == EnsembleKind::WishartLaguerre)
    radius = std::max(1.0, std::sqrt((p.n + p.nu + 1.0) * p.gamma_sq *
                                     std::fabs(m)));
  if (radius <= 0.0) throw ConfigError("quadrature needs a positive radius");
  check_pole_distance(p, radius);

  long long origin_power = p.n + static_cast<long long>(p.nu) + 1;
  int nodes = cfg.nodes;
  ComplexSum acc;
  for (int k = 0; k < nodes; ++k) {
    double theta = 2.0 * M_PI * k / nodes;
    Complex z = radius * Complex{std::cos(theta), std::sin(theta)};
    Complex f = pow_uint(z - m, p.n) / pow_uint(z, origin_power);
    acc.add(f * weight_k1(p, z) * z);
  }
  return acc.total() / static_cast<double>(nodes);
}

std::complex<double> cbe2_quadrature(double beta_tilde, const SingleParams& p,
                                     double m1, double m2,
                                     const QuadratureConfig& cfg) {
  if (beta_tilde != 2.0)
    throw ConfigError("two-mass quadrature supports beta_tilde == 2 only; "
                      "the other repulsion exponents are experimental");
  check_common(p, cfg);
  if (std::fabs(m1 - m2) < 1e-8)
    throw CoincidentMasses("two-mass quadrature needs distinct masses");
  check_pole_distance(p, 1.0);

  int n = p.n;
  long long origin_power = n + static_cast<long long>(p.nu);
  int nodes = cfg.nodes;
  std::vector<Complex> z(nodes), w(nodes);
  for (int k = 0; k < nodes; ++k) {
    double theta = 2.0 * M_PI * k / nodes;
    z[k] = Complex{std::cos(theta), std::sin(theta)};
    Complex weight;
    switch (p.kind) {
      case EnsembleKind::WishartLaguerre:
        weight = std::exp(z[k] / p.gamma_sq);
        break;
      case EnsembleKind::CauchyLorentz:
        weight = std::pow(p.gamma_sq + z[k], p.exponent - n - 2.0);
        break;
      case EnsembleKind::Jacobi:
        weight = std::pow(p.gamma_sq - z[k], -(n + p.exponent + 2.0));
        break;
    }
    w[k] = weight / pow_uint(z[k], origin_power);
  }

  std::vector<Complex> apow(n + 1), bpow(n + 1);
  ComplexSum num, den;
  for (int i = 0; i < nodes; ++i) {
    for (int j = 0; j < nodes; ++j) {
      double vand = std::norm(z[i] - z[j]);
      if (vand == 0.0) continue;  // coincident angles contribute nothing
      Complex a = (z[i] - m1) * (z[j] - m2);
      Complex b = (z[i] - m2) * (z[j] - m1);
      apow[0] = bpow[0] = Complex{1.0, 0.0};
      for (int q = 1; q <= n; ++q) {
        apow[q] = apow[q - 1] * a;
        bpow[q] = bpow[q - 1] * b;
      }
      Complex s{0.0, 0.0};
      for (int q = 0; 2 * q <= n; ++q) {
        if (2 * q == n)
          s += apow[q] * bpow[q];
        else
          s += apow[q] * bpow[n - q] + apow[n - q] * bpow[q];
      }
      Complex base = vand * (w[i] * w[j]);
      num.add(base * s / (n + 1.0));
      den.add(base);
    }
  }
  Complex denominator = den.total();
  if (std::abs(denominator) == 0.0)
    throw DegenerateGrid("two-mass quadrature normalization vanished");
  return num.total() / denominator;
}

}  // namespace rmt
