#include <cmath>
#include <complex>

#include "doctest.h"
#include "rmt/errors.hpp"
#include "rmt/orthopoly.hpp"
#include "rmt/quadrature.hpp"

using namespace rmt;

namespace {

SingleParams wl(int n, double nu, double g2 = 1.0) {
  return {2, EnsembleKind::WishartLaguerre, n, nu, 0.0, g2};
}
SingleParams cl(int n, double nu, double mu, double g2) {
  return {2, EnsembleKind::CauchyLorentz, n, nu, mu, g2};
}
SingleParams jac(int n, double nu, double kappa, double g2) {
  return {2, EnsembleKind::Jacobi, n, nu, kappa, g2};
}

double k1(const SingleParams& p, double m, const QuadratureConfig& cfg) {
  std::complex<double> v = contour_quadrature_k1(p, m, cfg);
  CHECK(std::fabs(v.imag()) <
        1e-10 * std::max(1.0, std::fabs(v.real())));
  return v.real();
}

}  // namespace

TEST_CASE("single-mass rule reproduces the simplest residue exactly") {
  QuadratureConfig cfg;
  cfg.nodes = 64;
  CHECK(k1(wl(1, 0.0), 0.0, cfg) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single-mass rule equals n! G^{-2 nu} times the series") {
  QuadratureConfig cfg;
  cfg.auto_radius = true;
  for (int n : {1, 2, 4, 8}) {
    for (int nu : {0, 1, 3}) {
      for (double m : {0.0, 0.5, 2.0, 8.0}) {
        double lhs = k1(wl(n, nu), m, cfg);
        double rhs = std::tgamma(n + 1.0) * laguerre_series(n, nu, 1.0, m);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
      }
    }
  }
  // non-unit scale: the G^{-2 nu} prefactor shows up
  double lhs = k1(wl(2, 1, 2.0), 1.3, cfg);
  double rhs = 2.0 / 2.0 * laguerre_series(2, 1, 2.0, 1.3);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("heavy-tail single-mass rule: small case and ratio constancy") {
  QuadratureConfig cfg;
  // n=1, nu=0, mu=5, G^2=4: residue is (G^2)^{mu-3} (G^2 - m (mu - 2)).
  for (double m : {0.0, 0.4, 1.1}) {
    CHECK(k1(cl(1, 0.0, 5.0, 4.0), m, cfg) ==
          doctest::Approx(16.0 * (4.0 - 3.0 * m)).epsilon(1e-12));
  }
  // n=2: proportional to the series, same constant across the mass grid.
  double ref = 0.0;
  bool first = true;
  for (double m : {0.1, 0.25, 0.5, 1.0, 1.5}) {
    double r = k1(cl(2, 1.0, 8.0, 4.0), m, cfg) / cl_series(2, 1, 8.0, 4.0, m);
    if (first) {
      ref = r;
      first = false;
    } else {
      CHECK(r == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("truncated-unitary single-mass rule: small case and ratio constancy") {
  QuadratureConfig cfg;
  // n=1, nu=0, kappa=2, G^2=4: proportional to (1 - m).
  double c = k1(jac(1, 0.0, 2.0, 4.0), 0.0, cfg);
  for (double m : {0.4, 2.5}) {
    CHECK(k1(jac(1, 0.0, 2.0, 4.0), m, cfg) ==
          doctest::Approx(c * (1.0 - m)).epsilon(1e-12));
  }
  double ref = 0.0;
  bool first = true;
  for (double m : {0.1, 0.25, 0.5, 1.0, 1.5}) {
    double r =
        k1(jac(3, 2.0, 4.0, 4.0), m, cfg) / jacobi_series(3, 2, 4.0, 4.0, m);
    if (first) {
      ref = r;
      first = false;
    } else {
      CHECK(r == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("node refinement has converged at the default count") {
  QuadratureConfig a, b;
  a.nodes = 256;
  b.nodes = 512;
  SingleParams p = cl(3, 2.0, 12.0, 4.0);
  std::complex<double> va = contour_quadrature_k1(p, 1.3, a);
  std::complex<double> vb = contour_quadrature_k1(p, 1.3, b);
  CHECK(std::abs(va - vb) <= 1e-12 * std::abs(vb));
}

TEST_CASE("contour radius must stay clear of the weight singularity") {
  QuadratureConfig cfg;  // radius 1
  CHECK_THROWS_AS(contour_quadrature_k1(cl(1, 0.0, 5.0, 1.0), 0.5, cfg),
                  PoleOnContour);
  CHECK_THROWS_AS(contour_quadrature_k1(jac(1, 0.0, 2.0, 1.0), 0.5, cfg),
                  PoleOnContour);
  cfg.radius = 5.0;
  CHECK_THROWS_AS(contour_quadrature_k1(jac(1, 0.0, 2.0, 4.0), 0.5, cfg),
                  PoleOnContour);
}

TEST_CASE("single-mass rule validates its inputs") {
  QuadratureConfig cfg;
  SingleParams p = wl(2, 0.5);  // fractional nu: origin factor branches
  CHECK_THROWS_AS(contour_quadrature_k1(p, 1.0, cfg), ConfigError);
  SingleParams b1 = wl(2, 0.0);
  b1.beta = 1;
  CHECK_THROWS_AS(contour_quadrature_k1(b1, 1.0, cfg), ConfigError);
  cfg.nodes = 8;
  CHECK_THROWS_AS(contour_quadrature_k1(wl(2, 0.0), 1.0, cfg), ConfigError);
}

TEST_CASE("two-mass rule equals the Christoffel-Darboux kernel") {
  QuadratureConfig cfg;
  cfg.nodes = 512;
  for (auto [n, nu] : {std::pair{2, 0.0}, std::pair{3, 1.0}}) {
    for (auto [x, y] : {std::pair{1.0, 2.0}, std::pair{0.5, 4.0}}) {
      double v = cbe2_quadrature(2.0, wl(n, nu), x, y, cfg).real();
      double cd = laguerre_cd_kernel(n, nu, 1.0, x, y);
      CHECK(v == doctest::Approx(cd).epsilon(1e-9));
    }
  }
}

TEST_CASE("two-mass rule matches the n = 1 moment oracles of all kinds") {
  QuadratureConfig cfg;
  cfg.nodes = 512;
  // Jacobi n=1 nu=0 kappa=2 G^2=4: lambda = 4 u, u ~ Beta(1,3):
  //   E lambda = 1, E lambda^2 = 1.6.
  for (auto [x, y] : {std::pair{0.5, 1.5}, std::pair{2.0, 5.0}}) {
    double v = cbe2_quadrature(2.0, jac(1, 0.0, 2.0, 4.0), x, y, cfg).real();
    CHECK(v == doctest::Approx(1.6 - (x + y) + x * y).epsilon(1e-9));
  }
  // heavy tail n=1 nu=0 mu=6 G^2=4: E lambda = 1, E lambda^2 = 8/3.
  for (auto [x, y] : {std::pair{0.5, 1.5}, std::pair{2.0, 5.0}}) {
    double v = cbe2_quadrature(2.0, cl(1, 0.0, 6.0, 4.0), x, y, cfg).real();
    CHECK(v ==
          doctest::Approx(8.0 / 3.0 - (x + y) + x * y).epsilon(1e-9));
  }
}

TEST_CASE("two-mass rule is bitwise symmetric under a mass swap") {
  QuadratureConfig cfg;
  SingleParams p = wl(3, 1.0);
  std::complex<double> a = cbe2_quadrature(2.0, p, 0.7, 2.9, cfg);
  std::complex<double> b = cbe2_quadrature(2.0, p, 2.9, 0.7, cfg);
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}

TEST_CASE("two-mass rule rejects unsupported inputs") {
  QuadratureConfig cfg;
  SingleParams p = wl(2, 0.0);
  CHECK_THROWS_AS(cbe2_quadrature(4.0, p, 1.0, 2.0, cfg), ConfigError);
  CHECK_THROWS_AS(cbe2_quadrature(1.0, p, 1.0, 2.0, cfg), ConfigError);
  CHECK_THROWS_AS(cbe2_quadrature(2.0, p, 1.3, 1.3, cfg), CoincidentMasses);
  // unit-circle rule collides with the G^2 = 1 singularity
  CHECK_THROWS_AS(cbe2_quadrature(2.0, jac(1, 0.0, 2.0, 1.0), 0.3, 0.6, cfg),
                  PoleOnContour);
}
