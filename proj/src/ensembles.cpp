#include "rmt/ensembles.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <limits>

#include "rmt/haar.hpp"

namespace rmt {

void EnsembleSpec::validate(int k_masses) const {
  DysonIndex d = DysonIndex::of(beta);
  if (n < 1) throw ConfigError("ensemble needs n >= 1");
  if (nu < 0) throw ConfigError("ensemble needs nu >= 0");
  if (gamma_scale <= 0.0) throw ConfigError("ensemble needs a positive scale");
  if (kind == EnsembleKind::CauchyLorentz) {
    double bound = cl_mu_bound(beta, n, nu, k_masses);
    if (!(mu > bound))
      throw ConfigError("tail exponent mu = " + std::to_string(mu) +
                        " must exceed " + std::to_string(bound) +
                        " for k = " + std::to_string(k_masses) + " masses");
  }
  if (kind == EnsembleKind::Jacobi) {
    if (!(kappa > -1.0 / (2.0 * d.gamma)))
      throw ConfigError("truncation exponent kappa must exceed -1/(2 gamma)");
  }
}

SingleParams EnsembleSpec::single_params() const {
  double exponent = kind == EnsembleKind::CauchyLorentz
                        ? mu
                        : (kind == EnsembleKind::Jacobi ? kappa : 0.0);
  return {beta, kind, n, static_cast<double>(nu), exponent, gamma_sq()};
}

double cl_mu_bound(int beta, int n, int nu, int k_masses) {
  DysonIndex d = DysonIndex::of(beta);
  return static_cast<double>(k_masses) / d.gamma +
         static_cast<double>(2 * n + nu) / d.gamma_tilde -
         (d.gamma * d.gamma_tilde - 1.0) / 2.0;
}

std::optional<Eigen::Index> jacobi_haar_size(const EnsembleSpec& spec) {
  DysonIndex d = DysonIndex::of(spec.beta);
  double surplus =
      d.gamma_tilde * spec.kappa + static_cast<double>(d.gamma_tilde) / d.gamma -
      1.0;
  double rounded = std::rint(surplus);
  if (std::fabs(surplus - rounded) > 1e-9 || rounded < -0.5) return std::nullopt;
  return static_cast<Eigen::Index>(2 * spec.n + spec.nu + rounded);
}

FieldMatrix sample_wishart_laguerre(const EnsembleSpec& spec, RngState& rng) {
  spec.validate();
  if (spec.kind != EnsembleKind::WishartLaguerre)
    throw ConfigError("spec kind mismatch");
  return gaussian_matrix(spec.field(), spec.n, spec.n + spec.nu, rng)
      .scaled(spec.gamma_scale);
}

FieldMatrix sample_jacobi(const EnsembleSpec& spec, RngState& rng) {
  spec.validate();
  if (spec.kind != EnsembleKind::Jacobi)
    throw ConfigError("spec kind mismatch");
  auto haar_size = jacobi_haar_size(spec);
  if (!haar_size)
    throw UnrealizableParameters(
        "kappa = " + std::to_string(spec.kappa) +
        " is not reachable by an integer truncation for beta = " +
        std::to_string(spec.beta) + "; use the Metropolis chain");
  FieldMatrix u = haar_sample(spec.beta, *haar_size, rng);
  return u.top_left(spec.n, spec.n + spec.nu).scaled(spec.gamma_scale);
}

namespace {

int parts_per_entry(Field f) {
  switch (f) {
    case Field::Real: return 1;
    case Field::Complex: return 2;
    case Field::Quaternion: return 4;
  }
  return 2;
}

}  // namespace

MetropolisMatrixChain::MetropolisMatrixChain(const EnsembleSpec& spec,
                                             const McmcConfig& cfg,
                                             std::uint64_t seed)
    : spec_(spec),
      cfg_(cfg),
      rng_(derive_seed(seed, cfg.chain_stream)),
      step_(cfg.step_scale) {
  spec_.validate();
  if (spec_.kind == EnsembleKind::WishartLaguerre)
    throw ConfigError("the Gaussian kind has a direct sampler; no chain");
  if (cfg_.thinning < 1) throw ConfigError("thinning must be >= 1");
  if (cfg_.burn_in < 0) throw ConfigError("burn-in must be >= 0");
  if (!(cfg_.step_scale > 0.0))
    throw ConfigError("step scale must be positive");
  int g = DysonIndex::of(spec_.beta).gamma;
  rep_ = Eigen::MatrixXcd::Zero(g * spec_.n, g * (spec_.n + spec_.nu));
  log_density_ = log_density(rep_);

  // Burn-in with windowed step adaptation towards ~30% acceptance; the step
  // is frozen afterwards so the sampled chain is a plain Metropolis walk.
  const long long window = 100;
  long long done = 0;
  while (done < cfg_.burn_in) {
    long long block = std::min(window, cfg_.burn_in - done);
    accepted_ = proposed_ = 0;
    for (long long s = 0; s < block; ++s) sweep();
    double rate = proposed_ > 0
                      ? static_cast<double>(accepted_) / proposed_
                      : 0.3;
    step_ = std::clamp(step_ * std::exp(rate - 0.3), 1e-8, 1e6);
    done += block;
  }
  accepted_ = proposed_ = 0;
}

double MetropolisMatrixChain::log_density(const Eigen::MatrixXcd& rep) const {
  Eigen::MatrixXcd gram = rep * rep.adjoint();
  Eigen::MatrixXcd shifted;
  if (spec_.kind == EnsembleKind::CauchyLorentz)
    shifted = spec_.gamma_sq() *
                  Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()) +
              gram;
  else
    shifted = spec_.gamma_sq() *
                  Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()) -
              gram;
  Eigen::LLT<Eigen::MatrixXcd> llt(shifted);
  if (llt.info() != Eigen::Success)
    return -std::numeric_limits<double>::infinity();
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < shifted.rows(); ++i)
    logdet += 2.0 * std::log(llt.matrixLLT()(i, i).real());
  double value = spec_.kind == EnsembleKind::CauchyLorentz
                     ? -spec_.mu * logdet
                     : spec_.kappa * logdet;
  if (std::isnan(value) ||
      value == std::numeric_limits<double>::infinity())
    throw ChainDiverged("log-density evaluated to NaN or +inf");
  return value;
}

void MetropolisMatrixChain::sweep() {
  const Eigen::Index rows = spec_.n;
  const Eigen::Index cols = spec_.n + spec_.nu;
  const int parts = parts_per_entry(spec_.field());
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (int part = 0; part < parts; ++part) {
        // Locate the stored entry and its quaternion mirror (if any).
        Eigen::Index pi = i, pj = j;
        bool b_block = part >= 2;
        if (spec_.field() == Field::Quaternion && b_block) pj = cols + j;
        std::complex<double> saved = rep_(pi, pj);
        std::complex<double> mirror_saved;
        Eigen::Index mi = 0, mj = 0;
        if (spec_.field() == Field::Quaternion) {
          mi = rows + i;
          mj = b_block ? j : cols + j;
          mirror_saved = rep_(mi, mj);
        }

        double delta = step_ * rng_.gaussian();
        bool imag_part = (part % 2) == 1;
        rep_(pi, pj) = saved + (imag_part
                                    ? std::complex<double>(0.0, delta)
                                    : std::complex<double>(delta, 0.0));
        if (spec_.field() == Field::Quaternion)
          rep_(mi, mj) =
              b_block ? -std::conj(rep_(pi, pj)) : std::conj(rep_(pi, pj));

        double proposal_density = log_density(rep_);
        ++proposed_;
        if (std::log(rng_.uniform01()) <= proposal_density - log_density_) {
          log_density_ = proposal_density;
          ++accepted_;
        } else {
          rep_(pi, pj) = saved;
          if (spec_.field() == Field::Quaternion) rep_(mi, mj) = mirror_saved;
        }
      }
    }
  }
}

FieldMatrix MetropolisMatrixChain::next() {
  for (int t = 0; t < cfg_.thinning; ++t) sweep();
  switch (spec_.field()) {
    case Field::Real: return FieldMatrix::from_real(rep_.real());
    case Field::Complex: return FieldMatrix::from_complex(rep_);
    case Field::Quaternion:
      return FieldMatrix::from_rep(Field::Quaternion, spec_.n,
                                   spec_.n + spec_.nu, rep_);
  }
  throw ConfigError("unknown field");
}

double MetropolisMatrixChain::acceptance_rate() const {
  return proposed_ > 0 ? static_cast<double>(accepted_) / proposed_ : 0.0;
}

FieldMatrix sample_cauchy_lorentz(const EnsembleSpec& spec, RngState& rng,
                                  const McmcConfig& cfg) {
  if (spec.kind != EnsembleKind::CauchyLorentz)
    throw ConfigError("spec kind mismatch");
  MetropolisMatrixChain chain(spec, cfg, rng.raw());
  return chain.next();
}

EnsembleSampler::EnsembleSampler(const EnsembleSpec& spec,
                                 const McmcConfig& cfg, std::uint64_t seed)
    : spec_(spec), rng_(seed) {
  spec_.validate();
  bool direct = spec_.kind == EnsembleKind::WishartLaguerre ||
                (spec_.kind == EnsembleKind::Jacobi &&
                 jacobi_haar_size(spec_).has_value());
  if (!direct) chain_.emplace(spec_, cfg, seed);
}

FieldMatrix EnsembleSampler::next() {
  if (chain_) return chain_->next();
  if (spec_.kind == EnsembleKind::WishartLaguerre)
    return sample_wishart_laguerre(spec_, rng_);
  return sample_jacobi(spec_, rng_);
}

void ProductSpec::validate(int k_masses) const {
  if (factors.empty()) throw ConfigError("product needs >= 1 factor");
  for (const auto& f : factors) f.validate(k_masses);
  for (const auto& f : factors)
    if (f.beta != factors.front().beta || f.n != factors.front().n)
      throw ConfigError("product factors must share beta and n");
}

FieldMatrix product_of_factors(const std::vector<FieldMatrix>& factors,
                               RngState& rng) {
  if (factors.empty()) throw DimensionMismatch("empty factor list");
  if (factors.size() == 1) return factors.front();
  const Eigen::Index n = factors.front().rows();
  const Field field = factors.front().field();
  FieldMatrix product = FieldMatrix::identity(field, n);
  for (const auto& w : factors) {
    if (w.field() != field)
      throw DimensionMismatch("factors live over different fields");
    if (w.rows() != n || w.cols() < n)
      throw DimensionMismatch("factor shapes do not chain to n x n");
    FieldMatrix square = w;
    if (w.cols() != n)
      square = sqrt_psd(w.gram()) * haar_sample(beta_of_field(field), n, rng);
    product = product * square;
  }
  return product;
}

ProductSampler::ProductSampler(const ProductSpec& spec, const McmcConfig& cfg,
                               std::uint64_t seed)
    : spec_(spec), rotation_rng_(derive_seed(seed, 0xfa0700u)) {
  spec_.validate();
  samplers_.reserve(spec_.factors.size());
  for (std::size_t j = 0; j < spec_.factors.size(); ++j)
    samplers_.emplace_back(spec_.factors[j], cfg, derive_seed(seed, j));
}

ProductSample ProductSampler::next() {
  ProductSample out;
  out.factors.reserve(samplers_.size());
  for (auto& s : samplers_) out.factors.push_back(s.next());
  out.product = product_of_factors(out.factors, rotation_rng_);
  return out;
}

ProductSample sample_product(const ProductSpec& spec, RngState& rng,
                             const McmcConfig& cfg) {
  spec.validate();
  ProductSample out;
  out.factors.reserve(spec.factors.size());
  for (const auto& f : spec.factors) {
    switch (f.kind) {
      case EnsembleKind::WishartLaguerre:
        out.factors.push_back(sample_wishart_laguerre(f, rng));
        break;
      case EnsembleKind::Jacobi:
        if (jacobi_haar_size(f))
          out.factors.push_back(sample_jacobi(f, rng));
        else
          out.factors.push_back(
              MetropolisMatrixChain(f, cfg, rng.raw()).next());
        break;
      case EnsembleKind::CauchyLorentz:
        out.factors.push_back(sample_cauchy_lorentz(f, rng, cfg));
        break;
    }
  }
  out.product = product_of_factors(out.factors, rng);
  return out;
}

}  // namespace rmt
