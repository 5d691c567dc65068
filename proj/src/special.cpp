#include "rmt/special.hpp"

#include <cmath>
#include <limits>

#include "rmt/errors.hpp"

namespace rmt {

SignedLog SignedLog::zero() {
  return {-std::numeric_limits<double>::infinity(), 0};
}

SignedLog SignedLog::of(double x) {
  if (x == 0.0) return zero();
  return {std::log(std::fabs(x)), x > 0 ? 1 : -1};
}

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

SignedLog SignedLog::operator*(const SignedLog& rhs) const {
  if (sign == 0 || rhs.sign == 0) return zero();
  return {log_abs + rhs.log_abs, sign * rhs.sign};
}

SignedLog SignedLog::pow_int(long long k) const {
  if (sign == 0) return k == 0 ? one() : zero();
  int s = (sign < 0 && (k & 1)) ? -1 : 1;
  return {static_cast<double>(k) * log_abs, s};
}

void CompensatedSum::add(double x) {
  double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);  // exact; r in (-2, 2)
  if (r == std::floor(r)) return 0.0;
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(M_PI * r);  // |r| <= 1/2: no accuracy loss near zeros
}

namespace {

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::rint(x);
}

}  // namespace

SignedLog gamma_signed(double x) {
  if (x > 0.0) return {std::lgamma(x), 1};
  if (is_nonpositive_integer(x))
    throw ConfigError("gamma function evaluated at a pole");
  double s = sin_pi(x);
  return {std::log(M_PI) - std::log(std::fabs(s)) - std::lgamma(1.0 - x),
          s > 0 ? 1 : -1};
}

SignedLog recip_gamma(double x) {
  if (x > 0.0) return {-std::lgamma(x), 1};
  if (is_nonpositive_integer(x)) return SignedLog::zero();
  double s = sin_pi(x);
  return {std::log(std::fabs(s)) + std::lgamma(1.0 - x) - std::log(M_PI),
          s > 0 ? 1 : -1};
}

SignedLog signed_log_sum(const std::vector<SignedLog>& terms) {
  double mx = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (t.sign != 0 && t.log_abs > mx) mx = t.log_abs;
  if (!std::isfinite(mx)) return SignedLog::zero();
  CompensatedSum acc;
  for (const auto& t : terms)
    if (t.sign != 0) acc.add(t.sign * std::exp(t.log_abs - mx));
  double total = acc.total();
  if (total == 0.0) return SignedLog::zero();
  return {mx + std::log(std::fabs(total)), total > 0 ? 1 : -1};
}

}  // namespace rmt
