#pragma once

#include <vector>

namespace rmt {

// Real number carried as sign * exp(log_abs).  sign == 0 encodes exact zero.
// Keeps products of gamma factors representable far beyond double range.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  static SignedLog zero();
  static SignedLog one() { return {0.0, 1}; }
  static SignedLog of(double x);

  bool is_zero() const { return sign == 0; }
  double value() const;
  SignedLog operator*(const SignedLog& rhs) const;
  SignedLog pow_int(long long k) const;
};

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double total() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// sin(pi x) with the argument reduced modulo 2 before multiplying by pi, so
// large x keeps full relative accuracy (and integer x gives exactly zero).
double sin_pi(double x);

// Gamma(x) away from its poles; throws ConfigError when x is a non-positive
// integer.
SignedLog gamma_signed(double x);

// 1 / Gamma(x); entire, exactly zero at non-positive integers.
SignedLog recip_gamma(double x);

// Compensated signed log-sum-exp of the terms.
SignedLog signed_log_sum(const std::vector<SignedLog>& terms);

}  // namespace rmt
