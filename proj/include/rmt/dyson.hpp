#pragma once

#include "rmt/errors.hpp"

namespace rmt {

// Bookkeeping constants attached to the Dyson index beta of the underlying
// number field (real / complex / quaternion):
//   gamma       doubling of the matrix representation (2 for quaternion),
//   gamma_tilde doubling of the mass block (2 for real),
//   beta_tilde  the dual index 4/beta.
struct DysonIndex {
  int beta;
  int gamma;
  int gamma_tilde;
  double beta_tilde;

  static DysonIndex of(int beta) {
    switch (beta) {
      case 1: return {1, 1, 2, 4.0};
      case 2: return {2, 1, 1, 2.0};
      case 4: return {4, 2, 1, 1.0};
      default: break;
    }
    throw ConfigError("beta must be one of {1, 2, 4}");
  }
};

}  // namespace rmt
