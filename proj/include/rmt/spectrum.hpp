#pragma once

#include <vector>

#include "rmt/field_matrix.hpp"

namespace rmt {

// Ascending eigenvalues of a Hermitian matrix in the complex representation.
// For beta = 4 the representation spectrum is doubled (Kramers degeneracy);
// kramers_collapsed records whether the pairs have been merged already.
struct SpectrumWithMultiplicity {
  std::vector<double> values;  // ascending
  int beta = 2;
  bool kramers_collapsed = false;
};

// Eigenvalues of a Hermitian matrix.  Rejects inputs whose deviation from
// Hermiticity exceeds herm_tol relative to the largest entry.
SpectrumWithMultiplicity eigenvalues_hermitian(const Eigen::MatrixXcd& h,
                                               int beta,
                                               double herm_tol = 1e-10);

// Spectrum of W W^dagger in the representation.
SpectrumWithMultiplicity gram_spectrum(const FieldMatrix& w,
                                       double herm_tol = 1e-10);

// Merges the doubled beta = 4 spectrum into one value per Kramers pair
// (midpoint of each adjacent pair).  A pair whose gap exceeds pair_tol
// relative to the spectral scale is a structural failure.
SpectrumWithMultiplicity collapse_kramers(const SpectrumWithMultiplicity& s,
                                          double pair_tol = 1e-8);

// Principal (positive semi-definite) square root of a Hermitian PSD matrix,
// projected back onto the field structure after the eigen-reconstruction.
// Slightly negative roundoff eigenvalues are clamped to zero.
FieldMatrix sqrt_psd(const FieldMatrix& h, double herm_tol = 1e-10);

}  // namespace rmt
