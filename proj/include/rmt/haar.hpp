#pragma once

#include "rmt/field_matrix.hpp"

namespace rmt {

// Haar-distributed element of the compact group over the field of `beta`:
// O(n) for beta = 1, U(n) for beta = 2, and the unitary-symplectic group
// (returned as its 2n x 2n complex embedding) for beta = 4.
//
// Construction: Gaussian matrix followed by Gram-Schmidt over the field with
// positive real diagonal of the triangular factor, which makes the QR
// decomposition unique and the orthogonal factor exactly Haar.  A second
// orthogonalization sweep keeps the columns orthonormal to near machine
// precision.
FieldMatrix haar_sample(int beta, Eigen::Index n, RngState& rng);

}  // namespace rmt
