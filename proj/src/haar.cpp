#include "rmt/haar.hpp"

namespace rmt {

namespace {

// Gram-Schmidt over the real or complex field, two sweeps, positive norms.
Eigen::MatrixXcd orthonormalize(Eigen::MatrixXcd m) {
  const Eigen::Index n = m.cols();
  for (Eigen::Index k = 0; k < n; ++k) {
    for (int sweep = 0; sweep < 2; ++sweep)
      for (Eigen::Index i = 0; i < k; ++i)
        m.col(k) -= m.col(i) * m.col(i).dot(m.col(k));
    m.col(k) /= m.col(k).norm();
  }
  return m;
}

// Gram-Schmidt over the quaternions.  Columns are pairs (a, b) representing
// the quaternion vector a + b j; the quaternion inner product of u and v is
//   c1 + c2 j,  c1 = ua^+ va + vb^+ ub,  c2 = ua^+ vb - va^+ ub,
// and right-multiplying an entry p + q j by c1 + c2 j gives
//   (p c1 - q conj(c2)) + (p c2 + q conj(c1)) j.
struct QuaternionColumns {
  Eigen::MatrixXcd a, b;

  void project_out(Eigen::Index i, Eigen::Index k) {
    std::complex<double> c1 = a.col(i).dot(a.col(k)) + b.col(k).dot(b.col(i));
    std::complex<double> c2 = a.col(i).dot(b.col(k)) - a.col(k).dot(b.col(i));
    Eigen::VectorXcd na =
        a.col(k) - (a.col(i) * c1 - b.col(i) * std::conj(c2));
    Eigen::VectorXcd nb =
        b.col(k) - (a.col(i) * c2 + b.col(i) * std::conj(c1));
    a.col(k) = na;
    b.col(k) = nb;
  }

  void orthonormalize() {
    const Eigen::Index n = a.cols();
    for (Eigen::Index k = 0; k < n; ++k) {
      for (int sweep = 0; sweep < 2; ++sweep)
        for (Eigen::Index i = 0; i < k; ++i) project_out(i, k);
      double norm =
          std::sqrt(a.col(k).squaredNorm() + b.col(k).squaredNorm());
      a.col(k) /= norm;
      b.col(k) /= norm;
    }
  }
};

}  // namespace

FieldMatrix haar_sample(int beta, Eigen::Index n, RngState& rng) {
  Field f = field_of_beta(beta);
  FieldMatrix g = gaussian_matrix(f, n, n, rng);
  switch (f) {
    case Field::Real: {
      Eigen::MatrixXd q = orthonormalize(g.rep()).real();
      return FieldMatrix::from_real(q);
    }
    case Field::Complex:
      return FieldMatrix::from_complex(orthonormalize(g.rep()));
    case Field::Quaternion: {
      QuaternionColumns cols{g.block_a(), g.block_b()};
      cols.orthonormalize();
      return FieldMatrix::from_quaternion_blocks(cols.a, cols.b);
    }
  }
  throw ConfigError("unknown field");
}

}  // namespace rmt
