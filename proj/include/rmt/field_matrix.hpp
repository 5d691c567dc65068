#pragma once

#include <Eigen/Dense>

#include "rmt/dyson.hpp"
#include "rmt/errors.hpp"
#include "rmt/rng.hpp"

namespace rmt {

enum class Field { Real, Complex, Quaternion };

inline int rep_factor(Field f) { return f == Field::Quaternion ? 2 : 1; }

inline Field field_of_beta(int beta) {
  switch (beta) {
    case 1: return Field::Real;
    case 2: return Field::Complex;
    case 4: return Field::Quaternion;
    default: break;
  }
  throw ConfigError("beta must be one of {1, 2, 4}");
}

inline int beta_of_field(Field f) {
  switch (f) {
    case Field::Real: return 1;
    case Field::Complex: return 2;
    case Field::Quaternion: return 4;
  }
  return 2;
}

// Matrix over one of the three division algebras, stored uniformly as its
// complex representation.  A logical n x m quaternion matrix A + B j is
// embedded as the 2n x 2m complex matrix
//
//     [  A        B      ]
//     [ -conj(B)  conj(A)]
//
// so quaternion matrix algebra is plain complex matrix algebra on the
// embedding.  Real matrices are stored with exactly zero imaginary parts.
class FieldMatrix {
 public:
  FieldMatrix() = default;

  static FieldMatrix zero(Field f, Eigen::Index rows, Eigen::Index cols);
  static FieldMatrix identity(Field f, Eigen::Index n);
  static FieldMatrix from_real(const Eigen::MatrixXd& m);
  static FieldMatrix from_complex(const Eigen::MatrixXcd& m);
  static FieldMatrix from_quaternion_blocks(const Eigen::MatrixXcd& a,
                                            const Eigen::MatrixXcd& b);
  // Adopts a ready-made representation; dimensions must match the field.
  static FieldMatrix from_rep(Field f, Eigen::Index rows, Eigen::Index cols,
                              Eigen::MatrixXcd rep);

  Field field() const { return field_; }
  Eigen::Index rows() const { return rows_; }  // logical (field) dimensions
  Eigen::Index cols() const { return cols_; }
  Eigen::Index rep_rows() const { return rep_.rows(); }
  Eigen::Index rep_cols() const { return rep_.cols(); }
  const Eigen::MatrixXcd& rep() const { return rep_; }

  // Quaternion block access (throws for other fields).
  Eigen::MatrixXcd block_a() const;
  Eigen::MatrixXcd block_b() const;

  // W W^dagger in the representation, explicitly hermitized.  Same field.
  FieldMatrix gram() const;
  FieldMatrix adjoint() const;
  FieldMatrix scaled(double s) const;
  FieldMatrix operator*(const FieldMatrix& rhs) const;

  // Field-aware top-left sub-matrix of logical size r x c.
  FieldMatrix top_left(Eigen::Index r, Eigen::Index c) const;

 private:
  Field field_ = Field::Complex;
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  Eigen::MatrixXcd rep_;
};

// Structural check: real matrices must have exactly zero imaginary parts;
// quaternion embeddings must satisfy the mirrored-block relations to a
// relative tolerance (relative to the largest entry magnitude).
bool validate_symmetry(const FieldMatrix& w, double tol = 1e-12);

// Projects a numerically dirtied matrix back onto its field structure
// (averages the mirrored quaternion blocks, drops stray imaginary parts of
// real matrices).  Used after eigen-decomposition based constructions.
FieldMatrix enforce_field_structure(const FieldMatrix& w);

// Gaussian matrix with density proportional to exp(-tr W W^dagger), the trace
// taken in the representation.  Per-component standard deviations:
//   real entries          1/sqrt(2)
//   complex re/im parts   1/sqrt(2)   (unit total variance per entry)
//   quaternion components 1/2         (A, B blocks carry half the variance)
FieldMatrix gaussian_matrix(Field f, Eigen::Index rows, Eigen::Index cols,
                            RngState& rng);

}  // namespace rmt
