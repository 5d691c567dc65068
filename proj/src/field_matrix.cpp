#include "rmt/field_matrix.hpp"

namespace rmt {

FieldMatrix FieldMatrix::zero(Field f, Eigen::Index rows, Eigen::Index cols) {
  FieldMatrix m;
  m.field_ = f;
  m.rows_ = rows;
  m.cols_ = cols;
  int g = rep_factor(f);
  m.rep_ = Eigen::MatrixXcd::Zero(g * rows, g * cols);
  return m;
}

FieldMatrix FieldMatrix::identity(Field f, Eigen::Index n) {
  FieldMatrix m = zero(f, n, n);
  m.rep_.setIdentity();
  return m;
}

FieldMatrix FieldMatrix::from_real(const Eigen::MatrixXd& r) {
  FieldMatrix m;
  m.field_ = Field::Real;
  m.rows_ = r.rows();
  m.cols_ = r.cols();
  m.rep_ = r.cast<std::complex<double>>();
  return m;
}

FieldMatrix FieldMatrix::from_complex(const Eigen::MatrixXcd& c) {
  FieldMatrix m;
  m.field_ = Field::Complex;
  m.rows_ = c.rows();
  m.cols_ = c.cols();
  m.rep_ = c;
  return m;
}

FieldMatrix FieldMatrix::from_quaternion_blocks(const Eigen::MatrixXcd& a,
                                                const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("quaternion blocks must have equal shapes");
  FieldMatrix m;
  m.field_ = Field::Quaternion;
  m.rows_ = a.rows();
  m.cols_ = a.cols();
  m.rep_.resize(2 * a.rows(), 2 * a.cols());
  m.rep_.topLeftCorner(a.rows(), a.cols()) = a;
  m.rep_.topRightCorner(a.rows(), a.cols()) = b;
  m.rep_.bottomLeftCorner(a.rows(), a.cols()) = -b.conjugate();
  m.rep_.bottomRightCorner(a.rows(), a.cols()) = a.conjugate();
  return m;
}

FieldMatrix FieldMatrix::from_rep(Field f, Eigen::Index rows, Eigen::Index cols,
                                  Eigen::MatrixXcd rep) {
  int g = rep_factor(f);
  if (rep.rows() != g * rows || rep.cols() != g * cols)
    throw DimensionMismatch("representation shape does not match logical shape");
  FieldMatrix m;
  m.field_ = f;
  m.rows_ = rows;
  m.cols_ = cols;
  m.rep_ = std::move(rep);
  return m;
}

Eigen::MatrixXcd FieldMatrix::block_a() const {
  if (field_ != Field::Quaternion)
    throw DimensionMismatch("block access requires a quaternion matrix");
  return rep_.topLeftCorner(rows_, cols_);
}

Eigen::MatrixXcd FieldMatrix::block_b() const {
  if (field_ != Field::Quaternion)
    throw DimensionMismatch("block access requires a quaternion matrix");
  return rep_.topRightCorner(rows_, cols_);
}

FieldMatrix FieldMatrix::gram() const {
  Eigen::MatrixXcd g = rep_ * rep_.adjoint();
  g = 0.5 * (g + g.adjoint()).eval();
  return from_rep(field_, rows_, rows_, std::move(g));
}

FieldMatrix FieldMatrix::adjoint() const {
  return from_rep(field_, cols_, rows_, rep_.adjoint());
}

FieldMatrix FieldMatrix::scaled(double s) const {
  return from_rep(field_, rows_, cols_, s * rep_);
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  if (field_ != rhs.field_)
    throw DimensionMismatch("matrix product requires matching fields");
  if (cols_ != rhs.rows_)
    throw DimensionMismatch("matrix product requires cols(lhs) == rows(rhs)");
  return from_rep(field_, rows_, rhs.cols_, rep_ * rhs.rep_);
}

FieldMatrix FieldMatrix::top_left(Eigen::Index r, Eigen::Index c) const {
  if (r > rows_ || c > cols_)
    throw DimensionMismatch("sub-matrix exceeds parent dimensions");
  if (field_ != Field::Quaternion)
    return from_rep(field_, r, c, rep_.topLeftCorner(r, c));
  // Take the top-left blocks of both A and B so the result stays a valid
  // embedding.
  Eigen::MatrixXcd a = rep_.topLeftCorner(r, c);
  Eigen::MatrixXcd b = rep_.block(0, cols_, r, c);
  return from_quaternion_blocks(a, b);
}

bool validate_symmetry(const FieldMatrix& w, double tol) {
  const Eigen::MatrixXcd& m = w.rep();
  switch (w.field()) {
    case Field::Real:
      return (m.imag().cwiseAbs().maxCoeff() == 0.0);
    case Field::Complex:
      return true;
    case Field::Quaternion: {
      Eigen::Index r = w.rows(), c = w.cols();
      double scale = m.cwiseAbs().maxCoeff();
      if (scale == 0.0) return true;
      double dev = 0.0;
      dev = std::max(dev, (m.block(r, c, r, c) - m.topLeftCorner(r, c).conjugate())
                              .cwiseAbs()
                              .maxCoeff());
      dev = std::max(dev, (m.block(r, 0, r, c) + m.block(0, c, r, c).conjugate())
                              .cwiseAbs()
                              .maxCoeff());
      return dev <= tol * scale;
    }
  }
  return false;
}

FieldMatrix enforce_field_structure(const FieldMatrix& w) {
  switch (w.field()) {
    case Field::Real: {
      Eigen::MatrixXd re = w.rep().real();
      return FieldMatrix::from_real(re);
    }
    case Field::Complex:
      return w;
    case Field::Quaternion: {
      Eigen::Index r = w.rows(), c = w.cols();
      const Eigen::MatrixXcd& m = w.rep();
      Eigen::MatrixXcd a =
          0.5 * (m.topLeftCorner(r, c) + m.block(r, c, r, c).conjugate());
      Eigen::MatrixXcd b =
          0.5 * (m.block(0, c, r, c) - m.block(r, 0, r, c).conjugate());
      return FieldMatrix::from_quaternion_blocks(a, b);
    }
  }
  return w;
}

FieldMatrix gaussian_matrix(Field f, Eigen::Index rows, Eigen::Index cols,
                            RngState& rng) {
  switch (f) {
    case Field::Real: {
      Eigen::MatrixXd m(rows, cols);
      const double s = 1.0 / std::sqrt(2.0);
      for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = s * rng.gaussian();
      return FieldMatrix::from_real(m);
    }
    case Field::Complex: {
      Eigen::MatrixXcd m(rows, cols);
      const double s = 1.0 / std::sqrt(2.0);
      for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i)
          m(i, j) = s * rng.gaussian_complex();
      return FieldMatrix::from_complex(m);
    }
    case Field::Quaternion: {
      Eigen::MatrixXcd a(rows, cols), b(rows, cols);
      const double s = 0.5;
      for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = s * rng.gaussian_complex();
      for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) b(i, j) = s * rng.gaussian_complex();
      return FieldMatrix::from_quaternion_blocks(a, b);
    }
  }
  throw ConfigError("unknown field");
}

}  // namespace rmt
