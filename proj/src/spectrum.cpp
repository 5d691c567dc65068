#include "rmt/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace rmt {

SpectrumWithMultiplicity eigenvalues_hermitian(const Eigen::MatrixXcd& h,
                                               int beta, double herm_tol) {
  if (h.rows() != h.cols()) throw NotHermitian("matrix is not square");
  double scale = h.cwiseAbs().maxCoeff();
  double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (scale > 0.0 && dev > herm_tol * scale)
    throw NotHermitian("deviation " + std::to_string(dev / scale) +
                       " exceeds tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NotHermitian("eigenvalue iteration failed");
  SpectrumWithMultiplicity s;
  s.beta = beta;
  s.kramers_collapsed = (beta != 4);
  s.values.assign(solver.eigenvalues().data(),
                  solver.eigenvalues().data() + solver.eigenvalues().size());
  return s;
}

SpectrumWithMultiplicity gram_spectrum(const FieldMatrix& w, double herm_tol) {
  return eigenvalues_hermitian(w.gram().rep(), beta_of_field(w.field()),
                               herm_tol);
}

FieldMatrix sqrt_psd(const FieldMatrix& h, double herm_tol) {
  if (h.rows() != h.cols()) throw NotHermitian("matrix is not square");
  double scale = h.rep().cwiseAbs().maxCoeff();
  double dev = (h.rep() - h.rep().adjoint()).cwiseAbs().maxCoeff();
  if (scale > 0.0 && dev > herm_tol * scale)
    throw NotHermitian("deviation " + std::to_string(dev / scale) +
                       " exceeds tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.rep());
  if (solver.info() != Eigen::Success)
    throw NotHermitian("eigenvalue iteration failed");
  Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXcd rep = solver.eigenvectors() * roots.asDiagonal() *
                         solver.eigenvectors().adjoint();
  return enforce_field_structure(
      FieldMatrix::from_rep(h.field(), h.rows(), h.cols(), std::move(rep)));
}

SpectrumWithMultiplicity collapse_kramers(const SpectrumWithMultiplicity& s,
                                          double pair_tol) {
  if (s.kramers_collapsed) return s;
  if (s.values.size() % 2 != 0)
    throw PairingFailure("doubled spectrum has odd length");
  double scale = 0.0;
  for (double v : s.values) scale = std::max(scale, std::abs(v));
  double threshold = pair_tol * std::max(scale, 1e-300);
  SpectrumWithMultiplicity out;
  out.beta = s.beta;
  out.kramers_collapsed = true;
  out.values.reserve(s.values.size() / 2);
  for (std::size_t i = 0; i + 1 < s.values.size(); i += 2) {
    double a = s.values[i], b = s.values[i + 1];
    if (std::abs(a - b) > threshold)
      throw PairingFailure("gap " + std::to_string(std::abs(a - b)) +
                           " between would-be pair exceeds tolerance");
    out.values.push_back(0.5 * (a + b));
  }
  return out;
}

}  // namespace rmt
