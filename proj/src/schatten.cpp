#include "hylab/schatten.hpp"

#include <algorithm>
#include <cmath>

#include "hylab/error.hpp"

namespace hylab {

namespace {

void require_finite(const ComplexMatrix& x, const char* what) {
  require(x.rows() >= 1 && x.rows() == x.cols(), std::string(what) + ": expected a non-empty square matrix");
  require(x.allFinite(), std::string(what) + ": matrix has non-finite entries");
}

}  // namespace

PositiveMatrix::PositiveMatrix(const ComplexMatrix& a) {
  require_finite(a, "PositiveMatrix");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  require((a - a.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * scale, "PositiveMatrix: matrix is not Hermitian");
  ComplexMatrix herm = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm);
  require(es.info() == Eigen::Success, "PositiveMatrix: eigendecomposition failed");
  const RealVector& ev = es.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  require(ev.minCoeff() > 1e-10 * top && ev.minCoeff() > 0.0, "PositiveMatrix: matrix is not positive definite");
  matrix_ = std::move(herm);
  eigenvalues_ = ev;
  eigenvectors_ = es.eigenvectors();
}

PositiveMatrix PositiveMatrix::identity(Eigen::Index dim) {
  require(dim >= 1, "PositiveMatrix::identity: dimension must be >= 1");
  return PositiveMatrix(ComplexMatrix::Identity(dim, dim), RealVector::Ones(dim), ComplexMatrix::Identity(dim, dim));
}

ComplexMatrix PositiveMatrix::power_matrix(double s) const {
  if (s == 0.0) return ComplexMatrix::Identity(dim(), dim());
  if (s == 1.0) return matrix_;
  const RealVector powered = eigenvalues_.array().pow(s).matrix();
  ComplexMatrix r = eigenvectors_ * powered.asDiagonal() * eigenvectors_.adjoint();
  return 0.5 * (r + r.adjoint());
}

RealVector singular_values(const ComplexMatrix& x) {
  require_finite(x, "singular_values");
  const ComplexMatrix gram = x.adjoint() * x;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  require(es.info() == Eigen::Success, "singular_values: eigensolver failed");
  RealVector s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(s.data(), s.data() + s.size(), std::greater<>());
  return s;
}

double schatten_norm_from_singular_values(const RealVector& s, double p) {
  require(p >= 1.0, "schatten_norm: p must be >= 1");
  if (s.size() == 0) return 0.0;
  const double top = s.maxCoeff();
  if (std::isinf(p)) return top;
  if (top == 0.0) return 0.0;
  // Scaled by the largest singular value to keep s^p in range.
  return top * std::pow((s / top).array().pow(p).sum(), 1.0 / p);
}

double schatten_norm(const ComplexMatrix& x, double p) {
  require(p >= 1.0, "schatten_norm: p must be >= 1");
  return schatten_norm_from_singular_values(singular_values(x), p);
}

double weighted_norm(const ComplexMatrix& x, const PositiveMatrix& a, double p) {
  require(x.rows() == a.dim() && x.cols() == a.dim(), "weighted_norm: dimension mismatch");
  const ComplexMatrix w = a.power_matrix(-0.5);
  return schatten_norm(w * x * w, p);
}

PositiveMatrix matrix_power(const PositiveMatrix& a, double s) {
  require(std::isfinite(s), "matrix_power: exponent must be finite");
  return PositiveMatrix(a.power_matrix(s));
}

PositiveMatrix gamma_path(const PositiveMatrix& a, const PositiveMatrix& b, double t) {
  require(a.dim() == b.dim(), "gamma_path: dimension mismatch");
  require(t >= 0.0 && t <= 1.0, "gamma_path: t must lie in [0, 1]");
  if (a.matrix() == b.matrix()) return a;
  const ComplexMatrix half = a.power_matrix(0.5);
  const ComplexMatrix inv_half = a.power_matrix(-0.5);
  ComplexMatrix inner = inv_half * b.matrix() * inv_half;
  inner = 0.5 * (inner + inner.adjoint());
  const ComplexMatrix path = half * PositiveMatrix(inner).power_matrix(t) * half;
  return PositiveMatrix(0.5 * (path + path.adjoint()));
}

double weight_comparison_constant(const PositiveMatrix& a, const PositiveMatrix& b) {
  require(a.dim() == b.dim(), "weight_comparison_constant: dimension mismatch");
  if (a.matrix() == b.matrix()) return 1.0;
  const ComplexMatrix half = a.power_matrix(0.5);
  ComplexMatrix k = half * b.power_matrix(-1.0) * half;
  k = 0.5 * (k + k.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(k, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace hylab
