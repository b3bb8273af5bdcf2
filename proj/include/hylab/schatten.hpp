#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>

namespace hylab {

using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A Hermitian positive definite matrix together with its spectral
/// decomposition, so real powers cost two matrix products.
///
/// Certification: the input must be Hermitian to 1e-12 (relative to its
/// operator norm) and its smallest eigenvalue must exceed 1e-10 * ||a||_inf.
/// Near-singular weights are rejected, never regularized.
class PositiveMatrix {
public:
  explicit PositiveMatrix(const ComplexMatrix& a);

  static PositiveMatrix identity(Eigen::Index dim);

  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }
  double operator_norm() const { return eigenvalues_.maxCoeff(); }

  /// U diag(lambda^s) U*.
  ComplexMatrix power_matrix(double s) const;

private:
  PositiveMatrix(ComplexMatrix m, RealVector evals, ComplexMatrix evecs)
      : matrix_(std::move(m)), eigenvalues_(std::move(evals)), eigenvectors_(std::move(evecs)) {}

  ComplexMatrix matrix_;
  RealVector eigenvalues_;   // ascending
  ComplexMatrix eigenvectors_;
};

/// Singular values as square roots of the eigenvalues of X*X, nonincreasing.
RealVector singular_values(const ComplexMatrix& x);

/// (sum s_n^p)^{1/p}; p = kInfinity gives the operator norm. p < 1 throws.
double schatten_norm(const ComplexMatrix& x, double p);
/// Schatten norm from precomputed singular values.
double schatten_norm_from_singular_values(const RealVector& s, double p);

/// ||a^{-1/2} X a^{-1/2}||_p.
double weighted_norm(const ComplexMatrix& x, const PositiveMatrix& a, double p);

PositiveMatrix matrix_power(const PositiveMatrix& a, double s);

/// a^{1/2} (a^{-1/2} b a^{-1/2})^t a^{1/2}, t in [0, 1].
PositiveMatrix gamma_path(const PositiveMatrix& a, const PositiveMatrix& b, double t);

/// ||a^{1/2} b^{-1} a^{1/2}||_inf, the comparison constant between the
/// b-weighted and a-weighted norms.
double weight_comparison_constant(const PositiveMatrix& a, const PositiveMatrix& b);

}  // namespace hylab
