#pragma once

// Operator-valued Fourier transform over a finite abelian group:
//   B_xi = sum_theta mu(theta) A_theta conj(xi(theta)).

#include <variant>
#include <vector>

#include "hylab/group.hpp"
#include "hylab/schatten.hpp"

namespace hylab {

class Rng;

/// theta -> A_theta, one d x d matrix per group element in enumeration order.
class OperatorField {
public:
  OperatorField(FiniteAbelianGroup group, Eigen::Index dim, std::vector<ComplexMatrix> values);
  /// All-zero field.
  OperatorField(FiniteAbelianGroup group, Eigen::Index dim);

  const FiniteAbelianGroup& group() const { return group_; }
  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<ComplexMatrix>& values() const { return values_; }
  const ComplexMatrix& operator[](std::size_t i) const { return values_[i]; }
  ComplexMatrix& operator[](std::size_t i) { return values_[i]; }

  /// sum_theta mu(theta) ||A_theta||_F^2.
  double mass() const;
  bool is_zero() const;

  OperatorField scaled(std::complex<double> s) const;
  /// Same values on the same group with Haar weight multiplied by s.
  OperatorField with_haar_scale(double s) const;
  /// theta -> A_{theta - eta}.
  OperatorField translated(const GroupElement& eta) const;

private:
  FiniteAbelianGroup group_;
  Eigen::Index dim_;
  std::vector<ComplexMatrix> values_;
};

/// xi -> B_xi, indexed by character enumeration order. The dual weight is
/// group().dual_weight().
using DualOperatorField = OperatorField;

/// Independent standard complex Gaussian entries.
OperatorField random_field(const FiniteAbelianGroup& group, Eigen::Index dim, Rng& rng);
/// A placed at one element, zero elsewhere.
OperatorField delta_field(const FiniteAbelianGroup& group, const ComplexMatrix& a, std::size_t element_index = 0);

/// Direct O(|G|^2 d^2) double sum.
DualOperatorField fourier_transform(const OperatorField& field);
/// Multidimensional FFT over the cyclic factors applied to each of the d^2
/// entry streams.
DualOperatorField fourier_transform_fast(const OperatorField& field);

enum class TransformPath { Naive, Fast };

struct ParsevalDefect {
  double absolute = 0.0;  // ||sum nu B*B - sum mu A*A||_F
  double scale = 0.0;     // sum mu ||A||_F^2
  double relative = 0.0;  // absolute / scale (0 for the zero field)
};

ParsevalDefect parseval_defect(const OperatorField& field, TransformPath path = TransformPath::Fast);

/// Bounded linear maps used to exercise the finite Bochner-sum linearity.
struct TraceProbe {};
struct EntryProbe {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
};
/// X -> left * X * right (left or right may be the identity).
struct SandwichProbe {
  ComplexMatrix left;
  ComplexMatrix right;
};
using LinearProbe = std::variant<TraceProbe, EntryProbe, SandwichProbe>;

/// |probe(sum mu A) - sum mu probe(A)|, Frobenius norm for matrix-valued probes.
double bochner_linearity_defect(const OperatorField& field, const LinearProbe& probe);

/// Largest entrywise deviation between two dual fields.
double max_entry_deviation(const OperatorField& a, const OperatorField& b);
/// sqrt(sum ||a_i - b_i||_F^2) / sqrt(sum ||b_i||_F^2).
double relative_frobenius_deviation(const OperatorField& a, const OperatorField& b);

}  // namespace hylab
