#pragma once

#include <map>
#include <string>
#include <vector>

#include "hylab/schatten.hpp"
#include "hylab/transform.hpp"

namespace hylab {

/// Relative slack allowed on lhs / (constant * rhs).
inline constexpr double kPassTolerance = 1e-9;

/// One verification: lhs <= constant * rhs.
struct InequalityReport {
  std::string name;
  double p = 0.0;
  double q = 0.0;  // kInfinity for the sup form
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 1.0;
  double ratio = 0.0;   // lhs / (constant * rhs); 1 when both sides vanish
  double margin = 0.0;  // constant * rhs - lhs
  bool pass = false;
  std::map<std::string, std::string> params;

  bool passes(double tol) const { return ratio <= 1.0 + tol; }
};

InequalityReport make_report(std::string name, double p, double q, double lhs, double rhs, double constant,
                             double tol = kPassTolerance);

/// p / (p - 1) evaluated in long double; kInfinity for p = 1.
double conjugate_exponent(double p);

/// sum_xi nu ||B_xi||_p^q  <=  (sum_theta mu ||A_theta||_p^p)^{q/p},  1 < p <= 2.
InequalityReport check_main(const OperatorField& field, double p, double tol = kPassTolerance);

/// max_xi ||B_xi||_1  <=  sum_theta mu ||A_theta||_1  (the q = infinity form).
InequalityReport check_main_sup(const OperatorField& field, double tol = kPassTolerance);

/// The six two-operator Clarkson-McCarthy bounds. Lower-bound variants put
/// the smaller side in lhs so every report reads lhs <= constant * rhs.
enum class ClarksonVariant {
  UpperPGe2,  // ||A+B||^p + ||A-B||^p <= 2^{p-1} (||A||^p + ||B||^p),   p >= 2
  LowerPGe2,  // 2 (||A||^p + ||B||^p) <= ||A+B||^p + ||A-B||^p,         p >= 2
  UpperPLe2,  // ||A+B||^p + ||A-B||^p <= 2 (||A||^p + ||B||^p),         1 <= p <= 2
  LowerPLe2,  // 2^{p-1} (||A||^p + ||B||^p) <= ||A+B||^p + ||A-B||^p,   1 <= p <= 2
  AltPGe2,    // ||A+B||^p + ||A-B||^p <= 2 (||A||^q + ||B||^q)^{p/q},   p >= 2
  DualPLe2,   // ||A+B||^q + ||A-B||^q <= 2^{q-1} (||A||^p + ||B||^p)^{q/p}, 1 < p <= 2
};

const char* to_string(ClarksonVariant v);
ClarksonVariant clarkson_variant_from_string(const std::string& s);
inline constexpr ClarksonVariant kAllClarksonVariants[] = {
    ClarksonVariant::UpperPGe2, ClarksonVariant::LowerPGe2, ClarksonVariant::UpperPLe2,
    ClarksonVariant::LowerPLe2, ClarksonVariant::AltPGe2,   ClarksonVariant::DualPLe2};
bool clarkson_admits(ClarksonVariant v, double p);

InequalityReport check_clarkson(const ComplexMatrix& a, const ComplexMatrix& b, double p, ClarksonVariant variant,
                                double tol = kPassTolerance);

/// sum_k ||sum_j omega_j^k A_j||_p^q <= n (sum_j ||A_j||_p^p)^{q/p}. For n = 2
/// the report also carries the Clarkson constant 2^{q-1} in params.
InequalityReport check_bhatia_kittaneh(const std::vector<ComplexMatrix>& tuple, double p,
                                       double tol = kPassTolerance);

/// check_main restricted to scalar (1 x 1) fields.
InequalityReport check_hausdorff_young(const OperatorField& field, double p, double tol = kPassTolerance);

enum class WeightDirection { AToGamma, GammaToA };
const char* to_string(WeightDirection d);

/// a_to_gamma: sum nu ||B||_{p,gamma}^q <= ||a^{1/2} b^{-1} a^{1/2}||^t (sum mu ||A||_{p,a}^p)^{q/p}
/// gamma_to_a: sum nu ||B||_{p,a}^q     <= ||b^{1/2} a^{-1} b^{1/2}||^t (sum mu ||A||_{p,gamma}^p)^{q/p}
/// with gamma = gamma_path(a, b, t). params["constant_tq"] records the
/// constant raised to t*q, the bound that follows from an operator-norm
/// estimate of size C^t between the q-th powers.
InequalityReport check_weighted(const OperatorField& field, double p, const PositiveMatrix& a,
                                const PositiveMatrix& b, double t, WeightDirection direction,
                                double tol = kPassTolerance);

/// ||X||_{p,b} <= ||a^{1/2} b^{-1} a^{1/2}|| ||X||_{p,a}.
InequalityReport check_weight_comparison(const ComplexMatrix& x, const PositiveMatrix& a, const PositiveMatrix& b,
                                         double p, double tol = kPassTolerance);

/// theta -> left * A_theta * right.
OperatorField sandwich(const OperatorField& field, const ComplexMatrix& left, const ComplexMatrix& right);

}  // namespace hylab
