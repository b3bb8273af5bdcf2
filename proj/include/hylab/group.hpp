#pragma once

// Finite abelian groups written as products of cyclic factors, with a Haar
// weight on G and the matching dual (Plancherel) weight on the character
// group. Concrete models for truncated p-adic groups and R^n grids are
// built on top of the same representation.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hylab {

using Complex = std::complex<double>;

/// Exact rational number with a positive denominator, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
/// Representative of r modulo 1 in [0, 1).
Rational mod_one(const Rational& r);

/// exp(2 pi i k / n) evaluated from the reduced phase k mod n. Quarter turns
/// are exact; other angles are folded into [0, pi/4] before calling sin/cos.
Complex unit_root(std::int64_t k, std::int64_t n);

struct GroupElement {
  std::vector<std::int64_t> residues;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Characters of Z_{n_1} x ... x Z_{n_k} are labelled by dual residues m_i;
/// the character is theta -> exp(2 pi i sum_j m_j r_j / n_j).
struct Character {
  std::vector<std::int64_t> dual_residues;
  friend bool operator==(const Character&, const Character&) = default;
};

class FiniteAbelianGroup {
public:
  /// Throws ValidationError on a factor < 1, a non-positive or non-finite
  /// weight, or an order that does not fit the enumeration budget.
  FiniteAbelianGroup(std::vector<std::int64_t> factors, double haar_weight);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t order() const { return order_; }
  double haar_weight() const { return haar_weight_; }
  /// 1 / (c |G|): the unique dual weight for which Fourier inversion holds.
  double dual_weight() const { return 1.0 / (haar_weight_ * static_cast<double>(order_)); }
  double total_measure() const { return haar_weight_ * static_cast<double>(order_); }

  /// Same group, Haar weight multiplied by s.
  FiniteAbelianGroup rescaled(double s) const;

  // Row-major enumeration: the last factor varies fastest.
  std::size_t index_of(const GroupElement& element) const;
  GroupElement element_at(std::size_t index) const;
  std::size_t index_of(const Character& character) const;
  Character character_at(std::size_t index) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement identity() const;

  /// Reduced phase of xi(theta) as a rational in [0, 1).
  Rational phase(const Character& xi, const GroupElement& theta) const;
  /// Phase by enumeration indices; no bounds validation beyond index range.
  Rational phase(std::size_t character_index, std::size_t element_index) const;

  /// Human-readable spec string, e.g. "Z4xZ3".
  std::string describe() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
  void validate(const std::vector<std::int64_t>& residues, const char* what) const;

  std::vector<std::int64_t> factors_;
  double haar_weight_;
  std::size_t order_;
};

FiniteAbelianGroup make_group(std::vector<std::int64_t> factors, double haar_weight);

/// xi(theta); validates residues against the factor orders.
Complex char_eval(const FiniteAbelianGroup& group, const Character& xi, const GroupElement& theta);

/// max_t |f(t) - sum_xi nu f^(xi) xi(t)| with f^(xi) = sum_theta mu f(theta) conj(xi(theta)),
/// by direct double sums.
double inversion_defect(const FiniteAbelianGroup& group, const std::vector<Complex>& f);

/// Truncated p-adic group p^{-m} Z_p / p^M Z_p, identified with Z_{p^{m+M}}.
/// Element j stands for x = j p^{-m} (mod p^M); each coset carries measure
/// p^{-M} so that Z_p has measure one.
class PAdicModel {
public:
  PAdicModel(std::int64_t prime, int depth_neg, int depth_pos);

  std::int64_t prime() const { return prime_; }
  int depth_neg() const { return depth_neg_; }
  int depth_pos() const { return depth_pos_; }
  const FiniteAbelianGroup& group() const { return group_; }

  /// Canonical representative x = j p^{-m} in [0, p^M).
  Rational value(std::size_t element_index) const;
  /// Dual variable xi = k p^{-M} (mod p^m) labelling character k.
  Rational dual_value(std::size_t character_index) const;
  /// {x}_p: sum of the negative-power digits of x.
  Rational frac_part(std::size_t element_index) const;
  /// {xi x}_p for character k and element j; chi_p(xi x) = exp(2 pi i {xi x}_p).
  Rational pairing_phase(std::size_t character_index, std::size_t element_index) const;
  /// p-adic norm |x|_p of the canonical representative (0 for x = 0).
  double norm(std::size_t element_index) const;

private:
  std::int64_t prime_;
  int depth_neg_;
  int depth_pos_;
  std::int64_t modulus_;  // p^{m+M}
  FiniteAbelianGroup group_;
};

PAdicModel make_padic(std::int64_t prime, int depth_neg, int depth_pos);
Rational frac_part(const PAdicModel& model, std::size_t element_index);
bool is_prime(std::int64_t n);

/// (Z_N)^n with cell volume h^n. Index j along an axis stands for the
/// coordinate (j - N/2) h when centred coordinates are requested.
class GridModel {
public:
  GridModel(int dimension, std::int64_t points_per_axis, double cell_width);

  int dimension() const { return dimension_; }
  std::int64_t points_per_axis() const { return points_; }
  double cell_width() const { return cell_width_; }
  const FiniteAbelianGroup& group() const { return group_; }
  std::vector<double> coordinates(std::size_t element_index) const;

private:
  int dimension_;
  std::int64_t points_;
  double cell_width_;
  FiniteAbelianGroup group_;
};

GridModel make_grid(int dimension, std::int64_t points_per_axis, double cell_width);

/// Parses "Z4xZ3", "Z2^5", "padic:p=2,m=2,M=3", "grid:n=1,N=64,h=0.125"
/// (case-insensitive except for the m/M keys of the p-adic form).
FiniteAbelianGroup parse_group_spec(std::string_view spec);

/// Largest |G| any constructor accepts.
inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 22;

}  // namespace hylab
