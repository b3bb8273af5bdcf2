#include "hylab/inequalities.hpp"

#include <cmath>
#include <sstream>

#include "hylab/error.hpp"

namespace hylab {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_main_range(double p) {
  require(std::isfinite(p) && p > 1.0 && p <= 2.0, "p must satisfy 1 < p <= 2 (use the sup form for p = 1)");
}

}  // namespace

InequalityReport make_report(std::string name, double p, double q, double lhs, double rhs, double constant,
                             double tol) {
  InequalityReport r;
  r.name = std::move(name);
  r.p = p;
  r.q = q;
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant = constant;
  const double bound = constant * rhs;
  if (lhs == 0.0 && bound == 0.0) {
    r.ratio = 1.0;
  } else {
    r.ratio = bound > 0.0 ? lhs / bound : kInfinity;
  }
  r.margin = bound - lhs;
  r.pass = std::isfinite(lhs) && std::isfinite(rhs) && r.passes(tol);
  return r;
}

double conjugate_exponent(double p) {
  require(p >= 1.0, "conjugate exponent needs p >= 1");
  if (p == 1.0) return kInfinity;
  if (std::isinf(p)) return 1.0;
  const long double lp = p;
  return static_cast<double>(lp / (lp - 1.0L));
}

InequalityReport check_main(const OperatorField& field, double p, double tol) {
  require_main_range(p);
  const double q = conjugate_exponent(p);
  const DualOperatorField dual = fourier_transform_fast(field);
  const auto& g = field.group();

  double lhs = 0.0;
  for (const auto& b : dual.values()) lhs += std::pow(schatten_norm(b, p), q);
  lhs *= g.dual_weight();

  double inner = 0.0;
  for (const auto& a : field.values()) inner += std::pow(schatten_norm(a, p), p);
  inner *= g.haar_weight();
  const double rhs = std::pow(inner, q / p);

  auto r = make_report("main", p, q, lhs, rhs, 1.0, tol);
  r.params["group"] = g.describe();
  r.params["haar_weight"] = fmt(g.haar_weight());
  r.params["d"] = std::to_string(field.dim());
  return r;
}

InequalityReport check_main_sup(const OperatorField& field, double tol) {
  const DualOperatorField dual = fourier_transform_fast(field);
  double lhs = 0.0;
  for (const auto& b : dual.values()) lhs = std::max(lhs, schatten_norm(b, 1.0));
  double rhs = 0.0;
  for (const auto& a : field.values()) rhs += schatten_norm(a, 1.0);
  rhs *= field.group().haar_weight();
  auto r = make_report("main_sup", 1.0, kInfinity, lhs, rhs, 1.0, tol);
  r.params["group"] = field.group().describe();
  r.params["haar_weight"] = fmt(field.group().haar_weight());
  r.params["d"] = std::to_string(field.dim());
  return r;
}

const char* to_string(ClarksonVariant v) {
  switch (v) {
    case ClarksonVariant::UpperPGe2: return "upper_p>=2";
    case ClarksonVariant::LowerPGe2: return "lower_p>=2";
    case ClarksonVariant::UpperPLe2: return "upper_p<=2";
    case ClarksonVariant::LowerPLe2: return "lower_p<=2";
    case ClarksonVariant::AltPGe2: return "alt_p>=2";
    case ClarksonVariant::DualPLe2: return "dual_p<=2";
  }
  return "unknown";
}

ClarksonVariant clarkson_variant_from_string(const std::string& s) {
  for (auto v : kAllClarksonVariants)
    if (s == to_string(v)) return v;
  throw ValidationError("unknown Clarkson variant '" + s + "'");
}

bool clarkson_admits(ClarksonVariant v, double p) {
  if (!std::isfinite(p)) return false;
  switch (v) {
    case ClarksonVariant::UpperPGe2:
    case ClarksonVariant::LowerPGe2:
    case ClarksonVariant::AltPGe2: return p >= 2.0;
    case ClarksonVariant::UpperPLe2:
    case ClarksonVariant::LowerPLe2: return p >= 1.0 && p <= 2.0;
    case ClarksonVariant::DualPLe2: return p > 1.0 && p <= 2.0;
  }
  return false;
}

InequalityReport check_clarkson(const ComplexMatrix& a, const ComplexMatrix& b, double p, ClarksonVariant variant,
                                double tol) {
  require(clarkson_admits(variant, p), std::string("p outside the range of Clarkson variant ") + to_string(variant));
  require(a.rows() == b.rows() && a.cols() == b.cols(), "check_clarkson: dimension mismatch");
  const double q = conjugate_exponent(p);
  const double na = schatten_norm(a, p), nb = schatten_norm(b, p);
  const double ns = schatten_norm(a + b, p), nd = schatten_norm(a - b, p);
  const double sum_pp = std::pow(na, p) + std::pow(nb, p);
  const double pm_p = std::pow(ns, p) + std::pow(nd, p);

  InequalityReport r;
  const std::string name = std::string("clarkson:") + to_string(variant);
  switch (variant) {
    case ClarksonVariant::UpperPGe2: r = make_report(name, p, q, pm_p, sum_pp, std::pow(2.0, p - 1.0), tol); break;
    case ClarksonVariant::LowerPGe2: r = make_report(name, p, q, 2.0 * sum_pp, pm_p, 1.0, tol); break;
    case ClarksonVariant::UpperPLe2: r = make_report(name, p, q, pm_p, sum_pp, 2.0, tol); break;
    case ClarksonVariant::LowerPLe2: r = make_report(name, p, q, std::pow(2.0, p - 1.0) * sum_pp, pm_p, 1.0, tol); break;
    case ClarksonVariant::AltPGe2: {
      const double rhs = std::pow(std::pow(na, q) + std::pow(nb, q), p / q);
      r = make_report(name, p, q, pm_p, rhs, 2.0, tol);
      break;
    }
    case ClarksonVariant::DualPLe2: {
      const double lhs = std::pow(ns, q) + std::pow(nd, q);
      r = make_report(name, p, q, lhs, std::pow(sum_pp, q / p), std::pow(2.0, q - 1.0), tol);
      break;
    }
  }
  r.params["d"] = std::to_string(a.rows());
  return r;
}

InequalityReport check_bhatia_kittaneh(const std::vector<ComplexMatrix>& tuple, double p, double tol) {
  require_main_range(p);
  const auto n = static_cast<std::int64_t>(tuple.size());
  require(n >= 2, "check_bhatia_kittaneh: need at least two operators");
  const auto d = tuple.front().rows();
  for (const auto& a : tuple) require(a.rows() == d && a.cols() == d, "check_bhatia_kittaneh: dimension mismatch");
  const double q = conjugate_exponent(p);

  double lhs = 0.0;
  for (std::int64_t k = 0; k < n; ++k) {
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (std::int64_t j = 0; j < n; ++j) s += unit_root(j * k, n) * tuple[static_cast<std::size_t>(j)];
    lhs += std::pow(schatten_norm(s, p), q);
  }
  double inner = 0.0;
  for (const auto& a : tuple) inner += std::pow(schatten_norm(a, p), p);
  auto r = make_report("bhatia_kittaneh", p, q, lhs, std::pow(inner, q / p), static_cast<double>(n), tol);
  r.params["n"] = std::to_string(n);
  r.params["d"] = std::to_string(d);
  if (n == 2) {
    const double c2 = std::pow(2.0, q - 1.0);
    r.params["clarkson_constant"] = fmt(c2);
    r.params["clarkson_ratio"] = fmt(r.rhs > 0.0 ? lhs / (c2 * r.rhs) : 1.0);
  }
  return r;
}

InequalityReport check_hausdorff_young(const OperatorField& field, double p, double tol) {
  require(field.dim() == 1, "check_hausdorff_young: field must be scalar (d = 1)");
  auto r = check_main(field, p, tol);
  r.name = "hausdorff_young";
  return r;
}

const char* to_string(WeightDirection d) {
  return d == WeightDirection::AToGamma ? "a_to_gamma" : "gamma_to_a";
}

OperatorField sandwich(const OperatorField& field, const ComplexMatrix& left, const ComplexMatrix& right) {
  std::vector<ComplexMatrix> values;
  values.reserve(field.size());
  for (const auto& a : field.values()) values.push_back(left * a * right);
  return OperatorField(field.group(), field.dim(), std::move(values));
}

InequalityReport check_weighted(const OperatorField& field, double p, const PositiveMatrix& a,
                                const PositiveMatrix& b, double t, WeightDirection direction, double tol) {
  require_main_range(p);
  require(a.dim() == field.dim() && b.dim() == field.dim(), "check_weighted: weight dimension mismatch");
  require(t >= 0.0 && t <= 1.0, "check_weighted: t must lie in [0, 1]");
  const double q = conjugate_exponent(p);
  const PositiveMatrix gamma = gamma_path(a, b, t);

  const PositiveMatrix& target = direction == WeightDirection::AToGamma ? gamma : a;
  const PositiveMatrix& source = direction == WeightDirection::AToGamma ? a : gamma;
  const double kernel =
      direction == WeightDirection::AToGamma ? weight_comparison_constant(a, b) : weight_comparison_constant(b, a);

  const ComplexMatrix tw = target.power_matrix(-0.5);
  const ComplexMatrix sw = source.power_matrix(-0.5);
  const DualOperatorField dual = fourier_transform_fast(field);
  const auto& g = field.group();

  double lhs = 0.0;
  for (const auto& bx : dual.values()) lhs += std::pow(schatten_norm(tw * bx * tw, p), q);
  lhs *= g.dual_weight();
  double inner = 0.0;
  for (const auto& at : field.values()) inner += std::pow(schatten_norm(sw * at * sw, p), p);
  inner *= g.haar_weight();
  const double rhs = std::pow(inner, q / p);

  auto r = make_report(std::string("weighted:") + to_string(direction), p, q, lhs, rhs, std::pow(kernel, t), tol);
  r.params["group"] = g.describe();
  r.params["d"] = std::to_string(field.dim());
  r.params["t"] = fmt(t);
  r.params["kernel_norm"] = fmt(kernel);
  r.params["constant_tq"] = fmt(std::pow(kernel, t * q));
  return r;
}

InequalityReport check_weight_comparison(const ComplexMatrix& x, const PositiveMatrix& a, const PositiveMatrix& b,
                                         double p, double tol) {
  const double lhs = weighted_norm(x, b, p);
  const double rhs = weighted_norm(x, a, p);
  auto r = make_report("weight_comparison", p, conjugate_exponent(p), lhs, rhs, weight_comparison_constant(a, b), tol);
  r.params["d"] = std::to_string(x.rows());
  return r;
}

}  // namespace hylab
