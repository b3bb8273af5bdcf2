#include "hylab/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

#include "hylab/error.hpp"
#include "hylab/random.hpp"

namespace hylab {

OperatorField::OperatorField(FiniteAbelianGroup group, Eigen::Index dim, std::vector<ComplexMatrix> values)
    : group_(std::move(group)), dim_(dim), values_(std::move(values)) {
  require(dim_ >= 1, "OperatorField: dimension must be >= 1");
  require(values_.size() == group_.order(), "OperatorField: need one matrix per group element");
  for (const auto& v : values_) {
    require(v.rows() == dim_ && v.cols() == dim_, "OperatorField: all matrices must be d x d");
    require(v.allFinite(), "OperatorField: non-finite entry");
  }
}

OperatorField::OperatorField(FiniteAbelianGroup group, Eigen::Index dim)
    : group_(std::move(group)), dim_(dim) {
  require(dim_ >= 1, "OperatorField: dimension must be >= 1");
  values_.assign(group_.order(), ComplexMatrix::Zero(dim_, dim_));
}

double OperatorField::mass() const {
  double s = 0.0;
  for (const auto& v : values_) s += v.squaredNorm();
  return group_.haar_weight() * s;
}

bool OperatorField::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const ComplexMatrix& v) { return v.isZero(0.0); });
}

OperatorField OperatorField::scaled(std::complex<double> s) const {
  OperatorField r = *this;
  for (auto& v : r.values_) v *= s;
  return r;
}

OperatorField OperatorField::with_haar_scale(double s) const {
  return OperatorField(group_.rescaled(s), dim_, values_);
}

OperatorField OperatorField::translated(const GroupElement& eta) const {
  OperatorField r(group_, dim_);
  const GroupElement minus_eta = group_.negate(eta);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const std::size_t src = group_.index_of(group_.add(group_.element_at(i), minus_eta));
    r.values_[i] = values_[src];
  }
  return r;
}

OperatorField random_field(const FiniteAbelianGroup& group, Eigen::Index dim, Rng& rng) {
  std::vector<ComplexMatrix> values;
  values.reserve(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) values.push_back(rng.gaussian_matrix(dim));
  return OperatorField(group, dim, std::move(values));
}

OperatorField delta_field(const FiniteAbelianGroup& group, const ComplexMatrix& a, std::size_t element_index) {
  require(element_index < group.order(), "delta_field: element index out of range");
  OperatorField f(group, a.rows());
  f[element_index] = a;
  return f;
}

DualOperatorField fourier_transform(const OperatorField& field) {
  const auto& g = field.group();
  const std::size_t n = g.order();
  // Phase table by (xi . theta) is cheap to rebuild; unit roots are
  // evaluated per pair from the reduced rational phase.
  OperatorField out(g, field.dim());
  for (std::size_t k = 0; k < n; ++k) {
    ComplexMatrix acc = ComplexMatrix::Zero(field.dim(), field.dim());
    for (std::size_t j = 0; j < n; ++j) {
      const Rational ph = g.phase(k, j);
      acc += field[j] * std::conj(unit_root(ph.num, ph.den));
    }
    out[k] = g.haar_weight() * acc;
  }
  return out;
}

namespace {

// The FFTW planner is not re-entrant; execution on distinct arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

DualOperatorField fourier_transform_fast(const OperatorField& field) {
  const auto& g = field.group();
  const std::size_t n = g.order();
  const auto d = static_cast<std::size_t>(field.dim());
  const std::size_t streams = d * d;

  std::vector<int> dims;
  for (auto f : g.factors())
    if (f > 1) dims.push_back(static_cast<int>(f));

  std::vector<std::complex<double>> in(n * streams), out(n * streams);
  for (std::size_t e = 0; e < n; ++e)
    std::copy_n(field[e].data(), streams, in.begin() + static_cast<std::ptrdiff_t>(e * streams));

  if (dims.empty()) {
    out = in;
  } else {
    auto* in_ptr = reinterpret_cast<fftw_complex*>(in.data());
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan = nullptr;
    {
      std::lock_guard lock(planner_mutex());
      plan = fftw_plan_many_dft(static_cast<int>(dims.size()), dims.data(), static_cast<int>(streams), in_ptr, nullptr,
                                static_cast<int>(streams), 1, out_ptr, nullptr, static_cast<int>(streams), 1,
                                FFTW_FORWARD, FFTW_ESTIMATE);
    }
    require(plan != nullptr, "fourier_transform_fast: FFTW planning failed");
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  OperatorField result(g, field.dim());
  const double c = g.haar_weight();
  for (std::size_t k = 0; k < n; ++k) {
    std::copy_n(out.begin() + static_cast<std::ptrdiff_t>(k * streams), streams, result[k].data());
    result[k] *= c;
  }
  return result;
}

ParsevalDefect parseval_defect(const OperatorField& field, TransformPath path) {
  const DualOperatorField dual =
      path == TransformPath::Fast ? fourier_transform_fast(field) : fourier_transform(field);
  const auto d = field.dim();
  ComplexMatrix lhs = ComplexMatrix::Zero(d, d), rhs = ComplexMatrix::Zero(d, d);
  for (const auto& b : dual.values()) lhs.noalias() += b.adjoint() * b;
  for (const auto& a : field.values()) rhs.noalias() += a.adjoint() * a;
  lhs *= field.group().dual_weight();
  rhs *= field.group().haar_weight();
  ParsevalDefect r;
  r.absolute = (lhs - rhs).norm();
  r.scale = field.mass();
  r.relative = r.scale > 0.0 ? r.absolute / r.scale : 0.0;
  return r;
}

double bochner_linearity_defect(const OperatorField& field, const LinearProbe& probe) {
  const double mu = field.group().haar_weight();
  const auto d = field.dim();
  ComplexMatrix integral = ComplexMatrix::Zero(d, d);
  for (const auto& a : field.values()) integral += mu * a;

  return std::visit(
      [&](const auto& pr) -> double {
        using P = std::decay_t<decltype(pr)>;
        if constexpr (std::is_same_v<P, TraceProbe>) {
          std::complex<double> sum{0.0, 0.0};
          for (const auto& a : field.values()) sum += mu * a.trace();
          return std::abs(integral.trace() - sum);
        } else if constexpr (std::is_same_v<P, EntryProbe>) {
          require(pr.row >= 0 && pr.row < d && pr.col >= 0 && pr.col < d, "entry probe out of range");
          std::complex<double> sum{0.0, 0.0};
          for (const auto& a : field.values()) sum += mu * a(pr.row, pr.col);
          return std::abs(integral(pr.row, pr.col) - sum);
        } else {
          require(pr.left.rows() == d && pr.left.cols() == d && pr.right.rows() == d && pr.right.cols() == d,
                  "sandwich probe dimension mismatch");
          ComplexMatrix sum = ComplexMatrix::Zero(d, d);
          for (const auto& a : field.values()) sum += mu * (pr.left * a * pr.right);
          return (pr.left * integral * pr.right - sum).norm();
        }
      },
      probe);
}

double max_entry_deviation(const OperatorField& a, const OperatorField& b) {
  require(a.size() == b.size() && a.dim() == b.dim(), "field shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, (a[i] - b[i]).cwiseAbs().maxCoeff());
  return worst;
}

double relative_frobenius_deviation(const OperatorField& a, const OperatorField& b) {
  require(a.size() == b.size() && a.dim() == b.dim(), "field shape mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]).squaredNorm();
    den += b[i].squaredNorm();
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace hylab
