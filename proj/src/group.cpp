#include "hylab/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hylab/error.hpp"

namespace hylab {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  require(den != 0, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t l = std::lcm(a.den, b.den);
  return Rational::make(a.num * (l / a.den) + b.num * (l / b.den), l);
}

Rational operator*(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num, b.den);
  const std::int64_t g2 = std::gcd(b.num, a.den);
  const std::int64_t n1 = g1 ? a.num / g1 : a.num;
  const std::int64_t d2 = g1 ? b.den / g1 : b.den;
  const std::int64_t n2 = g2 ? b.num / g2 : b.num;
  const std::int64_t d1 = g2 ? a.den / g2 : a.den;
  return Rational::make(n1 * n2, d1 * d2);
}

Rational mod_one(const Rational& r) {
  std::int64_t n = r.num % r.den;
  if (n < 0) n += r.den;
  return Rational::make(n, r.den);
}

Complex unit_root(std::int64_t k, std::int64_t n) {
  require(n >= 1, "unit_root: order must be positive");
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return {1.0, 0.0};
  // Exact quarter turns.
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  // Fold into the first octant using 8k/n, keeping the remainder exact.
  const std::int64_t octant = (8 * k) / n;
  const std::int64_t rem = 8 * k - octant * n;  // angle = (octant + rem/n) * pi/4
  const double quarter_pi = std::numbers::pi / 4.0;
  double c = 0.0, s = 0.0;
  if (octant % 2 == 0) {
    const double x = quarter_pi * static_cast<double>(rem) / static_cast<double>(n);
    c = std::cos(x);
    s = std::sin(x);
  } else {
    const double x = quarter_pi * static_cast<double>(n - rem) / static_cast<double>(n);
    c = std::sin(x);
    s = std::cos(x);
  }
  // (c, s) is the point at angle octant_base + local; rotate by quarter turns.
  switch (octant) {
    case 0: case 1: return {c, s};
    case 2: case 3: return {-s, c};
    case 4: case 5: return {-c, -s};
    default: return {s, -c};
  }
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> factors, double haar_weight)
    : factors_(std::move(factors)), haar_weight_(haar_weight), order_(1) {
  require(!factors_.empty(), "group needs at least one cyclic factor");
  require(std::isfinite(haar_weight_) && haar_weight_ > 0.0, "haar weight must be positive and finite");
  for (auto n : factors_) {
    require(n >= 1, "cyclic factor orders must be >= 1");
    require(static_cast<std::size_t>(n) <= kMaxGroupOrder && order_ * static_cast<std::size_t>(n) <= kMaxGroupOrder,
            "group order exceeds the enumeration budget");
    order_ *= static_cast<std::size_t>(n);
  }
}

FiniteAbelianGroup FiniteAbelianGroup::rescaled(double s) const {
  return FiniteAbelianGroup(factors_, haar_weight_ * s);
}

void FiniteAbelianGroup::validate(const std::vector<std::int64_t>& residues, const char* what) const {
  require(residues.size() == factors_.size(), std::string(what) + ": wrong number of residues");
  for (std::size_t i = 0; i < residues.size(); ++i)
    require(residues[i] >= 0 && residues[i] < factors_[i], std::string(what) + ": residue out of range");
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& element) const {
  validate(element.residues, "element");
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    index = index * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(element.residues[i]);
  return index;
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const {
  require(index < order_, "element index out of range");
  GroupElement e{std::vector<std::int64_t>(factors_.size())};
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto n = static_cast<std::size_t>(factors_[i]);
    e.residues[i] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return e;
}

std::size_t FiniteAbelianGroup::index_of(const Character& character) const {
  return index_of(GroupElement{character.dual_residues});
}

Character FiniteAbelianGroup::character_at(std::size_t index) const {
  return Character{element_at(index).residues};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  validate(a.residues, "element");
  validate(b.residues, "element");
  GroupElement r{a.residues};
  for (std::size_t i = 0; i < factors_.size(); ++i) r.residues[i] = (a.residues[i] + b.residues[i]) % factors_[i];
  return r;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  validate(a.residues, "element");
  GroupElement r{a.residues};
  for (std::size_t i = 0; i < factors_.size(); ++i) r.residues[i] = (factors_[i] - a.residues[i]) % factors_[i];
  return r;
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

Rational FiniteAbelianGroup::phase(const Character& xi, const GroupElement& theta) const {
  validate(xi.dual_residues, "character");
  validate(theta.residues, "element");
  Rational total{0, 1};
  for (std::size_t i = 0; i < factors_.size(); ++i)
    total = mod_one(total + Rational::make((xi.dual_residues[i] * theta.residues[i]) % factors_[i], factors_[i]));
  return total;
}

Rational FiniteAbelianGroup::phase(std::size_t character_index, std::size_t element_index) const {
  return phase(character_at(character_index), element_at(element_index));
}

std::string FiniteAbelianGroup::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "x" : "") << 'Z' << factors_[i];
  return os.str();
}

FiniteAbelianGroup make_group(std::vector<std::int64_t> factors, double haar_weight) {
  return FiniteAbelianGroup(std::move(factors), haar_weight);
}

Complex char_eval(const FiniteAbelianGroup& group, const Character& xi, const GroupElement& theta) {
  const Rational ph = group.phase(xi, theta);
  return unit_root(ph.num, ph.den);
}

double inversion_defect(const FiniteAbelianGroup& group, const std::vector<Complex>& f) {
  const std::size_t n = group.order();
  require(f.size() == n, "inversion_defect: field size does not match group order");
  const double mu = group.haar_weight();
  const double nu = group.dual_weight();

  std::vector<Complex> fhat(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      const Rational ph = group.phase(k, j);
      acc += f[j] * std::conj(unit_root(ph.num, ph.den));
    }
    fhat[k] = mu * acc;
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      const Rational ph = group.phase(k, j);
      acc += fhat[k] * unit_root(ph.num, ph.den);
    }
    worst = std::max(worst, std::abs(f[j] - nu * acc));
  }
  return worst;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::int64_t checked_power(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) {
    require(r <= static_cast<std::int64_t>(kMaxGroupOrder) / base, "p-adic model exceeds the enumeration budget");
    r *= base;
  }
  return r;
}

FiniteAbelianGroup padic_group(std::int64_t prime, int depth_neg, int depth_pos) {
  require(is_prime(prime), "p-adic model requires a prime p");
  require(depth_neg >= 0 && depth_pos >= 0, "p-adic depths must be non-negative");
  const std::int64_t modulus = checked_power(prime, depth_neg + depth_pos);
  return FiniteAbelianGroup({modulus}, 1.0 / static_cast<double>(checked_power(prime, depth_pos)));
}

}  // namespace

PAdicModel::PAdicModel(std::int64_t prime, int depth_neg, int depth_pos)
    : prime_(prime),
      depth_neg_(depth_neg),
      depth_pos_(depth_pos),
      modulus_(0),
      group_(padic_group(prime, depth_neg, depth_pos)) {
  modulus_ = group_.factors().front();
}

Rational PAdicModel::value(std::size_t element_index) const {
  require(element_index < group_.order(), "p-adic element index out of range");
  return Rational::make(static_cast<std::int64_t>(element_index), checked_power(prime_, depth_neg_));
}

Rational PAdicModel::dual_value(std::size_t character_index) const {
  require(character_index < group_.order(), "p-adic character index out of range");
  return Rational::make(static_cast<std::int64_t>(character_index), checked_power(prime_, depth_pos_));
}

Rational PAdicModel::frac_part(std::size_t element_index) const {
  require(element_index < group_.order(), "p-adic element index out of range");
  const std::int64_t scale = checked_power(prime_, depth_neg_);
  return Rational::make(static_cast<std::int64_t>(element_index) % scale, scale);
}

Rational PAdicModel::pairing_phase(std::size_t character_index, std::size_t element_index) const {
  require(character_index < group_.order() && element_index < group_.order(), "p-adic index out of range");
  // xi x = k j p^{-(m+M)}; the integer part lies in Z_p, so only kj mod p^{m+M} matters.
  const auto k = static_cast<std::int64_t>(character_index);
  const auto j = static_cast<std::int64_t>(element_index);
  return Rational::make((k * j) % modulus_, modulus_);
}

double PAdicModel::norm(std::size_t element_index) const {
  const Rational x = value(element_index);
  if (x.num == 0) return 0.0;
  int k = 0;
  for (std::int64_t n = x.num; n % prime_ == 0; n /= prime_) ++k;
  for (std::int64_t d = x.den; d % prime_ == 0; d /= prime_) --k;
  return std::pow(static_cast<double>(prime_), -k);
}

PAdicModel make_padic(std::int64_t prime, int depth_neg, int depth_pos) {
  return PAdicModel(prime, depth_neg, depth_pos);
}

Rational frac_part(const PAdicModel& model, std::size_t element_index) {
  return model.frac_part(element_index);
}

namespace {

FiniteAbelianGroup grid_group(int dimension, std::int64_t points, double h) {
  require(dimension >= 1, "grid dimension must be >= 1");
  require(points >= 1, "grid needs at least one point per axis");
  require(std::isfinite(h) && h > 0.0, "grid cell width must be positive");
  return FiniteAbelianGroup(std::vector<std::int64_t>(static_cast<std::size_t>(dimension), points),
                            std::pow(h, dimension));
}

}  // namespace

GridModel::GridModel(int dimension, std::int64_t points_per_axis, double cell_width)
    : dimension_(dimension),
      points_(points_per_axis),
      cell_width_(cell_width),
      group_(grid_group(dimension, points_per_axis, cell_width)) {}

std::vector<double> GridModel::coordinates(std::size_t element_index) const {
  const GroupElement e = group_.element_at(element_index);
  std::vector<double> x(e.residues.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = static_cast<double>(e.residues[i] - points_ / 2) * cell_width_;
  return x;
}

GridModel make_grid(int dimension, std::int64_t points_per_axis, double cell_width) {
  return GridModel(dimension, points_per_axis, cell_width);
}

namespace {

std::string lower(std::string_view s) {
  std::string r(s);
  std::transform(r.begin(), r.end(), r.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return r;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(std::string_view s, std::string_view spec) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  require(ec == std::errc{} && ptr == end && !s.empty(), "bad integer '" + std::string(s) + "' in group spec '" +
                                                             std::string(spec) + "'");
  return v;
}

double parse_real(std::string_view s, std::string_view spec) {
  std::string tmp(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tmp, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == tmp.size() && !tmp.empty(), "bad number '" + tmp + "' in group spec '" + std::string(spec) + "'");
  return v;
}

// key=value list; keys are compared case-sensitively since m/M and n/N differ.
std::vector<std::pair<std::string, std::string>> parse_keyvals(std::string_view body, std::string_view spec) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto comma = body.find(',', pos);
    const auto item = trim(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    const auto eq = item.find('=');
    require(eq != std::string::npos, "expected key=value in group spec '" + std::string(spec) + "'");
    out.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

FiniteAbelianGroup parse_group_spec(std::string_view raw) {
  const std::string spec = trim(raw);
  const std::string low = lower(spec);
  require(!spec.empty(), "empty group spec");

  if (low.rfind("padic:", 0) == 0) {
    std::int64_t p = -1, m = -1, M = -1;
    for (const auto& [key, val] : parse_keyvals(std::string_view(spec).substr(6), spec)) {
      if (key == "p" || key == "P") p = parse_int(val, spec);
      else if (key == "m") m = parse_int(val, spec);
      else if (key == "M") M = parse_int(val, spec);
      else throw ValidationError("unknown key '" + key + "' in p-adic spec '" + spec + "'");
    }
    require(p > 0 && m >= 0 && M >= 0, "p-adic spec needs p, m and M: '" + spec + "'");
    require(m < 64 && M < 64, "p-adic depth too large");
    return PAdicModel(p, static_cast<int>(m), static_cast<int>(M)).group();
  }
  if (low.rfind("grid:", 0) == 0) {
    std::int64_t n = -1, N = -1;
    double h = -1.0;
    for (const auto& [key, val] : parse_keyvals(std::string_view(spec).substr(5), spec)) {
      if (key == "n") n = parse_int(val, spec);
      else if (key == "N") N = parse_int(val, spec);
      else if (key == "h" || key == "H") h = parse_real(val, spec);
      else throw ValidationError("unknown key '" + key + "' in grid spec '" + spec + "'");
    }
    require(n >= 1 && n <= 16 && N >= 1 && h > 0.0, "grid spec needs n, N and h: '" + spec + "'");
    return GridModel(static_cast<int>(n), N, h).group();
  }

  // Cyclic products: Z<n>[^<k>] joined by 'x'.
  std::vector<std::int64_t> factors;
  std::size_t pos = 0;
  while (pos < low.size()) {
    const auto next = low.find('x', pos);
    const std::string term = trim(std::string_view(low).substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    require(term.size() >= 2 && term[0] == 'z', "bad cyclic factor '" + term + "' in group spec '" + spec + "'");
    const auto caret = term.find('^');
    const std::int64_t order = parse_int(std::string_view(term).substr(1, caret == std::string::npos ? std::string::npos : caret - 1), spec);
    const std::int64_t reps = caret == std::string::npos ? 1 : parse_int(std::string_view(term).substr(caret + 1), spec);
    require(order >= 1 && reps >= 1 && reps <= 64, "bad cyclic factor '" + term + "' in group spec '" + spec + "'");
    for (std::int64_t r = 0; r < reps; ++r) factors.push_back(order);
    if (next == std::string::npos) break;
    pos = next + 1;
    require(pos < low.size(), "dangling 'x' in group spec '" + spec + "'");
  }
  return FiniteAbelianGroup(std::move(factors), 1.0);
}

}  // namespace hylab
