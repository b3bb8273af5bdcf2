// Acceptance suite: one PASS/FAIL line per criterion, indented detail lines
// below it. `acceptance --criterion N` runs a single criterion and exits
// non-zero iff it fails.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hylab/campaign.hpp"
#include "hylab/extremal.hpp"
#include "hylab/inequalities.hpp"
#include "hylab/random.hpp"

using namespace hylab;

namespace {

constexpr double kSweep[] = {1.1, 1.25, 1.5, 1.75, 2.0};

std::vector<FiniteAbelianGroup> group_matrix() {
  return {make_group({2}, 1.0),       make_group({3}, 1.0),          make_group({8}, 1.0),
          make_group({4, 3}, 1.0),    make_group({2, 2, 2, 2}, 1.0), make_padic(2, 1, 2).group(),
          make_grid(1, 16, 0.5).group()};
}

FiniteAbelianGroup counting(const FiniteAbelianGroup& g) { return g.rescaled(1.0 / g.haar_weight()); }

class Timer {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void clause(bool ok, const std::string& text) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok    " : "FAIL  ") + text);
  }
  void note(const std::string& text) { details.push_back("info  " + text); }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome c1_parseval() {
  Outcome o;
  Timer timer;
  const auto groups = group_matrix();
  const int dims[] = {1, 2, 4, 8};
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(derive_seed(1, {static_cast<std::uint64_t>(i)}));
    const auto f = random_field(groups[i % groups.size()], dims[(i / groups.size()) % 4], rng);
    worst = std::max({worst, parseval_defect(f).relative, parseval_defect(f, TransformPath::Naive).relative});
  }
  const double t = timer.seconds();
  o.clause(worst <= 1e-10, fmt("200 fields, max relative defect %.3e (limit 1e-10)", worst));
  o.clause(t < 10.0, fmt("runtime %.2f s (limit 10 s)", t));
  o.summary = "operator Parseval identity";
  return o;
}

Outcome c2_main() {
  Outcome o;
  Timer timer;
  const auto groups = group_matrix();
  double worst = 0.0;
  int passed = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(2, {static_cast<std::uint64_t>(i)}));
    const auto& g = groups[i % groups.size()];
    const double p = kSweep[(i / groups.size()) % 5];
    const int d = 1 + static_cast<int>(i / (groups.size() * 5)) % 4;
    const auto r = check_main(random_field(g, d, rng), p);
    worst = std::max(worst, r.ratio);
    passed += r.ratio <= 1.0 + 1e-9;
  }
  const double t = timer.seconds();
  o.clause(passed == 1000, fmt("%d/1000 trials within 1 + 1e-9, worst ratio %.15f", passed, worst));
  o.clause(t < 60.0, fmt("runtime %.2f s (limit 60 s)", t));
  o.summary = "main inequality on random fields";
  return o;
}

Outcome c3_p2() {
  Outcome o;
  const auto groups = group_matrix();
  double worst = 0.0;
  int trials = 0;
  for (int i = 0; i < 1000; ++i) {
    if (kSweep[(i / groups.size()) % 5] != 2.0) continue;
    Rng rng(derive_seed(2, {static_cast<std::uint64_t>(i)}));
    const int d = 1 + static_cast<int>(i / (groups.size() * 5)) % 4;
    worst = std::max(worst, std::abs(check_main(random_field(groups[i % groups.size()], d, rng), 2.0).ratio - 1.0));
    ++trials;
  }
  o.clause(worst <= 1e-9, fmt("%d p = 2 trials, max |ratio - 1| = %.3e", trials, worst));
  o.summary = "p = 2 equality";
  return o;
}

Outcome c4_delta() {
  Outcome o;
  double worst = 0.0;
  int trials = 0;
  Rng rng(4);
  for (const auto& g0 : group_matrix()) {
    const auto g = counting(g0);
    for (double p : kSweep)
      for (int d : {1, 2, 4}) {
        const auto idx = static_cast<std::size_t>(rng.engine()() % g.order());
        worst = std::max(worst, std::abs(check_main(delta_field(g, rng.gaussian_matrix(d), idx), p).ratio - 1.0));
        ++trials;
      }
  }
  o.clause(worst <= 1e-10, fmt("%d delta fields under counting measure, max |ratio - 1| = %.3e", trials, worst));
  o.summary = "delta-support equality";
  return o;
}

Outcome c5_sup() {
  Outcome o;
  const auto groups = group_matrix();
  double worst = 0.0;
  int passed = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(derive_seed(5, {static_cast<std::uint64_t>(i)}));
    const auto r = check_main_sup(random_field(groups[i % groups.size()], 1 + i % 4, rng));
    worst = std::max(worst, r.ratio);
    passed += r.ratio <= 1.0 + 1e-9;
  }
  o.clause(passed == 200, fmt("%d/200 trials pass, worst ratio %.15f", passed, worst));
  o.summary = "q = infinity (sup) form";
  return o;
}

Outcome c6_haar() {
  Outcome o;
  const auto groups = group_matrix();
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    Rng rng(derive_seed(6, {static_cast<std::uint64_t>(i)}));
    const auto f = random_field(groups[i % groups.size()], 1 + i % 3, rng);
    const double p = kSweep[i % 5];
    const double base = check_main(f, p).ratio;
    for (double s : {0.1, 10.0}) worst = std::max(worst, std::abs(check_main(f.with_haar_scale(s), p).ratio - base));
  }
  o.clause(worst <= 1e-10, fmt("50 trials, s in {0.1, 10}, max ratio change %.3e", worst));
  o.summary = "Haar-scale invariance";
  return o;
}

Outcome c7_catalog() {
  Outcome o;
  struct Family {
    const char* label;
    ClarksonVariant variant;
    std::vector<double> ps;
  };
  const std::vector<Family> families = {
      {"upper p>=2", ClarksonVariant::UpperPGe2, {2.0, 2.5, 4.0}},
      {"lower p>=2", ClarksonVariant::LowerPGe2, {2.0, 2.5, 4.0}},
      {"upper p<=2", ClarksonVariant::UpperPLe2, {1.1, 1.5, 2.0}},
      {"lower p<=2", ClarksonVariant::LowerPLe2, {1.1, 1.5, 2.0}},
      {"alt p>=2", ClarksonVariant::AltPGe2, {2.0, 2.5, 4.0}},
      {"dual p<=2", ClarksonVariant::DualPLe2, {1.1, 1.5, 2.0}},
  };
  for (const auto& fam : families) {
    int passed = 0, total = 0;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      Rng rng(derive_seed(7, {static_cast<std::uint64_t>(fam.variant), static_cast<std::uint64_t>(i)}));
      const int d = 1 + i % 4;
      const ComplexMatrix a = rng.gaussian_matrix(d), b = rng.gaussian_matrix(d);
      for (double p : fam.ps) {
        const auto r = check_clarkson(a, b, p, fam.variant);
        passed += r.pass;
        ++total;
        worst = std::max(worst, r.ratio);
      }
    }
    o.clause(passed == total, fmt("%-11s %d/%d pass, worst ratio %.15f", fam.label, passed, total, worst));
  }
  for (int n : {2, 3, 5}) {
    int passed = 0, total = 0;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      Rng rng(derive_seed(7, {100u + static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i)}));
      const int d = 1 + i % 4;
      std::vector<ComplexMatrix> tuple;
      for (int j = 0; j < n; ++j) tuple.push_back(rng.gaussian_matrix(d));
      for (double p : {1.1, 1.5, 2.0}) {
        const auto r = check_bhatia_kittaneh(tuple, p);
        passed += r.pass;
        ++total;
        worst = std::max(worst, r.ratio);
      }
    }
    o.clause(passed == total, fmt("n-tuple n=%d %d/%d pass, worst ratio %.15f", n, passed, total, worst));
  }

  // Closed forms.
  Rng rng(77);
  const ComplexMatrix a = rng.gaussian_matrix(3), zero = ComplexMatrix::Zero(3, 3);
  double dev = 0.0;
  for (double p : {2.0, 2.5, 4.0}) {
    dev = std::max(dev, std::abs(check_clarkson(a, a, p, ClarksonVariant::UpperPGe2).ratio - 1.0));
    dev = std::max(dev, std::abs(check_clarkson(a, zero, p, ClarksonVariant::UpperPGe2).ratio - std::pow(2.0, 2.0 - p)));
    dev = std::max(dev, std::abs(check_clarkson(a, zero, p, ClarksonVariant::LowerPGe2).ratio - 1.0));
  }
  for (double p : {1.1, 1.5, 2.0}) {
    const double q = conjugate_exponent(p);
    dev = std::max(dev, std::abs(check_clarkson(a, zero, p, ClarksonVariant::DualPLe2).ratio - std::pow(2.0, 2.0 - q)));
  }
  o.clause(dev <= 1e-12, fmt("A = B and B = 0 closed forms reproduced, max deviation %.3e", dev));
  o.summary = "classical two-operator and n-tuple catalog";
  return o;
}

Outcome c8_cross() {
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(derive_seed(8, {static_cast<std::uint64_t>(i)}));
    constexpr int kTuple[] = {2, 3, 5};
    const int n = kTuple[i % 3];
    const int d = 1 + i % 4;
    const double p = kSweep[i % 5];
    std::vector<ComplexMatrix> tuple;
    for (int j = 0; j < n; ++j) tuple.push_back(rng.gaussian_matrix(d));
    const auto bk = check_bhatia_kittaneh(tuple, p);
    const auto main = check_main(OperatorField(make_group({n}, 1.0), d, tuple), p);
    worst = std::max(worst, std::abs(bk.lhs - n * main.lhs) / bk.lhs);
  }
  o.clause(worst <= 1e-10, fmt("100 trials, max relative |lhs - n lhs_main| = %.3e", worst));
  o.summary = "n-tuple form against the group transform on Z_n";
  return o;
}

Outcome c9_weighted() {
  Outcome o;
  const auto groups = group_matrix();
  const double ts[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  int stated_pass = 0, interp_pass = 0, total = 0, trials_clean = 0;
  double worst_stated = 0.0, worst_interp = 0.0;
  for (int i = 0; i < 300; ++i) {
    Rng rng(derive_seed(9, {static_cast<std::uint64_t>(i)}));
    const int d = 2 + i % 2;
    const auto& g = groups[i % groups.size()];
    const double p = kSweep[i % 5];
    const PositiveMatrix a = rng.spd_matrix(d), b = rng.spd_matrix(d);
    const auto f = random_field(g, d, rng);
    bool clean = true;
    for (double t : ts)
      for (auto dir : {WeightDirection::AToGamma, WeightDirection::GammaToA}) {
        const auto r = check_weighted(f, p, a, b, t, dir);
        const double ctq = std::stod(r.params.at("constant_tq"));
        const double interp = r.lhs / (ctq * r.rhs);
        ++total;
        stated_pass += r.pass;
        clean = clean && r.pass;
        interp_pass += interp <= 1.0 + kPassTolerance;
        worst_stated = std::max(worst_stated, r.ratio);
        worst_interp = std::max(worst_interp, interp);
      }
    trials_clean += clean;
  }
  o.clause(stated_pass == total,
           fmt("constant ||a^1/2 b^-1 a^1/2||^t: %d/%d checks pass (%d/300 trials clean), worst ratio %.4g",
               stated_pass, total, trials_clean, worst_stated));
  o.note(fmt("same checks against the constant raised to t*q: %d/%d pass, worst ratio %.6f", interp_pass, total,
             worst_interp));

  // Reductions.
  double red = 0.0;
  bool unit_constants = true;
  for (int i = 0; i < 50; ++i) {
    Rng rng(derive_seed(90, {static_cast<std::uint64_t>(i)}));
    const int d = 2 + i % 2;
    const double p = kSweep[i % 5];
    const PositiveMatrix a = rng.spd_matrix(d), b = rng.spd_matrix(d);
    const auto f = random_field(groups[i % groups.size()], d, rng);
    const ComplexMatrix s = a.power_matrix(-0.5);
    const auto ref = check_main(sandwich(f, s, s), p);
    for (auto dir : {WeightDirection::AToGamma, WeightDirection::GammaToA}) {
      for (const auto& r : {check_weighted(f, p, a, b, 0.0, dir), check_weighted(f, p, a, a, 0.6, dir)}) {
        red = std::max({red, std::abs(r.lhs - ref.lhs) / ref.lhs, std::abs(r.rhs - ref.rhs) / ref.rhs});
        unit_constants = unit_constants && r.constant == 1.0;
      }
    }
  }
  o.clause(red <= 1e-10 && unit_constants,
           fmt("t = 0 and a = b reduce to the unweighted check: max relative deviation %.3e, constants exactly 1: %s",
               red, unit_constants ? "yes" : "no"));

  int kernel_pass = 0;
  double worst_kernel = 0.0;
  for (int i = 0; i < 300; ++i) {
    Rng rng(derive_seed(91, {static_cast<std::uint64_t>(i)}));
    const int d = 2 + i % 3;
    const PositiveMatrix a = rng.spd_matrix(d), b = rng.spd_matrix(d);
    constexpr double kExps[] = {1.0, 1.5, 2.0, kInfinity};
    const auto r = check_weight_comparison(rng.gaussian_matrix(d), a, b, kExps[i % 4]);
    kernel_pass += r.pass;
    worst_kernel = std::max(worst_kernel, r.ratio);
  }
  o.clause(kernel_pass == 300, fmt("kernel bound ||X||_p,b <= C ||X||_p,a: %d/300 pass, worst ratio %.6f", kernel_pass,
                                   worst_kernel));
  o.summary = "weighted inequality along the geodesic";
  return o;
}

Outcome c10_gamma() {
  Outcome o;
  double ends = 0.0, sym = 0.0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(derive_seed(10, {static_cast<std::uint64_t>(i)}));
    const int d = 2 + i % 4;
    const PositiveMatrix a = rng.spd_matrix(d), b = rng.spd_matrix(d);
    const double scale = std::max(a.operator_norm(), b.operator_norm());
    ends = std::max(ends, (gamma_path(a, b, 0.0).matrix() - a.matrix()).cwiseAbs().maxCoeff() / scale);
    ends = std::max(ends, (gamma_path(a, b, 1.0).matrix() - b.matrix()).cwiseAbs().maxCoeff() / scale);
    const double t = rng.uniform();
    sym = std::max(sym, (gamma_path(a, b, t).matrix() - gamma_path(b, a, 1.0 - t).matrix()).cwiseAbs().maxCoeff() / scale);
  }
  o.clause(ends <= 1e-10, fmt("endpoints gamma(0) = a, gamma(1) = b on 100 pairs, max deviation %.3e", ends));
  o.clause(sym <= 1e-10, fmt("symmetry gamma_ab(t) = gamma_ba(1 - t), max deviation %.3e", sym));
  o.summary = "geodesic path identities";
  return o;
}

Outcome c11_padic() {
  Outcome o;
  long pairs = 0, mismatches = 0;
  double float_dev = 0.0;
  int models = 0;
  for (std::int64_t p : {2, 3, 5, 7})
    for (int m = 0; m <= 6; ++m)
      for (int M = 0; M <= 6; ++M) {
        std::int64_t order = 1;
        for (int i = 0; i < m + M; ++i) order *= p;
        if (order > 64) continue;
        ++models;
        const auto model = make_padic(p, m, M);
        const auto& g = model.group();
        const auto n = g.order();
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
              const auto sum = g.add(g.element_at(x), g.element_at(y));
              const Rational lhs = model.pairing_phase(k, g.index_of(sum));
              const Rational rhs = mod_one(model.pairing_phase(k, x) + model.pairing_phase(k, y));
              mismatches += !(lhs == rhs);
              ++pairs;
              const auto xi = g.character_at(k);
              const Complex direct = char_eval(g, xi, sum);
              float_dev = std::max(
                  float_dev, std::abs(direct - char_eval(g, xi, g.element_at(x)) * char_eval(g, xi, g.element_at(y))));
            }
      }
  o.clause(mismatches == 0,
           fmt("exact phase additivity on %ld (xi, x, y) triples over %d models, %ld mismatches", pairs, models,
               mismatches));
  o.note(fmt("floating multiplicativity deviation at most %.3e", float_dev));

  const PAdicModel sweep[] = {make_padic(2, 1, 2), make_padic(2, 2, 1), make_padic(2, 3, 3),
                              make_padic(3, 1, 1), make_padic(3, 2, 1), make_padic(3, 0, 2)};
  int passed = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(derive_seed(11, {static_cast<std::uint64_t>(i)}));
    const auto r = check_main(random_field(sweep[i % 6].group(), 1 + i % 3, rng), kSweep[i % 5]);
    passed += r.pass;
    worst = std::max(worst, r.ratio);
  }
  o.clause(passed == 100, fmt("inequality on truncated p-adic groups: %d/100 pass, worst ratio %.15f", passed, worst));
  o.summary = "p-adic model";
  return o;
}

Outcome c12_fft() {
  Outcome o;
  double worst = 0.0;
  Rng rng(12);
  for (const auto& g : group_matrix())
    for (int d : {1, 2, 4}) {
      const auto f = random_field(g, d, rng);
      worst = std::max(worst, relative_frobenius_deviation(fourier_transform_fast(f), fourier_transform(f)));
    }
  o.clause(worst <= 1e-10, fmt("fast/naive relative deviation on the group matrix %.3e", worst));

  const auto big = random_field(make_group({4096}, 1.0), 1, rng);
  Timer naive_timer;
  const auto slow = fourier_transform(big);
  const double naive_s = naive_timer.seconds();
  double fast_s = 1e300;
  for (int rep = 0; rep < 5; ++rep) {
    Timer fast_timer;
    const auto fast = fourier_transform_fast(big);
    fast_s = std::min(fast_s, fast_timer.seconds());
    if (rep == 0) o.note(fmt("Z_4096 fast/naive deviation %.3e", relative_frobenius_deviation(fast, slow)));
  }
  const double speedup = naive_s / fast_s;
  o.clause(speedup >= 10.0, fmt("Z_4096, d = 1: naive %.4f s, fast %.6f s, speedup %.0fx (soft limit 10x)", naive_s,
                                fast_s, speedup));
  o.summary = "FFT path";
  return o;
}

Outcome c13_extremal() {
  Outcome o;
  Timer timer;
  bool ratios_ok = true, classes_ok = true, bounded = true;
  int delta_like = 0, runs = 0;
  for (const char* spec : {"Z2", "Z3"})
    for (double p : {1.2, 1.5, 1.8}) {
      SearchConfig c;
      c.group_spec = spec;
      c.p = p;
      const auto r = maximize_ratio(c);
      ++runs;
      ratios_ok = ratios_ok && r.best_ratio >= 1.0 - 1e-5;
      bounded = bounded && r.best_ratio <= 1.0 + 1e-9;
      const bool is_delta = r.classification == ExtremalClass::DeltaLike;
      classes_ok = classes_ok && is_delta;
      delta_like += is_delta;
      o.note(fmt("%s p=%.1f: ratio %.15f, class %s, mass concentration %.4f, dual concentration %.4f", spec, p,
                 r.best_ratio, to_string(r.classification), r.mass_concentration, r.dual_concentration));
    }
  const double t = timer.seconds();
  o.clause(ratios_ok, "every run reaches ratio >= 1 - 1e-5");
  o.clause(bounded, "no run exceeds 1 + 1e-9");
  o.clause(classes_ok, fmt("classification delta-like in %d/%d runs", delta_like, runs));
  o.clause(t < 30.0, fmt("wall time %.2f s (limit 30 s)", t));
  o.summary = "extremal search";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  int only = 0;
  app.add_option("--criterion,-c", only, "run a single criterion (1-13)")->check(CLI::Range(1, 13));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {c1_parseval, c2_main,    c3_p2,       c4_delta,   c5_sup,
                                                          c6_haar,     c7_catalog, c8_cross,    c9_weighted, c10_gamma,
                                                          c11_padic,   c12_fft,    c13_extremal};
  int passed = 0, run = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    Timer timer;
    const Outcome out = criteria[i]();
    ++run;
    passed += out.pass;
    std::printf("%s  C%-2zu %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", i + 1, out.summary.c_str(), timer.seconds());
    for (const auto& d : out.details) std::printf("        %s\n", d.c_str());
    std::fflush(stdout);
  }
  if (only == 0) std::printf("acceptance: %d/%d criteria pass\n", passed, run);
  return passed == run ? 0 : 1;
}
