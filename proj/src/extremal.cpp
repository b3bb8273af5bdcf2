#include "hylab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "hylab/error.hpp"
#include "hylab/inequalities.hpp"
#include "hylab/random.hpp"

namespace hylab {

const char* to_string(ExtremalClass c) {
  switch (c) {
    case ExtremalClass::DeltaLike: return "delta-like";
    case ExtremalClass::ParsevalP2: return "parseval-p2";
    case ExtremalClass::Other: return "other";
  }
  return "other";
}

double ratio_objective(const OperatorField& field, double p) {
  require(!field.is_zero(), "ratio_objective: zero field has no ratio");
  return check_main(field, p).ratio;
}

double mass_concentration(const OperatorField& field) {
  double total = 0.0, top = 0.0;
  for (const auto& a : field.values()) {
    total += a.squaredNorm();
    top = std::max(top, a.squaredNorm());
  }
  return total > 0.0 ? top / total : 0.0;
}

double dual_concentration(const OperatorField& field) {
  return mass_concentration(fourier_transform_fast(field));
}

ExtremalClass classify_extremal(const OperatorField& field, double p) {
  if (mass_concentration(field) >= 1.0 - 1e-3) return ExtremalClass::DeltaLike;
  if (std::abs(p - 2.0) <= 1e-9) return ExtremalClass::ParsevalP2;
  return ExtremalClass::Other;
}

namespace {

// Real parametrization: for each element, the d x d entries in column-major
// order, real part then imaginary part.
using Params = Eigen::VectorXd;

Params to_params(const OperatorField& f) {
  const auto dd = f.dim() * f.dim();
  Params x(static_cast<Eigen::Index>(f.size()) * dd * 2);
  Eigen::Index k = 0;
  for (const auto& a : f.values())
    for (Eigen::Index i = 0; i < dd; ++i) {
      x[k++] = a.data()[i].real();
      x[k++] = a.data()[i].imag();
    }
  return x;
}

OperatorField from_params(const FiniteAbelianGroup& g, Eigen::Index d, const Params& x) {
  OperatorField f(g, d);
  Eigen::Index k = 0;
  for (std::size_t e = 0; e < f.size(); ++e)
    for (Eigen::Index i = 0; i < d * d; ++i) {
      f[e].data()[i] = {x[k], x[k + 1]};
      k += 2;
    }
  return f;
}

// Unit sphere of sum mu ||A||_F^2.
void project(Params& x, double mu) {
  const double n = std::sqrt(mu * x.squaredNorm());
  if (n > 0.0) x /= n;
}

struct RestartOutcome {
  double ratio = 0.0;
  Params params;
  int iterations = 0;
  bool improved = false;
};

RestartOutcome run_restart(const FiniteAbelianGroup& g, const SearchConfig& cfg, int restart) {
  Rng rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(restart)}));
  const double mu = g.haar_weight();
  Params x = to_params(random_field(g, cfg.dim, rng));
  project(x, mu);

  auto objective = [&](const Params& v) { return check_main(from_params(g, cfg.dim, v), cfg.p).ratio; };

  RestartOutcome out;
  double fx = objective(x);
  const double initial = fx;
  Params best = x;
  double fbest = fx;
  double step = cfg.initial_step;
  int misses = 0;
  int it = 0;

  for (; it < cfg.max_iterations && step > cfg.tolerance && fbest < 1.0 - 1e-14; ++it) {
    const double h = cfg.fd_step * std::max(x.cwiseAbs().maxCoeff(), 1e-12);
    Params grad(x.size());
    Params probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      probe[i] = x[i] + h;
      const double up = objective(probe);
      probe[i] = x[i] - h;
      const double down = objective(probe);
      probe[i] = x[i];
      grad[i] = (up - down) / (2.0 * h);
    }
    // Remove the radial component; the objective is constant along rays.
    grad -= (grad.dot(x) / x.squaredNorm()) * x;
    const double gnorm = grad.norm();
    if (!(gnorm > 0.0) || !std::isfinite(gnorm)) break;

    Params candidate = x + (step / gnorm) * grad;
    project(candidate, mu);
    const double fc = objective(candidate);
    if (fc > fbest) {
      misses = 0;
    } else if (++misses >= 5) {
      step *= cfg.step_decay;
      misses = 0;
      x = best;
      fx = fbest;
      continue;
    }
    x = candidate;
    fx = fc;
    if (fx > fbest) {
      fbest = fx;
      best = x;
    }
  }
  out.ratio = fbest;
  out.params = std::move(best);
  out.iterations = it;
  out.improved = fbest > initial;
  return out;
}

}  // namespace

SearchResult maximize_ratio(const SearchConfig& cfg) {
  require(cfg.restarts >= 1, "maximize_ratio: restarts must be >= 1");
  require(cfg.max_iterations >= 0, "maximize_ratio: max_iterations must be >= 0");
  require(cfg.tolerance > 0.0, "maximize_ratio: tolerance must be positive");
  require(cfg.initial_step > 0.0 && cfg.step_decay > 0.0 && cfg.step_decay < 1.0, "maximize_ratio: bad step schedule");
  require(cfg.fd_step > 0.0, "maximize_ratio: finite-difference step must be positive");
  require(cfg.dim >= 1, "maximize_ratio: dimension must be >= 1");
  require(cfg.p > 1.0 && cfg.p <= 2.0, "maximize_ratio: p must satisfy 1 < p <= 2");
  const FiniteAbelianGroup g = parse_group_spec(cfg.group_spec);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  if (cfg.parallel && cfg.restarts > 1) {
    std::vector<std::future<RestartOutcome>> futures;
    for (int r = 0; r < cfg.restarts; ++r)
      futures.push_back(std::async(std::launch::async, run_restart, std::cref(g), std::cref(cfg), r));
    for (int r = 0; r < cfg.restarts; ++r) outcomes[static_cast<std::size_t>(r)] = futures[static_cast<std::size_t>(r)].get();
  } else {
    for (int r = 0; r < cfg.restarts; ++r) outcomes[static_cast<std::size_t>(r)] = run_restart(g, cfg, r);
  }

  // Highest ratio wins; strict comparison keeps the lowest restart index on ties.
  std::size_t winner = 0;
  SearchResult result{0.0, OperatorField(g, cfg.dim), 0, 0, false, ExtremalClass::Other};
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    result.iterations += outcomes[r].iterations;
    result.improved = result.improved || outcomes[r].improved;
    if (outcomes[r].ratio > outcomes[winner].ratio) winner = r;
  }
  result.best_ratio = outcomes[winner].ratio;
  result.best_restart = static_cast<int>(winner);
  result.best_field = from_params(g, cfg.dim, outcomes[winner].params);
  result.classification = classify_extremal(result.best_field, cfg.p);
  result.mass_concentration = mass_concentration(result.best_field);
  result.dual_concentration = dual_concentration(result.best_field);
  return result;
}

}  // namespace hylab
