#include "hylab/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <thread>

#include "hylab/error.hpp"
#include "hylab/extremal.hpp"
#include "hylab/random.hpp"

namespace hylab {

using nlohmann::json;

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

json report_to_json(const InequalityReport& r) {
  json j;
  j["name"] = r.name;
  j["p"] = r.p;
  j["q"] = std::isinf(r.q) ? json("inf") : json(r.q);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["constant"] = r.constant;
  j["ratio"] = std::isfinite(r.ratio) ? json(r.ratio) : json("inf");
  j["margin"] = std::isfinite(r.margin) ? json(r.margin) : json("-inf");
  j["pass"] = r.pass;
  j["params"] = r.params;
  return j;
}

namespace {

// ---- configuration access -------------------------------------------------

template <class T>
T get_or(const json& cfg, const char* key, T fallback) {
  if (!cfg.contains(key) || cfg[key].is_null()) return fallback;
  try {
    return cfg[key].get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("config key '") + key + "' has the wrong type");
  }
}

std::vector<double> real_list(const json& cfg, const char* key, std::vector<double> fallback) {
  if (!cfg.contains(key)) return fallback;
  const auto& v = cfg[key];
  if (v.is_number()) return {v.get<double>()};
  require(v.is_array() && !v.empty(), std::string("config key '") + key + "' must be a non-empty list of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    require(x.is_number(), std::string("config key '") + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<std::string> group_list(const json& cfg) {
  std::vector<std::string> out;
  if (cfg.contains("groups")) {
    const auto& v = cfg["groups"];
    if (v.is_string()) return {v.get<std::string>()};
    require(v.is_array(), "config key 'groups' must be a list of group specs");
    for (const auto& g : v) out.push_back(g.get<std::string>());
  }
  require(!out.empty(), "at least one group spec is required");
  return out;
}

struct Common {
  std::vector<std::string> groups;
  Eigen::Index dim = 2;
  int trials = 10;
  std::uint64_t seed = 0;
  double tol = kPassTolerance;
};

Common common(const json& cfg, bool need_groups = true) {
  Common c;
  if (need_groups) c.groups = group_list(cfg);
  c.dim = get_or<Eigen::Index>(cfg, "dim", 2);
  c.trials = get_or<int>(cfg, "trials", 10);
  c.seed = get_or<std::uint64_t>(cfg, "seed", 0);
  c.tol = get_or<double>(cfg, "tol", kPassTolerance);
  require(c.dim >= 1 && c.dim <= 64, "dim must lie in [1, 64]");
  require(c.trials >= 1, "trials must be >= 1");
  require(c.tol >= 0.0, "tol must be non-negative");
  return c;
}

std::string num_str(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void tag(InequalityReport& r, const std::string& group, Eigen::Index d, std::uint64_t seed, std::size_t trial) {
  r.params["group"] = group;
  r.params["d"] = std::to_string(d);
  r.params["seed"] = std::to_string(seed);
  r.params["trial"] = std::to_string(trial);
}

// ---- document assembly ----------------------------------------------------

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

RunOutput assemble(std::string_view command, const json& config, const std::vector<InequalityReport>& reports,
                   json extra, std::chrono::steady_clock::time_point started) {
  RunOutput out;
  auto& s = out.summary;
  s.total = reports.size();
  std::size_t worst = 0;
  json list = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].pass) ++s.passed;
    // A failing report always outranks a passing one as the worst case.
    const bool worse = (!reports[i].pass && reports[worst].pass) ||
                       (reports[i].pass == reports[worst].pass && reports[i].ratio > reports[worst].ratio);
    if (i == 0 || worse) worst = i;
    list.push_back(report_to_json(reports[i]));
  }
  if (!reports.empty()) {
    s.worst_ratio = reports[worst].ratio;
    s.worst_case = list[worst];
  }
  s.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  json summary{{"total", s.total},
               {"passed", s.passed},
               {"failed", s.total - s.passed},
               {"all_pass", s.passed == s.total},
               {"worst_ratio", std::isfinite(s.worst_ratio) ? json(s.worst_ratio) : json("inf")},
               {"worst_case", s.worst_case}};
  out.document = json{{"schema_version", kReportSchemaVersion},
                      {"command", std::string(command)},
                      {"campaign", config},
                      {"reports", std::move(list)},
                      {"summary", std::move(summary)},
                      {"extra", std::move(extra)},
                      {"timestamp", {{"utc", utc_now()}, {"wall_time_s", s.wall_time_seconds}}}};
  return out;
}

// ---- commands -------------------------------------------------------------

RunOutput cmd_verify(const json& cfg) {
  const auto started = std::chrono::steady_clock::now();
  const Common c = common(cfg);
  const auto ps = real_list(cfg, "p", {1.5});
  for (double p : ps) require(p >= 1.0 && p <= 2.0, "verify: p values must lie in [1, 2]");

  struct Job {
    std::size_t group;
    std::size_t p;
    std::size_t trial;
  };
  std::vector<FiniteAbelianGroup> groups;
  for (const auto& g : c.groups) groups.push_back(parse_group_spec(g));
  std::vector<Job> jobs;
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t pi = 0; pi < ps.size(); ++pi)
      for (std::size_t t = 0; t < static_cast<std::size_t>(c.trials); ++t) jobs.push_back({g, pi, t});

  std::vector<InequalityReport> reports(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto& job = jobs[i];
    const std::uint64_t trial_seed = derive_seed(c.seed, {job.group, job.trial});
    Rng rng(trial_seed);
    const OperatorField field = random_field(groups[job.group], c.dim, rng);
    const double p = ps[job.p];
    reports[i] = p == 1.0 ? check_main_sup(field, c.tol) : check_main(field, p, c.tol);
    tag(reports[i], c.groups[job.group], c.dim, trial_seed, job.trial);
  });
  return assemble("verify", cfg, reports, json::object(), started);
}

RunOutput cmd_parseval(const json& cfg) {
  const auto started = std::chrono::steady_clock::now();
  const Common c = common(cfg);
  const double threshold = get_or<double>(cfg, "tol", kParsevalTolerance);
  std::vector<FiniteAbelianGroup> groups;
  for (const auto& g : c.groups) groups.push_back(parse_group_spec(g));
  const std::size_t per = static_cast<std::size_t>(c.trials);
  std::vector<InequalityReport> reports(groups.size() * per);
  parallel_for(reports.size(), [&](std::size_t i) {
    const std::size_t g = i / per, t = i % per;
    const std::uint64_t trial_seed = derive_seed(c.seed, {g, t});
    Rng rng(trial_seed);
    const OperatorField field = random_field(groups[g], c.dim, rng);
    const ParsevalDefect fast = parseval_defect(field, TransformPath::Fast);
    const ParsevalDefect naive = parseval_defect(field, TransformPath::Naive);
    // lhs <= constant * rhs encodes relative defect <= threshold.
    auto r = make_report("parseval", 2.0, 2.0, std::max(fast.absolute, naive.absolute), fast.scale, threshold, 0.0);
    r.params["relative_defect_fast"] = num_str(fast.relative);
    r.params["relative_defect_naive"] = num_str(naive.relative);
    tag(r, c.groups[g], c.dim, trial_seed, t);
    reports[i] = std::move(r);
  });
  return assemble("parseval", cfg, reports, json::object(), started);
}

RunOutput cmd_weighted(const json& cfg) {
  const auto started = std::chrono::steady_clock::now();
  const Common c = common(cfg);
  const auto ps = real_list(cfg, "p", {1.5});
  const auto ts = real_list(cfg, "t", {0.0, 0.25, 0.5, 0.75, 1.0});
  const std::string form = get_or<std::string>(cfg, "constant", "stated");
  require(form == "stated" || form == "interpolated", "weighted: constant must be 'stated' or 'interpolated'");
  for (double p : ps) require(p > 1.0 && p <= 2.0, "weighted: p values must satisfy 1 < p <= 2");
  for (double t : ts) require(t >= 0.0 && t <= 1.0, "weighted: t values must lie in [0, 1]");

  std::vector<FiniteAbelianGroup> groups;
  for (const auto& g : c.groups) groups.push_back(parse_group_spec(g));
  const std::size_t per = static_cast<std::size_t>(c.trials);
  const std::size_t block = ps.size() * ts.size() * 2 + 1;
  std::vector<InequalityReport> reports(groups.size() * per * block);
  parallel_for(groups.size() * per, [&](std::size_t i) {
    const std::size_t g = i / per, t = i % per;
    const std::uint64_t trial_seed = derive_seed(c.seed, {g, t});
    Rng rng(trial_seed);
    const OperatorField field = random_field(groups[g], c.dim, rng);
    const PositiveMatrix a = rng.spd_matrix(c.dim);
    const PositiveMatrix b = rng.spd_matrix(c.dim);
    const ComplexMatrix x = rng.gaussian_matrix(c.dim);
    std::size_t k = i * block;
    for (double p : ps)
      for (double tt : ts)
        for (auto dir : {WeightDirection::AToGamma, WeightDirection::GammaToA}) {
          auto r = check_weighted(field, p, a, b, tt, dir, c.tol);
          r.params["constant_form"] = form;
          if (form == "interpolated")
            r = [&] {
              auto s = make_report(r.name, r.p, r.q, r.lhs, r.rhs, std::stod(r.params["constant_tq"]), c.tol);
              s.params = r.params;
              return s;
            }();
          tag(r, c.groups[g], c.dim, trial_seed, t);
          reports[k++] = std::move(r);
        }
    auto kr = check_weight_comparison(x, a, b, ps.front(), c.tol);
    tag(kr, c.groups[g], c.dim, trial_seed, t);
    reports[k] = std::move(kr);
  });
  return assemble("weighted", cfg, reports, json::object(), started);
}

RunOutput cmd_clarkson(const json& cfg) {
  const auto started = std::chrono::steady_clock::now();
  const Common c = common(cfg, false);
  const auto ps = real_list(cfg, "p", {1.25, 1.5, 2.0, 2.5, 4.0});
  std::vector<std::int64_t> ns = {2, 3, 5};
  if (cfg.contains("n")) ns = cfg["n"].is_array() ? cfg["n"].get<std::vector<std::int64_t>>()
                                                   : std::vector<std::int64_t>{cfg["n"].get<std::int64_t>()};
  for (double p : ps) require(std::isfinite(p) && p >= 1.0, "clarkson: p values must be >= 1");
  for (auto n : ns) require(n >= 2 && n <= 4096, "clarkson: tuple sizes must lie in [2, 4096]");

  struct Job {
    std::size_t p;
    std::size_t trial;
  };
  std::vector<Job> jobs;
  for (std::size_t pi = 0; pi < ps.size(); ++pi)
    for (std::size_t t = 0; t < static_cast<std::size_t>(c.trials); ++t) jobs.push_back({pi, t});
  std::vector<std::vector<InequalityReport>> per_job(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const double p = ps[jobs[i].p];
    const std::uint64_t trial_seed = derive_seed(c.seed, {jobs[i].p, jobs[i].trial});
    Rng rng(trial_seed);
    const ComplexMatrix a = rng.gaussian_matrix(c.dim), b = rng.gaussian_matrix(c.dim);
    for (auto v : kAllClarksonVariants) {
      if (!clarkson_admits(v, p)) continue;
      auto r = check_clarkson(a, b, p, v, c.tol);
      tag(r, "-", c.dim, trial_seed, jobs[i].trial);
      per_job[i].push_back(std::move(r));
    }
    if (p > 1.0 && p <= 2.0)
      for (auto n : ns) {
        std::vector<ComplexMatrix> tuple;
        for (std::int64_t j = 0; j < n; ++j) tuple.push_back(rng.gaussian_matrix(c.dim));
        auto r = check_bhatia_kittaneh(tuple, p, c.tol);
        tag(r, "Z" + std::to_string(n), c.dim, trial_seed, jobs[i].trial);
        per_job[i].push_back(std::move(r));
      }
  });
  std::vector<InequalityReport> reports;
  for (auto& v : per_job) std::move(v.begin(), v.end(), std::back_inserter(reports));
  return assemble("clarkson", cfg, reports, json::object(), started);
}

RunOutput cmd_extremal(const json& cfg) {
  const auto started = std::chrono::steady_clock::now();
  SearchConfig sc;
  const auto groups = group_list(cfg);
  require(groups.size() == 1, "extremal: exactly one group spec is expected");
  sc.group_spec = groups.front();
  sc.dim = get_or<Eigen::Index>(cfg, "dim", 1);
  const auto ps = real_list(cfg, "p", {1.5});
  require(ps.size() == 1, "extremal: exactly one p value is expected");
  sc.p = ps.front();
  sc.restarts = get_or<int>(cfg, "restarts", sc.restarts);
  sc.max_iterations = get_or<int>(cfg, "max_iterations", sc.max_iterations);
  sc.initial_step = get_or<double>(cfg, "initial_step", sc.initial_step);
  sc.step_decay = get_or<double>(cfg, "step_decay", sc.step_decay);
  sc.tolerance = get_or<double>(cfg, "convergence_tol", sc.tolerance);
  sc.seed = get_or<std::uint64_t>(cfg, "seed", 0);
  const double tol = get_or<double>(cfg, "tol", kPassTolerance);

  const SearchResult res = maximize_ratio(sc);
  auto r = check_main(res.best_field, sc.p, tol);
  r.name = "extremal";
  r.params["classification"] = to_string(res.classification);
  r.params["seed"] = std::to_string(sc.seed);
  r.params["trial"] = "0";

  json field = json::array();
  for (const auto& a : res.best_field.values()) {
    json m = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
      m.push_back(std::move(row));
    }
    field.push_back(std::move(m));
  }
  json extra{{"best_ratio", res.best_ratio},
             {"classification", to_string(res.classification)},
             {"iterations", res.iterations},
             {"best_restart", res.best_restart},
             {"improved", res.improved},
             {"mass_concentration", res.mass_concentration},
             {"dual_concentration", res.dual_concentration},
             {"best_field", std::move(field)}};
  return assemble("extremal", cfg, {r}, std::move(extra), started);
}

RunOutput cmd_padic(const json& cfg) {
  const auto started = std::chrono::steady_clock::now();
  Common c = common(cfg, false);
  const auto prime = get_or<std::int64_t>(cfg, "prime", 2);
  const auto m = get_or<int>(cfg, "m", 1);
  const auto M = get_or<int>(cfg, "M", 2);
  const auto ps = real_list(cfg, "p", {1.25, 1.75});
  for (double p : ps) require(p >= 1.0 && p <= 2.0, "padic-demo: p values must lie in [1, 2]");
  const PAdicModel model(prime, m, M);
  const auto& g = model.group();
  const std::string spec =
      "padic:p=" + std::to_string(prime) + ",m=" + std::to_string(m) + ",M=" + std::to_string(M);

  std::vector<InequalityReport> reports;
  json table = json::array();
  if (g.order() <= 4096) {
    // chi(xi (x + y)) = chi(xi x) chi(xi y) as exact rational phases, and the
    // p-adic phase reproduces the cyclic character value bit for bit.
    std::size_t mult_bad = 0, eval_bad = 0;
    const std::size_t n = g.order();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational ph = model.pairing_phase(k, j);
        if (unit_root(ph.num, ph.den) != char_eval(g, g.character_at(k), g.element_at(j))) ++eval_bad;
        if (n <= 64)
          for (std::size_t l = 0; l < n; ++l) {
            const std::size_t sum = (j + l) % n;
            if (!(model.pairing_phase(k, sum) == mod_one(ph + model.pairing_phase(k, l)))) ++mult_bad;
          }
      }
    auto r = make_report("padic_character", 0.0, 0.0, static_cast<double>(mult_bad + eval_bad), 0.0, 1.0, 0.0);
    r.params["multiplicativity_mismatches"] = std::to_string(mult_bad);
    r.params["char_eval_mismatches"] = std::to_string(eval_bad);
    r.params["group"] = spec;
    reports.push_back(std::move(r));
    for (std::size_t j = 0; j < std::min<std::size_t>(n, 64); ++j) {
      const Rational x = model.value(j), fp = model.frac_part(j);
      table.push_back({{"index", j},
                       {"x", std::to_string(x.num) + "/" + std::to_string(x.den)},
                       {"frac", std::to_string(fp.num) + "/" + std::to_string(fp.den)},
                       {"norm", model.norm(j)}});
    }
  }

  const std::size_t per = static_cast<std::size_t>(c.trials);
  std::vector<InequalityReport> trials(per * ps.size());
  parallel_for(trials.size(), [&](std::size_t i) {
    const std::size_t t = i / ps.size(), pi = i % ps.size();
    const std::uint64_t trial_seed = derive_seed(c.seed, {t});
    Rng rng(trial_seed);
    const OperatorField field = random_field(g, c.dim, rng);
    trials[i] = ps[pi] == 1.0 ? check_main_sup(field, c.tol) : check_main(field, ps[pi], c.tol);
    tag(trials[i], spec, c.dim, trial_seed, t);
  });
  std::move(trials.begin(), trials.end(), std::back_inserter(reports));
  json extra{{"group_order", g.order()},
             {"haar_weight", g.haar_weight()},
             {"dual_weight", g.dual_weight()},
             {"total_measure", g.total_measure()},
             {"elements", std::move(table)}};
  return assemble("padic-demo", cfg, reports, std::move(extra), started);
}

// exp(-|x|^2/2) M in n dimensions: closed-form continuum sides for comparison.
std::pair<double, double> gaussian_continuum(int n, double p, double q, double norm_m) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double lhs = std::pow(two_pi, -n) * std::pow(two_pi, n * q / 2.0) * std::pow(two_pi / q, n / 2.0) *
                     std::pow(norm_m, q);
  const double rhs = std::pow(std::pow(norm_m, p) * std::pow(two_pi / p, n / 2.0), q / p);
  return {lhs, rhs};
}

RunOutput cmd_grid(const json& cfg) {
  const auto started = std::chrono::steady_clock::now();
  Common c = common(cfg, false);
  if (!cfg.contains("dim")) c.dim = 1;
  const int n = get_or<int>(cfg, "grid_n", 1);
  const auto Ns = real_list(cfg, "N", {8, 16, 32});
  const double extent = get_or<double>(cfg, "extent", 8.0);
  std::vector<double> hs;
  if (cfg.contains("h")) {
    hs = real_list(cfg, "h", {});
  } else {
    for (double N : Ns) hs.push_back(extent / N);
  }
  require(hs.size() == Ns.size(), "grid-demo: N and h sequences must have equal length");
  require(n >= 1 && n <= 4, "grid-demo: grid dimension must lie in [1, 4]");
  for (std::size_t i = 1; i < Ns.size(); ++i)
    require(Ns[i] >= Ns[i - 1] && hs[i] <= hs[i - 1], "grid-demo: refinement sequences must be monotone");
  const auto ps = real_list(cfg, "p", {1.5});
  require(ps.size() == 1 && ps.front() > 1.0 && ps.front() <= 2.0, "grid-demo: one p with 1 < p <= 2 is expected");
  const double p = ps.front(), q = conjugate_exponent(p);
  const std::string field_kind = get_or<std::string>(cfg, "field", "gaussian");
  require(field_kind == "gaussian" || field_kind == "zero", "grid-demo: field must be 'gaussian' or 'zero'");

  Rng shape_rng(derive_seed(c.seed, {0xb0b}));
  const ComplexMatrix shape = c.dim == 1 ? ComplexMatrix::Ones(1, 1) : shape_rng.gaussian_matrix(c.dim);

  std::vector<InequalityReport> reports;
  json trajectory = json::array();
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const auto N = static_cast<std::int64_t>(Ns[i]);
    require(static_cast<double>(N) == Ns[i] && N >= 1, "grid-demo: N values must be positive integers");
    const GridModel grid(n, N, hs[i]);
    std::ostringstream spec;
    spec << "grid:n=" << n << ",N=" << N << ",h=" << hs[i];

    OperatorField bump(grid.group(), c.dim);
    if (field_kind == "gaussian")
      for (std::size_t e = 0; e < bump.size(); ++e) {
        double r2 = 0.0;
        for (double x : grid.coordinates(e)) r2 += x * x;
        bump[e] = std::exp(-0.5 * r2) * shape;
      }
    auto r = check_main(bump, p, c.tol);
    r.name = "grid_bump";
    tag(r, spec.str(), c.dim, c.seed, i);
    trajectory.push_back({{"N", N}, {"h", hs[i]}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ratio", r.ratio}});
    reports.push_back(std::move(r));

    const std::uint64_t trial_seed = derive_seed(c.seed, {i});
    Rng rng(trial_seed);
    auto rr = check_main(random_field(grid.group(), c.dim, rng), p, c.tol);
    rr.name = "grid_random";
    tag(rr, spec.str(), c.dim, trial_seed, i);
    reports.push_back(std::move(rr));
  }
  json extra{{"trajectory", std::move(trajectory)}};
  if (field_kind == "gaussian") {
    const auto [cl, cr] = gaussian_continuum(n, p, q, schatten_norm(shape, p));
    extra["continuum"] = {{"lhs", cl}, {"rhs", cr}, {"ratio", cl / cr}};
  }
  return assemble("grid-demo", cfg, reports, std::move(extra), started);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"verify",   "parseval",   "weighted", "extremal",
                                                 "padic-demo", "grid-demo", "clarkson"};
  return names;
}

RunOutput run_command(std::string_view command, const json& config) {
  require(config.is_object(), "configuration must be a JSON object");
  if (command == "verify") return cmd_verify(config);
  if (command == "parseval") return cmd_parseval(config);
  if (command == "weighted") return cmd_weighted(config);
  if (command == "extremal") return cmd_extremal(config);
  if (command == "padic-demo") return cmd_padic(config);
  if (command == "grid-demo") return cmd_grid(config);
  if (command == "clarkson") return cmd_clarkson(config);
  throw ValidationError("unknown command '" + std::string(command) + "'");
}

std::string reports_to_csv(const json& document) {
  std::ostringstream os;
  os << "name,group,p,q,d,seed,lhs,rhs,constant,ratio,margin,pass\n";
  auto num = [](const json& v) {
    if (v.is_string()) return v.get<std::string>();
    std::ostringstream s;
    s.precision(17);
    s << v.get<double>();
    return s.str();
  };
  auto param = [](const json& r, const char* key) {
    std::string v = r["params"].contains(key) ? r["params"][key].get<std::string>() : std::string();
    if (v.find_first_of(",\"") == std::string::npos) return v;
    std::string quoted = "\"";
    for (char ch : v) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  };
  for (const auto& r : document.at("reports")) {
    os << r["name"].get<std::string>() << ',' << param(r, "group") << ',' << num(r["p"]) << ',' << num(r["q"]) << ','
       << param(r, "d") << ',' << param(r, "seed") << ',' << num(r["lhs"]) << ',' << num(r["rhs"]) << ','
       << num(r["constant"]) << ',' << num(r["ratio"]) << ',' << num(r["margin"]) << ','
       << (r["pass"].get<bool>() ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace hylab
