// Command-line driver for the hylab verification campaigns.
//
// Exit status: 0 when every check passes, 1 when any inequality is violated,
// 2 for usage or configuration errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hylab/hylab.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::vector<std::string> groups;
  std::vector<double> p;
  int dim = -1;
  int trials = -1;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* sub, CommonOptions& o, bool with_group = true) {
  if (with_group) sub->add_option("--group,-g", o.groups, "Group spec (repeatable): Z4xZ3, Z2^5, padic:p=2,m=2,M=3, grid:n=1,N=64,h=0.125");
  sub->add_option("--p", o.p, "Exponent list, comma separated")->delimiter(',');
  sub->add_option("--dim,-d", o.dim, "Matrix dimension d");
  sub->add_option("--trials,-n", o.trials, "Random trials per configuration");
  sub->add_option("--seed,-s", o.seed, "Campaign seed");
  sub->add_option("--tol", o.tol, "Pass tolerance");
  sub->add_option("--out,-o", o.out, "Report path (stdout when omitted)");
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

nlohmann::json base_config(const CommonOptions& o) {
  nlohmann::json cfg = nlohmann::json::object();
  if (!o.groups.empty()) cfg["groups"] = o.groups;
  if (!o.p.empty()) cfg["p"] = o.p;
  if (o.dim >= 0) cfg["dim"] = o.dim;
  if (o.trials >= 0) cfg["trials"] = o.trials;
  cfg["seed"] = o.seed;
  if (o.tol) cfg["tol"] = *o.tol;
  return cfg;
}

int emit(const std::string& command, const nlohmann::json& cfg, const CommonOptions& o) {
  char* report = nullptr;
  int all_pass = 0;
  if (hylab_run(command.c_str(), cfg.dump().c_str(), &report, &all_pass) != HYLAB_OK) {
    std::cerr << "hylab " << command << ": " << hylab_last_error() << '\n';
    return kExitUsage;
  }
  std::string text = report;
  hylab_string_free(report);
  const auto doc = nlohmann::json::parse(text);

  if (o.format == "csv") {
    char* csv = nullptr;
    if (hylab_report_to_csv(text.c_str(), &csv) != HYLAB_OK) {
      std::cerr << "hylab " << command << ": " << hylab_last_error() << '\n';
      return kExitUsage;
    }
    text = csv;
    hylab_string_free(csv);
  } else {
    text += '\n';
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "hylab: cannot write " << o.out << '\n';
      return kExitUsage;
    }
    f << text;
  }

  const auto& s = doc["summary"];
  std::cerr << command << ": " << s["passed"] << "/" << s["total"] << " checks passed, worst ratio "
            << s["worst_ratio"] << '\n';
  if (command == "extremal") {
    const auto& e = doc["extra"];
    std::fprintf(stderr, "best ratio %.12f  classification %s\n", e["best_ratio"].get<double>(),
                 e["classification"].get<std::string>().c_str());
  }
  if (!all_pass) std::cerr << "violation: " << s["worst_case"].dump() << '\n';
  return all_pass ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of Hausdorff-Young / Clarkson-McCarthy inequalities for operator-valued "
               "functions on finite abelian groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hylab_version()));

  CommonOptions verify_o, parseval_o, weighted_o, extremal_o, padic_o, grid_o, clarkson_o;

  auto* verify = app.add_subcommand("verify", "Main inequality (p in (1,2]; p = 1 runs the sup form) on random fields");
  add_common(verify, verify_o);

  auto* parseval = app.add_subcommand("parseval", "Operator Parseval identity on random fields");
  add_common(parseval, parseval_o);

  std::vector<double> ts;
  std::string constant_form = "stated";
  auto* weighted = app.add_subcommand("weighted", "Weighted Schatten variants along the geometric-mean path");
  add_common(weighted, weighted_o);
  weighted->add_option("--t", ts, "Path parameters in [0,1], comma separated")->delimiter(',');
  weighted->add_option("--constant", constant_form, "Constant on the right: stated (C^t) or interpolated (C^(tq))")
      ->check(CLI::IsMember({"stated", "interpolated"}));

  int restarts = -1, max_iter = -1;
  auto* extremal = app.add_subcommand("extremal", "Search for fields maximizing the main-inequality ratio");
  add_common(extremal, extremal_o);
  extremal->add_option("--restarts", restarts, "Number of random restarts");
  extremal->add_option("--max-iter", max_iter, "Iterations per restart");

  std::int64_t prime = 2;
  int depth_neg = 1, depth_pos = 2;
  auto* padic = app.add_subcommand("padic-demo", "Truncated p-adic model: characters and the main inequality");
  add_common(padic, padic_o, false);
  padic->add_option("--prime", prime, "Prime p");
  padic->add_option("--depth-neg", depth_neg, "m: finest scale p^-m");
  padic->add_option("--depth-pos", depth_pos, "M: coarsest scale p^M");

  int grid_n = 1;
  std::vector<double> points, widths;
  double extent = 8.0;
  std::string field_kind = "gaussian";
  auto* grid = app.add_subcommand("grid-demo", "R^n grid refinements with a Gaussian bump field");
  add_common(grid, grid_o, false);
  grid->add_option("--grid-dim", grid_n, "Grid dimension n");
  grid->add_option("--points", points, "Points per axis N, comma separated")->delimiter(',');
  grid->add_option("--cell-width", widths, "Cell widths h, comma separated (default extent/N)")->delimiter(',');
  grid->add_option("--extent", extent, "Box length used when --cell-width is omitted");
  grid->add_option("--field", field_kind, "Test field")->check(CLI::IsMember({"gaussian", "zero"}));

  std::vector<int> tuple_sizes;
  auto* clarkson = app.add_subcommand("clarkson", "Classical Clarkson-McCarthy and n-tuple inequalities");
  add_common(clarkson, clarkson_o, false);
  clarkson->add_option("--tuple", tuple_sizes, "Tuple sizes n for the n-operator form")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  if (verify->parsed()) return emit("verify", base_config(verify_o), verify_o);
  if (parseval->parsed()) return emit("parseval", base_config(parseval_o), parseval_o);
  if (weighted->parsed()) {
    auto cfg = base_config(weighted_o);
    if (!ts.empty()) cfg["t"] = ts;
    cfg["constant"] = constant_form;
    return emit("weighted", cfg, weighted_o);
  }
  if (extremal->parsed()) {
    auto cfg = base_config(extremal_o);
    if (restarts >= 0) cfg["restarts"] = restarts;
    if (max_iter >= 0) cfg["max_iterations"] = max_iter;
    return emit("extremal", cfg, extremal_o);
  }
  if (padic->parsed()) {
    auto cfg = base_config(padic_o);
    cfg["prime"] = prime;
    cfg["m"] = depth_neg;
    cfg["M"] = depth_pos;
    return emit("padic-demo", cfg, padic_o);
  }
  if (grid->parsed()) {
    auto cfg = base_config(grid_o);
    cfg["grid_n"] = grid_n;
    if (!points.empty()) cfg["N"] = points;
    if (!widths.empty()) cfg["h"] = widths;
    cfg["extent"] = extent;
    cfg["field"] = field_kind;
    return emit("grid-demo", cfg, grid_o);
  }
  if (clarkson->parsed()) {
    auto cfg = base_config(clarkson_o);
    if (!tuple_sizes.empty()) cfg["n"] = tuple_sizes;
    return emit("clarkson", cfg, clarkson_o);
  }
  return kExitUsage;
}
