#pragma once

#include <cstdint>
#include <string>

#include "hylab/transform.hpp"

namespace hylab {

struct SearchConfig {
  std::string group_spec = "Z2";
  Eigen::Index dim = 1;
  double p = 1.5;
  int restarts = 8;
  int max_iterations = 400;
  double initial_step = 0.25;
  double step_decay = 0.5;    // applied after 5 consecutive non-ascent steps
  double tolerance = 1e-10;   // stop once the step falls below this
  double fd_step = 1e-6;      // central-difference step, relative to parameter scale
  std::uint64_t seed = 0;
  bool parallel = true;
};

enum class ExtremalClass { DeltaLike, ParsevalP2, Other };
const char* to_string(ExtremalClass c);

struct SearchResult {
  double best_ratio = 0.0;
  OperatorField best_field;
  int iterations = 0;        // summed over restarts
  int best_restart = 0;
  bool improved = false;     // false if no restart ever beat its initial sample
  ExtremalClass classification = ExtremalClass::Other;
  double mass_concentration = 0.0;  // largest share of sum mu ||A||_F^2 on one element
  double dual_concentration = 0.0;  // largest share of sum nu ||B||_F^2 on one character
};

/// lhs / rhs of the main inequality; invariant under scaling the field.
/// Throws on the zero field.
double ratio_objective(const OperatorField& field, double p);

/// Multi-restart projected ascent on the sphere sum mu ||A||_F^2 = 1 using
/// central finite-difference gradients. Deterministic for a given config.
SearchResult maximize_ratio(const SearchConfig& config);

/// delta-like: at least (1 - 1e-3) of the mass sits on one element;
/// parseval-p2: |p - 2| <= 1e-9; otherwise other.
ExtremalClass classify_extremal(const OperatorField& field, double p);

/// Largest share of sum mu ||A_theta||_F^2 carried by a single element.
double mass_concentration(const OperatorField& field);
/// Same share for the transform, sum nu ||B_xi||_F^2 over characters.
/// Character fields A_theta = A xi(theta) have dual concentration 1.
double dual_concentration(const OperatorField& field);

}  // namespace hylab
