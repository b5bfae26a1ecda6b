// Copyright (c) 2026 semidive contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIDIVE_CONFIG_HPP
#define SEMIDIVE_CONFIG_HPP

#include <cstdint>
#include <limits>

namespace semidive {

struct Tolerances {
  double feas = 1e-6;
  double integrality = 1e-6;
  double opt = 1e-7;  // LP dual feasibility, tighter than MIP tolerances
};

struct Limits {
  double time_s = std::numeric_limits<double>::infinity();
  long nodes = std::numeric_limits<long>::max();
  bool root_only = false;
};

struct HeurConfig {
  bool enabled = true;
  int resolve_freq = 1;       // resolve LP after every k-th bound change
  int max_depth = 0;          // 0 = auto: unfixed discrete vars + links, capped at 500
  int backtrack_budget = 10;  // global opposite-direction retries per dive
  bool row_propagation = true;
  int row_prop_rounds = 2;    // activity-tightening rounds per dive step
  int depth_freq = 0;         // 0 = dive at root only, k > 0 = also at depth % k == 0
};

struct SolverConfig {
  Tolerances tol;
  Limits limits;
  HeurConfig heur;
  std::uint64_t seed = 0;
  int node_prop_rounds = 5;  // row propagation rounds at node setup
  bool node_rounding = true; // try simple rounding of each node LP solution
};

/// Minimum improvement a new incumbent must achieve over the current one.
inline double cutoff_eps(double incumbent_obj) {
  double a = incumbent_obj < 0 ? -incumbent_obj : incumbent_obj;
  return 1e-6 > 1e-6 * a ? 1e-6 : 1e-6 * a;
}

}  // namespace semidive

#endif
