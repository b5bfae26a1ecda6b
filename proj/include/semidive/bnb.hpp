// Copyright (c) 2026 semidive contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIDIVE_BNB_HPP
#define SEMIDIVE_BNB_HPP

#include <optional>
#include <string>
#include <vector>

#include "semidive/config.hpp"
#include "semidive/diving.hpp"
#include "semidive/model.hpp"

namespace semidive {

enum class SolveStatus { optimal, infeasible, unbounded, time_limit, node_limit };

enum class IncumbentSource { diving, rounding, node_integral };

std::string to_string(SolveStatus s);
std::string to_string(IncumbentSource s);

struct Incumbent {
  Point point;
  double objective = 0.0;
  double found_at_s = 0.0;
  IncumbentSource source = IncumbentSource::node_integral;
};

struct TimelineEvent {
  double t = 0.0;
  double objective = 0.0;
  IncumbentSource source = IncumbentSource::node_integral;
};

struct SolveStats {
  long nodes = 0;
  long lp_iterations = 0;
  int heur_called = 0;
  int heur_found = 0;
  double heur_time_s = 0.0;
  long heur_lp_resolves = 0;
  double total_time_s = 0.0;
  long indicator_branches = 0;
  long int_branches = 0;
  long generic_branches = 0;
  long indicator_candidates_seen = 0;  // indicator-kind diving candidates
};

struct SolveResult {
  SolveStatus status = SolveStatus::node_limit;
  std::optional<Incumbent> incumbent;
  double bound = -kInf;  // global dual bound, includes the objective offset
  std::vector<TimelineEvent> timeline;
  SolveStats stats;
  std::vector<double> unbounded_ray;  // structural ray when status == unbounded
};

/// LP-based branch-and-bound on an indicator-form problem: best-bound node
/// selection with short plunges, propagation at every node, indicator and
/// most-fractional branching, diving at the root (and optionally deeper).
SolveResult solve(const Problem& problem, const SolverConfig& config = {});

}  // namespace semidive

#endif
