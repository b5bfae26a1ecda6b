// Copyright (c) 2026 semidive contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIDIVE_PROPAGATE_HPP
#define SEMIDIVE_PROPAGATE_HPP

#include <vector>

#include "semidive/model.hpp"
#include "semidive/simplex.hpp"

namespace semidive {

/// Infeasibility is reported, never thrown, so the diving loop can backtrack.
struct PropagationResult {
  std::vector<BoundChange> changes;
  bool infeasible = false;
  int conflict_var = -1;

  void clear() {
    changes.clear();
    infeasible = false;
    conflict_var = -1;
  }
};

/// Deductions from the semi-continuity disjunction of the link(s) touching
/// changed_var (pass -1 to sweep all links). Mutates lower/upper in place and
/// appends the applied changes to out.
void propagate_indicator(const Problem& problem, std::vector<double>& lower,
                         std::vector<double>& upper, int changed_var,
                         PropagationResult& out, double feas_tol = 1e-6,
                         double int_tol = 1e-6);

/// Activity-based bound tightening over the problem rows plus any extra rows
/// (activated generic indicators), up to `rounds` sweeps or a fixpoint.
void propagate_rows(const Problem& problem, std::vector<double>& lower,
                    std::vector<double>& upper, int rounds, PropagationResult& out,
                    std::span<const LinearRow> extra_rows = {},
                    double feas_tol = 1e-6);

/// Driver used by diving and branch-and-bound: indicator propagation to a
/// fixpoint interleaved with row sweeps. row_rounds = 0 disables row
/// propagation; indicator propagation always runs.
void run_propagation(const Problem& problem, std::vector<double>& lower,
                     std::vector<double>& upper, int row_rounds,
                     PropagationResult& out, std::span<const LinearRow> extra_rows = {},
                     double feas_tol = 1e-6, double int_tol = 1e-6);

}  // namespace semidive

#endif
