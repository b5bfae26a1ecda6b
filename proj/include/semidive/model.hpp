// Copyright (c) 2026 semidive contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIDIVE_MODEL_HPP
#define SEMIDIVE_MODEL_HPP

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semidive {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarKind { continuous, integer, binary };

struct Variable {
  std::string name;
  VarKind kind = VarKind::continuous;
  double lower = 0.0;
  double upper = kInf;
  double objective = 0.0;
};

/// Declares variable `var` semi-continuous with domain {0} u [min_lot, upper].
/// Only present in the pre-reformulation stage of a Problem.
struct SemiContinuousSpec {
  int var = -1;
  double min_lot = 0.0;
  double upper = kInf;
  double unit_cost = 0.0;
  double setup_cost = 0.0;
};

/// Post-reformulation coupling: binary_var = 0 implies governed_var <= 0.
/// The companion inequality min_lot * z <= y lives in rows (index lot_row);
/// the implication itself is deliberately kept out of the LP.
struct IndicatorLink {
  int binary_var = -1;
  int governed_var = -1;
  double min_lot = 0.0;
  int lot_row = -1;
};

enum class RowSense { less_equal, greater_equal, equal };

struct LinearRow {
  std::string name;
  std::vector<int> vars;
  std::vector<double> coeffs;
  RowSense sense = RowSense::less_equal;
  double rhs = 0.0;
};

/// An implication binary_var = active_value => row holds. Produced by MPS
/// INDICATORS entries that do not match the semi-continuity pattern. Enforced
/// in feasibility checking and branch-and-bound, but never scored by the
/// indicator diving rules.
struct GenericIndicator {
  int binary_var = -1;
  int active_value = 0;
  LinearRow row;
};

enum class ProblemForm { semicontinuous, indicator };

struct Point {
  std::vector<double> values;
};

struct Problem {
  ProblemForm form = ProblemForm::semicontinuous;
  std::vector<Variable> variables;
  std::vector<LinearRow> rows;
  std::vector<SemiContinuousSpec> sc_specs;     // nonempty only in semicontinuous form
  std::vector<IndicatorLink> links;             // nonempty only in indicator form
  std::vector<GenericIndicator> generic_indicators;
  double objective_offset = 0.0;

  int num_vars() const { return static_cast<int>(variables.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  bool is_discrete(int v) const { return variables[v].kind != VarKind::continuous; }
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

struct FeasibilityReport {
  double row_violation = 0.0;
  double bound_violation = 0.0;
  double integrality_violation = 0.0;
  double indicator_violation = 0.0;
  bool feasible = false;

  double max_violation() const;
};

ValidationReport validate(const Problem& problem);

/// Rounds finite integer-variable bounds inward to integral values.
void normalize_bounds(Problem& problem);

/// Rewrites every semi-continuous spec as binary + lot row + indicator link.
/// The input must be in semicontinuous form; the result is in indicator form.
Problem reformulate_indicator(const Problem& problem);

/// Rewrites every semi-continuous spec with the classic big-M rows
/// y <= M z and s z <= y. big_m has one entry per spec; every entry must be
/// finite and at least the spec's upper bound when that is finite.
Problem reformulate_bigm(const Problem& problem, std::span<const double> big_m);

/// Convenience: big-M with M_j = u_j (requires all upper bounds finite).
Problem reformulate_bigm(const Problem& problem);

double objective_value(const Problem& problem, const Point& point);

FeasibilityReport check_feasible(const Problem& problem, const Point& point,
                                 double feas_tol = 1e-6, double int_tol = 1e-6);

double row_activity(const LinearRow& row, std::span<const double> values);

/// Violation of a single row at the given point (0 when satisfied).
double row_violation(const LinearRow& row, std::span<const double> values);

}  // namespace semidive

#endif
