// Copyright (c) 2026 semidive contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIDIVE_SIMPLEX_HPP
#define SEMIDIVE_SIMPLEX_HPP

#include <cstdint>
#include <vector>

#include "semidive/model.hpp"

namespace semidive {

enum class LpStatus { unsolved, optimal, infeasible, unbounded, iteration_limit };

enum class BasisStatus : std::uint8_t { basic, at_lower, at_upper, nonbasic_free };

enum class BoundSide { lower, upper };

struct BoundChange {
  int var = -1;
  BoundSide side = BoundSide::lower;
  double old_value = 0.0;
  double new_value = 0.0;
};

struct LpOptions {
  double feas_tol = 1e-6;
  double opt_tol = 1e-7;
  double pivot_tol = 1e-9;
  long max_iterations = 200000;
  int refactor_every = 50;   // eta updates between dense refactorizations
  int stall_limit = 1000;    // degenerate pivots before switching to Bland's rule
};

struct LpRow {
  std::vector<int> vars;
  std::vector<double> coeffs;
  double lower = -kInf;  // activity bounds; sense is encoded here
  double upper = kInf;
};

/// LP relaxation state: rows with activity bounds, mutable column bounds,
/// basis and primal values of the latest solve. Bound changes keep the basis
/// as a warm start for the dual simplex.
struct Lp {
  int num_vars = 0;
  std::vector<double> obj;
  std::vector<double> lower, upper;  // structural bounds, mutable
  std::vector<LpRow> rows;

  LpStatus status = LpStatus::unsolved;
  std::vector<double> x;      // structural values when solved
  double objective = 0.0;     // c^T x (without any model-level offset)
  std::vector<BasisStatus> basis;  // size num_vars + rows.size() once solved
  bool has_basis = false;

  // Infeasibility certificate: row multipliers y such that the aggregated
  // constraint y^T (Ax - s) = 0 cannot hold over the bound box. Empty when
  // the contradiction is a single crossed variable bound (infeasible_var).
  std::vector<double> farkas;
  int infeasible_var = -1;

  long iterations = 0;  // cumulative simplex pivots

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cols() const { return num_vars + num_rows(); }

  void add_row(LpRow row) { rows.push_back(std::move(row)); }

  Point point() const { return Point{x}; }
};

/// Bookkeeping returned by relax(): where the special rows ended up.
struct RelaxInfo {
  int cutoff_row = -1;                 // activity = objective function, or -1
  std::vector<int> generic_rows;       // one LP row per generic indicator, inactive
};

/// LP relaxation of an indicator-form problem: integrality and the indicator
/// implications are dropped; rows keep their senses as activity bounds.
/// Generic indicator rows are appended with free activity bounds so they can
/// be activated later by tightening the row bounds; an objective-cutoff row
/// is appended last (free until an incumbent exists) unless the objective is
/// identically zero.
Lp relax(const Problem& problem, RelaxInfo* info = nullptr);

LpStatus lp_solve(Lp& lp, const LpOptions& opts = {});

/// Tightening bound change; keeps the basis as a warm start. Crossing bounds
/// (new lower > upper) switch the state to infeasible without pivoting.
void apply_bound_change(Lp& lp, const BoundChange& change);

/// Arbitrary reset of one structural bound pair (node switching); also keeps
/// the basis. No tightening requirement.
void set_var_bounds(Lp& lp, int var, double lower, double upper);

/// Resets the activity bounds of a row (cutoff updates, generic indicator
/// activation). Keeps the basis.
void set_row_bounds(Lp& lp, int row, double lower, double upper);

/// Verifies a row-multiplier infeasibility certificate: returns the margin by
/// which the aggregated constraint excludes zero (positive = certified).
double farkas_margin(const Lp& lp, std::span<const double> y);

}  // namespace semidive

#endif
