// Copyright (c) 2026 semidive contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIDIVE_DIVING_HPP
#define SEMIDIVE_DIVING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "semidive/config.hpp"
#include "semidive/model.hpp"
#include "semidive/propagate.hpp"
#include "semidive/simplex.hpp"

namespace semidive {

enum class CandidateKind { indicator, fractional_int };
enum class RoundDir { up, down };

struct Candidate {
  CandidateKind kind = CandidateKind::fractional_int;
  int var = -1;          // the binary z for indicator kind, the integer itself otherwise
  double score = 0.0;    // psi
  RoundDir direction = RoundDir::down;  // sigma
  double bound_value = 0.0;             // beta
};

/// Width of the random tie-breaking band below the constant score of the
/// fulfilled-indicator tier.
inline constexpr double kScoreTieDelta = 1e-3;

/// Candidate set K of Algorithm 1: indicator variables with integral LP value
/// whose implication is violated and which are still unfixed, plus every
/// integer variable with fractional LP value. Sorted by variable index.
std::vector<Candidate> collect_candidates(const Problem& problem,
                                          std::span<const double> lower,
                                          std::span<const double> upper,
                                          std::span<const double> point,
                                          double feas_tol = 1e-6,
                                          double int_tol = 1e-6);

/// Score of an indicator candidate: -1 when the semi-continuous value already
/// lies in {0} u [s, u], otherwise 100 (s - y) / s for y in (0, s). The
/// constant tier gets a deterministic perturbation into (-1 - delta, -1],
/// derived from (seed, j) so it is independent of candidate order.
double score_indicator(int j, double y_value, double min_lot, double upper,
                       std::uint64_t seed);

/// Fallback score for fractional integer candidates: the fractional-diving
/// score r = 1 - 2 min(f, 1-f) mapped through a sigmoid into [-300, -100],
/// keeping it strictly below every indicator score.
double score_fallback(double value);

/// Rounding direction sigma and new bound value beta for a scored candidate.
void round_and_bound(Candidate& cand, std::span<const double> point,
                     const Problem& problem);

struct DiveStats {
  bool called = false;
  bool found = false;
  int lp_resolves = 0;
  int depth_reached = 0;
  int backtracks = 0;
  int indicator_steps = 0;   // dive steps taken on indicator candidates
  int fallback_steps = 0;
  double time_s = 0.0;
};

struct DiveResult {
  std::optional<Point> point;
  double objective = 0.0;  // includes the problem offset, valid when point set
  DiveStats stats;
};

/// One invocation of the diving heuristic on a solved LP. incumbent_obj, when
/// present, must already be reflected in the LP's cutoff row by the caller
/// (dive() itself tightens it as well). All bound changes are undone before
/// returning; the LP is left unsolved with its basis intact.
DiveResult dive(const Problem& problem, Lp& lp, const RelaxInfo& relax_info,
                std::optional<double> incumbent_obj, const SolverConfig& config);

/// Rounds the LP point to the nearest candidate solution: integers to the
/// nearest integral value (ties down), every link's pair via the 0.5 s rule.
/// Returns the point only when it passes check_feasible.
std::optional<Point> simple_round(const Problem& problem,
                                  std::span<const double> point,
                                  double feas_tol = 1e-6, double int_tol = 1e-6);

}  // namespace semidive

#endif
