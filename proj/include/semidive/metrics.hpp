// Copyright (c) 2026 semidive contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIDIVE_METRICS_HPP
#define SEMIDIVE_METRICS_HPP

#include <optional>
#include <span>
#include <vector>

namespace semidive {

/// Primal gap in [0, 1]: 1 without an incumbent, 0 when both objectives are
/// zero, 1 when they disagree in sign, |ref - inc| / max(|ref|, |inc|)
/// otherwise.
double primal_gap(std::optional<double> reference_obj,
                  std::optional<double> incumbent_obj);

struct Timeline {
  double r_max = 0.0;
  // (time, objective) of each new incumbent, times nondecreasing, objectives
  // strictly improving.
  std::vector<std::pair<double, double>> events;
  std::optional<double> reference;
};

/// Integral of the primal-gap step function over [0, r_max].
double primal_integral(const Timeline& timeline);

/// Shifted geometric mean (prod (w_i + s))^(1/N) - s, computed in log space.
/// The terms are accumulated in sorted order so permutations of the input
/// produce bit-identical results.
double sgm(std::span<const double> values, double shift = 1.0);

}  // namespace semidive

#endif
