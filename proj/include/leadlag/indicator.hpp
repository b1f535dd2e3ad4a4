// Copyright 2026 The Leadlag Authors. - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "leadlag/errors.hpp"
#include "leadlag/panel.hpp"
#include "leadlag/stats.hpp"

namespace leadlag {

// Rolling-window, multi-lag structural-dependence indicator.
//
// For a candidate cause x and an effect y, each window of length w is
// standardized, the lagged correlation rho_i between y and x shifted by
// i = 0..max_lag is computed, and mapped to the top-eigenvalue share
// V[i] = lambda_1 / (lambda_1 + lambda_2) = (1 + |rho_i|)/2 of the 2x2
// correlation matrix. The indicator sigma_lambda is the (population) standard
// deviation of V across the configured lag set: near zero when the pair is
// unrelated at every lag, elevated when some lags carry structure and others
// do not.

// Which lags enter the standard deviation. Lag 0 measures contemporaneous
// correlation, not lead-lag structure, so it is excluded by default.
enum class LagSetPolicy { kExcludeLagZero, kIncludeLagZero };

struct WindowSpec {
  int window_w = 60;
  int max_lag = 5;
  LagSetPolicy lag_set = LagSetPolicy::kExcludeLagZero;

  void validate() const {
    if (window_w < 4) throw DomainError("WindowSpec: window_w must be >= 4");
    if (max_lag < 1) throw DomainError("WindowSpec: max_lag must be >= 1");
    // After shifting by max_lag, at least 3 overlapping points must remain.
    if (window_w <= max_lag + 2)
      throw DomainError("WindowSpec: window_w must exceed max_lag + 2");
  }
};

// Explanatory powers V[i] for one (cause, effect, window-end) triple.
struct LagProfile {
  std::string cause_name;
  std::string effect_name;
  Eigen::Index window_end = 0;  // index of the window's last row in the panel
  std::vector<double> V;        // indexed by lag 0..max_lag, entries in [0.5, 1]
};

// sigma_lambda per window end (rows) and causal candidate (columns).
// Windows where a degenerate (zero-variance) segment prevented the
// computation hold NaN — a gap, never a silent zero.
struct IndicatorSeries {
  std::string effect_name;
  std::vector<std::string> cause_names;
  std::vector<std::int64_t> timestamps;  // window end times
  Eigen::MatrixXd sigma_lambda;          // N x M, NaN = gap
};

// Centers and scales a window to mean 0, population standard deviation 1.
inline std::vector<double> standardize_window(const std::vector<double>& segment) {
  if (segment.size() < 2)
    throw DomainError("standardize_window: need at least 2 points");
  // minmax catches an exactly-constant window even when the computed
  // variance picks up a rounding residue from the mean.
  const auto [lo, hi] = std::minmax_element(segment.begin(), segment.end());
  if (*lo == *hi)
    throw DegenerateWindowError("standardize_window: zero variance in window");
  const double m = mean(segment);
  const double sd = population_std(segment);
  if (sd < 1e-12 * std::max(1.0, std::fabs(m)))
    throw DegenerateWindowError("standardize_window: zero variance in window");
  std::vector<double> out(segment.size());
  for (std::size_t i = 0; i < segment.size(); ++i) out[i] = (segment[i] - m) / sd;
  return out;
}

// Correlation between y and x with x shifted forward by `lag`: Pearson of
// y[lag:] against x[:T-lag]. The non-overlapping head is dropped (never
// zero-filled) and the overlap is re-standardized — plain Pearson on the
// overlap — so the value is a genuine correlation in [-1, 1].
inline double lagged_correlation(const std::vector<double>& y,
                                 const std::vector<double>& x, int lag) {
  if (y.size() != x.size())
    throw DomainError("lagged_correlation: length mismatch");
  const auto t = static_cast<int>(y.size());
  if (lag < 0 || lag >= t - 2)
    throw DomainError("lagged_correlation: lag must lie in [0, T-3]");
  const int overlap = t - lag;
  if (overlap < 3)
    throw InsufficientOverlapError("lagged_correlation: overlap shorter than 3");
  std::vector<double> yv(y.begin() + lag, y.end());
  std::vector<double> xv(x.begin(), x.begin() + overlap);
  return pearson(yv, xv);
}

// Top-eigenvalue share lambda_1/(lambda_1 + lambda_2) of the 2x2 correlation
// matrix [[1, rho], [rho, 1]]: eigenvalues are 1 + |rho| and 1 - |rho|, so the
// share is (1 + |rho|)/2.
inline double explanatory_power(double rho) {
  const double a = std::fabs(rho);
  if (a > 1.0 + 1e-12)
    throw DomainError("explanatory_power: |rho| exceeds 1");
  return (1.0 + std::min(a, 1.0)) / 2.0;
}

// Reference path for explanatory_power: builds the 2x2 matrix and solves the
// eigenproblem explicitly. Exists to cross-check the closed form in tests.
inline double explanatory_power_by_eigen(double rho) {
  if (std::fabs(rho) > 1.0 + 1e-12)
    throw DomainError("explanatory_power_by_eigen: |rho| exceeds 1");
  Eigen::Matrix2d corr;
  corr << 1.0, rho, rho, 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(corr);
  if (solver.info() != Eigen::Success)
    throw NumericError("explanatory_power_by_eigen: eigensolver failed");
  const double l1 = solver.eigenvalues()(1);  // ascending order
  const double l2 = solver.eigenvalues()(0);
  return l1 / (l1 + l2);
}

// V[i] = explanatory_power(lagged_correlation(y, x, i)) for i = 0..max_lag.
// Every lag shifts the ORIGINAL window by exactly i (shifts do not
// accumulate across loop iterations).
inline LagProfile lag_profile(const std::vector<double>& y,
                              const std::vector<double>& x,
                              const WindowSpec& spec) {
  spec.validate();
  if (static_cast<int>(y.size()) != spec.window_w ||
      static_cast<int>(x.size()) != spec.window_w)
    throw DomainError("lag_profile: window length must equal window_w");
  LagProfile profile;
  profile.V.resize(static_cast<std::size_t>(spec.max_lag) + 1);
  for (int i = 0; i <= spec.max_lag; ++i)
    profile.V[static_cast<std::size_t>(i)] =
        explanatory_power(lagged_correlation(y, x, i));
  return profile;
}

// Population standard deviation of V over the configured lag set.
inline double sigma_lambda(const LagProfile& profile, const WindowSpec& spec) {
  spec.validate();
  if (profile.V.size() != static_cast<std::size_t>(spec.max_lag) + 1)
    throw DomainError("sigma_lambda: profile does not match spec");
  const std::size_t first =
      spec.lag_set == LagSetPolicy::kExcludeLagZero ? 1u : 0u;
  std::vector<double> v(profile.V.begin() + first, profile.V.end());
  if (v.size() < 2)
    throw DomainError("sigma_lambda: lag set must contain at least 2 lags");
  return population_std(v);
}

// Runs the rolling indicator over every window end k = window_w-1 .. T-1 and
// every candidate cause. Degenerate windows yield NaN gaps in that cell.
inline IndicatorSeries indicator_series(const TimeSeriesPanel& panel,
                                        const std::string& effect,
                                        const std::vector<std::string>& causes,
                                        const WindowSpec& spec) {
  spec.validate();
  if (causes.empty()) throw DomainError("indicator_series: no causes given");
  const Eigen::Index effect_col = panel.column_index(effect);
  std::vector<Eigen::Index> cause_cols;
  cause_cols.reserve(causes.size());
  for (const auto& name : causes) cause_cols.push_back(panel.column_index(name));
  const auto t = panel.rows();
  const int w = spec.window_w;
  if (t <= w)
    throw InsufficientDataError(
        "indicator_series: panel length must exceed window_w");

  const auto n_windows = static_cast<std::size_t>(t - w + 1);
  IndicatorSeries series;
  series.effect_name = effect;
  series.cause_names = causes;
  series.timestamps.reserve(n_windows);
  series.sigma_lambda.resize(static_cast<Eigen::Index>(n_windows),
                             static_cast<Eigen::Index>(causes.size()));

  std::vector<double> y_raw(static_cast<std::size_t>(w)),
      x_raw(static_cast<std::size_t>(w));
  for (Eigen::Index k = w - 1; k < t; ++k) {
    const Eigen::Index row = k - (w - 1);
    series.timestamps.push_back(panel.timestamps[static_cast<std::size_t>(k)]);
    bool effect_ok = true;
    std::vector<double> y_std;
    for (int i = 0; i < w; ++i)
      y_raw[static_cast<std::size_t>(i)] = panel.values(k - w + 1 + i, effect_col);
    try {
      y_std = standardize_window(y_raw);
    } catch (const DegenerateWindowError&) {
      effect_ok = false;
    }
    for (std::size_t j = 0; j < cause_cols.size(); ++j) {
      double value = std::numeric_limits<double>::quiet_NaN();
      if (effect_ok) {
        try {
          for (int i = 0; i < w; ++i)
            x_raw[static_cast<std::size_t>(i)] =
                panel.values(k - w + 1 + i, cause_cols[j]);
          const std::vector<double> x_std = standardize_window(x_raw);
          const LagProfile profile = lag_profile(y_std, x_std, spec);
          value = sigma_lambda(profile, spec);
        } catch (const DegenerateWindowError&) {
          value = std::numeric_limits<double>::quiet_NaN();
        }
      }
      series.sigma_lambda(row, static_cast<Eigen::Index>(j)) = value;
    }
  }
  return series;
}

}  // namespace leadlag
