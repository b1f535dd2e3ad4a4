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

// Single-equation Granger-causality F-test: does adding lags of x to an
// autoregression of y reduce the residual sum of squares more than chance?
// Reported as the F statistic, its p-value, and log(1/p).

struct GrangerResult {
  std::string cause_name;
  std::string effect_name;
  int lag_order = 0;
  double f_statistic = 0.0;
  double p_value = 1.0;
  double log_inv_p = 0.0;
};

// Input preprocessing variants for panel runs.
enum class GrangerVariant { kRaw, kDiff, kRawWinsorized, kDiffWinsorized };

inline const char* granger_variant_name(GrangerVariant v) {
  switch (v) {
    case GrangerVariant::kRaw: return "raw";
    case GrangerVariant::kDiff: return "diff";
    case GrangerVariant::kRawWinsorized: return "raw_winsorized";
    case GrangerVariant::kDiffWinsorized: return "diff_winsorized";
  }
  throw DomainError("unknown granger variant");
}

inline GrangerVariant granger_variant_from_name(const std::string& name) {
  if (name == "raw") return GrangerVariant::kRaw;
  if (name == "diff") return GrangerVariant::kDiff;
  if (name == "raw_winsorized") return GrangerVariant::kRawWinsorized;
  if (name == "diff_winsorized") return GrangerVariant::kDiffWinsorized;
  throw UsageError("unknown granger variant: '" + name + "'");
}

namespace detail {

inline std::vector<double> first_difference(const std::vector<double>& v) {
  if (v.size() < 2)
    throw InsufficientDataError("difference: need at least 2 points");
  std::vector<double> out(v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i) out[i - 1] = v[i] - v[i - 1];
  return out;
}

// Residual sum of squares of minimum-norm least squares, with a rank check:
// a rank-deficient design is refused rather than silently pseudo-inverted.
inline double rss_or_throw(const Eigen::MatrixXd& design,
                           const Eigen::VectorXd& target) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < design.cols())
    throw SingularDesignError("granger_test: collinear regression design");
  const Eigen::VectorXd coef = qr.solve(target);
  return (target - design * coef).squaredNorm();
}

}  // namespace detail

// Nested-model F-test of "x helps predict y" at the given lag order.
//
// Restricted model:   y[t] ~ 1 + y[t-1..t-L]
// Unrestricted model: y[t] ~ 1 + y[t-1..t-L] + x[t-1..t-L]
// F = ((RSS_r - RSS_u)/L) / (RSS_u/(T_eff - 2L - 1)), p from F(L, T_eff-2L-1).
// With difference_first set, both series are first-differenced before fitting.
inline GrangerResult granger_test(const std::vector<double>& y,
                                  const std::vector<double>& x, int lag_order,
                                  bool difference_first = false) {
  if (lag_order < 1) throw DomainError("granger_test: lag_order must be >= 1");
  if (y.size() != x.size()) throw DomainError("granger_test: length mismatch");
  std::vector<double> ys = y, xs = x;
  if (difference_first) {
    ys = detail::first_difference(ys);
    xs = detail::first_difference(xs);
  }
  const auto t = static_cast<std::int64_t>(ys.size());
  const std::int64_t l = lag_order;
  if (t <= 3 * l + 2)
    throw InsufficientDataError(
        "granger_test: series too short for the requested lag order");
  const std::int64_t rows = t - l;
  const std::int64_t dof = rows - 2 * l - 1;
  if (dof < 1)
    throw InsufficientDataError("granger_test: nonpositive residual degrees of freedom");

  Eigen::VectorXd target(rows);
  Eigen::MatrixXd restricted(rows, l + 1);
  Eigen::MatrixXd unrestricted(rows, 2 * l + 1);
  for (std::int64_t i = 0; i < rows; ++i) {
    const std::int64_t tt = l + i;  // index into ys/xs
    target(i) = ys[static_cast<std::size_t>(tt)];
    restricted(i, 0) = 1.0;
    for (std::int64_t j = 1; j <= l; ++j)
      restricted(i, j) = ys[static_cast<std::size_t>(tt - j)];
    unrestricted.row(i).head(l + 1) = restricted.row(i);
    for (std::int64_t j = 1; j <= l; ++j)
      unrestricted(i, l + j) = xs[static_cast<std::size_t>(tt - j)];
  }

  const double rss_r = detail::rss_or_throw(restricted, target);
  const double rss_u = detail::rss_or_throw(unrestricted, target);
  const double scale = std::max(1.0, target.squaredNorm());
  if (rss_u <= 1e-12 * scale)
    throw DegenerateModelError(
        "granger_test: residual variance vanished in the unrestricted model");

  // RSS_u <= RSS_r mathematically; numerics may undershoot by rounding only.
  const double num = std::max(0.0, rss_r - rss_u) / static_cast<double>(l);
  const double den = rss_u / static_cast<double>(dof);
  const double f = num / den;
  double p = f_upper_tail(f, static_cast<double>(l), static_cast<double>(dof));
  p = std::clamp(p, 1e-300, 1.0);

  GrangerResult result;
  result.lag_order = lag_order;
  result.f_statistic = f;
  result.p_value = p;
  result.log_inv_p = -std::log(p);
  return result;
}

// One row of a panel run; `error` is empty on success, otherwise the stats
// are NaN and `error` describes the per-pair failure.
struct GrangerPanelRow {
  enum class ErrorKind { kNone, kData, kNumeric, kOther };

  std::string cause_name;
  std::string effect_name;
  int lag_order = 0;
  GrangerVariant variant = GrangerVariant::kRaw;
  double f_statistic = std::numeric_limits<double>::quiet_NaN();
  double p_value = std::numeric_limits<double>::quiet_NaN();
  double log_inv_p = std::numeric_limits<double>::quiet_NaN();
  std::string error;
  ErrorKind error_kind = ErrorKind::kNone;
};

// Cartesian product causes x lag_orders x variants, in that nesting order.
// Winsorization (when a variant asks for it) clamps each series at its
// 1st/99th nearest-rank percentiles BEFORE optional differencing: outliers are
// level anomalies. Per-pair failures are recorded in the row; the run
// continues.
inline std::vector<GrangerPanelRow> granger_panel(
    const TimeSeriesPanel& panel, const std::string& effect,
    const std::vector<std::string>& causes, const std::vector<int>& lag_orders,
    const std::vector<GrangerVariant>& variants) {
  if (causes.empty()) throw DomainError("granger_panel: no causes given");
  if (lag_orders.empty()) throw DomainError("granger_panel: no lag orders given");
  if (variants.empty()) throw DomainError("granger_panel: no variants given");
  const std::vector<double> y = panel.column(effect);

  std::vector<GrangerPanelRow> rows;
  rows.reserve(causes.size() * lag_orders.size() * variants.size());
  for (const auto& cause : causes) {
    const std::vector<double> x = panel.column(cause);
    for (int lag : lag_orders) {
      for (GrangerVariant variant : variants) {
        GrangerPanelRow row;
        row.cause_name = cause;
        row.effect_name = effect;
        row.lag_order = lag;
        row.variant = variant;
        try {
          const bool winsor = variant == GrangerVariant::kRawWinsorized ||
                              variant == GrangerVariant::kDiffWinsorized;
          const bool diff = variant == GrangerVariant::kDiff ||
                            variant == GrangerVariant::kDiffWinsorized;
          const std::vector<double> yy = winsor ? winsorize(y) : y;
          const std::vector<double> xx = winsor ? winsorize(x) : x;
          const GrangerResult r = granger_test(yy, xx, lag, diff);
          row.f_statistic = r.f_statistic;
          row.p_value = r.p_value;
          row.log_inv_p = r.log_inv_p;
        } catch (const DataError& e) {
          row.error = e.what();
          row.error_kind = GrangerPanelRow::ErrorKind::kData;
        } catch (const NumericError& e) {
          row.error = e.what();
          row.error_kind = GrangerPanelRow::ErrorKind::kNumeric;
        } catch (const Error& e) {
          row.error = e.what();
          row.error_kind = GrangerPanelRow::ErrorKind::kOther;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace leadlag
