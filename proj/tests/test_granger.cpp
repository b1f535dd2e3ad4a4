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

#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "leadlag/granger.hpp"
#include "leadlag/rng.hpp"
#include "leadlag/synth.hpp"

namespace {

// Independent ordinary-least-squares oracle: normal equations in long double
// solved by Gaussian elimination with partial pivoting. Deliberately avoids
// Eigen so it shares no code path with the implementation under test.
long double oracle_rss(const std::vector<std::vector<long double>> &design,
                       const std::vector<long double> &target) {
  const std::size_t rows = design.size();
  const std::size_t cols = design.front().size();
  std::vector<std::vector<long double>> a(cols,
                                          std::vector<long double>(cols, 0.0L));
  std::vector<long double> b(cols, 0.0L);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      b[j] += design[i][j] * target[i];
      for (std::size_t k = 0; k < cols; ++k)
        a[j][k] += design[i][j] * design[i][k];
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {  // eliminate
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < cols; ++r)
      if (std::fabs(static_cast<double>(a[r][c])) >
          std::fabs(static_cast<double>(a[pivot][c])))
        pivot = r;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (std::size_t r = c + 1; r < cols; ++r) {
      const long double m = a[r][c] / a[c][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= m * a[c][k];
      b[r] -= m * b[c];
    }
  }
  std::vector<long double> coef(cols);
  for (std::size_t c = cols; c-- > 0;) {
    long double s = b[c];
    for (std::size_t k = c + 1; k < cols; ++k) s -= a[c][k] * coef[k];
    coef[c] = s / a[c][c];
  }
  long double rss = 0.0L;
  for (std::size_t i = 0; i < rows; ++i) {
    long double fit = 0.0L;
    for (std::size_t j = 0; j < cols; ++j) fit += design[i][j] * coef[j];
    const long double resid = target[i] - fit;
    rss += resid * resid;
  }
  return rss;
}

// Recomputes the Granger F statistic from scratch for a lag-L test.
double oracle_f(const std::vector<double> &y, const std::vector<double> &x,
                int lag) {
  const std::size_t t = y.size();
  const std::size_t l = static_cast<std::size_t>(lag);
  const std::size_t rows = t - l;
  std::vector<std::vector<long double>> restricted, unrestricted;
  std::vector<long double> target;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t tt = l + i;
    target.push_back(y[tt]);
    std::vector<long double> rrow{1.0L}, urow{1.0L};
    for (std::size_t j = 1; j <= l; ++j) rrow.push_back(y[tt - j]);
    urow = rrow;
    for (std::size_t j = 1; j <= l; ++j) urow.push_back(x[tt - j]);
    restricted.push_back(rrow);
    unrestricted.push_back(urow);
  }
  const long double rss_r = oracle_rss(restricted, target);
  const long double rss_u = oracle_rss(unrestricted, target);
  const long double dof = static_cast<long double>(rows - 2 * l - 1);
  return static_cast<double>(((rss_r - rss_u) / static_cast<long double>(l)) /
                             (rss_u / dof));
}

}  // namespace

TEST_CASE("granger F statistic matches an independent OLS oracle",
          "[granger]") {
  leadlag::CouplingSpec cs;
  cs.true_lag = 1;
  cs.beta = 0.9;
  cs.noise_sigma = 0.5;
  cs.T = 120;
  cs.seed = 314;
  const leadlag::TimeSeriesPanel p = leadlag::coupled_pair(cs);
  const std::vector<double> y = p.column("y");
  const std::vector<double> x = p.column("x");
  for (int lag : {1, 2, 3}) {
    const leadlag::GrangerResult r = leadlag::granger_test(y, x, lag);
    const double f_ref = oracle_f(y, x, lag);
    INFO("lag=" << lag);
    REQUIRE(r.f_statistic == Catch::Approx(f_ref).epsilon(1e-8));
    REQUIRE(r.log_inv_p == Catch::Approx(-std::log(r.p_value)).margin(1e-12));
  }
}

TEST_CASE("granger detects genuine coupling with a tiny p-value",
          "[granger]") {
  leadlag::CouplingSpec cs;
  cs.true_lag = 1;
  cs.beta = 0.9;
  cs.noise_sigma = 0.1;
  cs.T = 400;
  cs.seed = 7;
  const leadlag::TimeSeriesPanel p = leadlag::coupled_pair(cs);
  const leadlag::GrangerResult r =
      leadlag::granger_test(p.column("y"), p.column("x"), 2);
  REQUIRE(r.p_value < 1e-4);
  REQUIRE(r.f_statistic > 10.0);
}

TEST_CASE("granger on independent noise is calibrated", "[granger]") {
  // Null rejection rate at alpha = 0.05 over 200 seeds should sit near 5%.
  int rejections = 0;
  const int n_seeds = 200;
  for (int s = 0; s < n_seeds; ++s) {
    const leadlag::TimeSeriesPanel p =
        leadlag::iid_panel(2, 400, static_cast<std::uint64_t>(42000 + s));
    const leadlag::GrangerResult r =
        leadlag::granger_test(p.column("series_2"), p.column("series_1"), 2);
    if (r.p_value < 0.05) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / n_seeds;
  REQUIRE(rate >= 0.01);
  REQUIRE(rate <= 0.10);
}

TEST_CASE("RSS never increases when regressors are added", "[granger]") {
  // Property: the F statistic is nonnegative (RSS_u <= RSS_r) whatever the
  // input, and invariant under affine maps of either series.
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const leadlag::TimeSeriesPanel p = leadlag::iid_panel(2, 60, s);
    const std::vector<double> y = p.column("series_1");
    const std::vector<double> x = p.column("series_2");
    const leadlag::GrangerResult r = leadlag::granger_test(y, x, 2);
    REQUIRE(r.f_statistic >= 0.0);
    REQUIRE(r.p_value > 0.0);
    REQUIRE(r.p_value <= 1.0);

    std::vector<double> y2(y), x2(x);
    for (auto &v : y2) v = 3.0 * v - 5.0;
    for (auto &v : x2) v = -0.5 * v + 2.0;
    const leadlag::GrangerResult r2 = leadlag::granger_test(y2, x2, 2);
    REQUIRE(r2.f_statistic == Catch::Approx(r.f_statistic).epsilon(1e-7));
  }
}

TEST_CASE("degenerate designs are refused, not fudged", "[granger]") {
  const leadlag::TimeSeriesPanel p = leadlag::iid_panel(2, 100, 3);
  const std::vector<double> y = p.column("series_1");
  // Cause identical to effect: the unrestricted design is collinear.
  REQUIRE_THROWS_AS(leadlag::granger_test(y, y, 2),
                    leadlag::SingularDesignError);
  // Constant cause: its lag columns duplicate the intercept.
  const std::vector<double> flat(100, 1.0);
  REQUIRE_THROWS_AS(leadlag::granger_test(y, flat, 2),
                    leadlag::SingularDesignError);
  // Series too short for the lag order.
  const std::vector<double> shorty(8, 0.0);
  REQUIRE_THROWS_AS(leadlag::granger_test(shorty, shorty, 2),
                    leadlag::InsufficientDataError);
  REQUIRE_THROWS_AS(leadlag::granger_test(y, y, 0), leadlag::DomainError);
}

TEST_CASE("differencing defuses spurious random-walk significance",
          "[granger]") {
  // Independent random walks: the F-test on levels over-rejects. The
  // distortion is moderate rather than explosive (the lagged-effect
  // regressors absorb most of the stochastic trend) but systematic; first
  // differences restore calibration. Under a calibrated null, log(1/p) is
  // exponential with mean one, so the levels run should sit clearly above
  // one and the differenced run close to it.
  double raw_lip = 0.0, diff_lip = 0.0;
  int raw_reject = 0, diff_reject = 0;
  const int n_seeds = 50;
  for (int s = 0; s < n_seeds; ++s) {
    leadlag::Rng ra(leadlag::Rng::derive_stream(88, 2 * static_cast<std::uint64_t>(s)));
    leadlag::Rng rb(leadlag::Rng::derive_stream(88, 2 * static_cast<std::uint64_t>(s) + 1));
    std::vector<double> a(300), b(300);
    double ca = 0.0, cb = 0.0;
    for (int t = 0; t < 300; ++t) {
      ca += ra.normal();
      cb += rb.normal();
      a[static_cast<std::size_t>(t)] = ca;
      b[static_cast<std::size_t>(t)] = cb;
    }
    const leadlag::GrangerResult r = leadlag::granger_test(a, b, 2, false);
    raw_lip += r.log_inv_p;
    if (r.p_value < 0.05) ++raw_reject;
    const leadlag::GrangerResult d = leadlag::granger_test(a, b, 2, true);
    diff_lip += d.log_inv_p;
    if (d.p_value < 0.05) ++diff_reject;
  }
  // Levels: rejection rate far above the nominal 5% (expected count 2.5),
  // and mean evidence above both the null level and the differenced run.
  REQUIRE(raw_reject >= 6);
  REQUIRE(raw_lip / n_seeds > 1.4);
  REQUIRE(raw_lip > 1.3 * diff_lip);
  // Differences: calibrated rejection rate and near-null mean evidence.
  REQUIRE(diff_reject <= 10);
  REQUIRE(diff_lip / n_seeds > 0.7);
  REQUIRE(diff_lip / n_seeds < 1.4);
}

TEST_CASE("granger_panel emits the full cartesian grid in order",
          "[granger]") {
  const leadlag::TimeSeriesPanel p = leadlag::iid_panel(4, 200, 5);
  const std::vector<leadlag::GrangerPanelRow> rows = leadlag::granger_panel(
      p, "series_1", {"series_2", "series_3", "series_4"}, {2, 5},
      {leadlag::GrangerVariant::kRaw, leadlag::GrangerVariant::kDiff});
  REQUIRE(rows.size() == 12);  // 3 causes x 2 lags x 2 variants
  // Nesting: cause outermost, then lag, then variant.
  REQUIRE(rows[0].cause_name == "series_2");
  REQUIRE(rows[0].lag_order == 2);
  REQUIRE(rows[0].variant == leadlag::GrangerVariant::kRaw);
  REQUIRE(rows[1].variant == leadlag::GrangerVariant::kDiff);
  REQUIRE(rows[2].lag_order == 5);
  REQUIRE(rows[4].cause_name == "series_3");
  REQUIRE(rows[11].cause_name == "series_4");
  REQUIRE(rows[11].lag_order == 5);
  REQUIRE(rows[11].variant == leadlag::GrangerVariant::kDiff);
  for (const auto &r : rows) {
    REQUIRE(r.error.empty());
    REQUIRE(r.error_kind == leadlag::GrangerPanelRow::ErrorKind::kNone);
    REQUIRE(std::isfinite(r.f_statistic));
  }
}

TEST_CASE("granger_panel records per-pair failures and keeps going",
          "[granger]") {
  leadlag::TimeSeriesPanel p = leadlag::iid_panel(3, 200, 6);
  // Make series_3 constant: every test against it must fail with a
  // singular design, while series_2 rows still succeed.
  p.values.col(2).setConstant(1.0);
  const std::vector<leadlag::GrangerPanelRow> rows = leadlag::granger_panel(
      p, "series_1", {"series_2", "series_3"}, {2},
      {leadlag::GrangerVariant::kRaw});
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[0].error.empty());
  REQUIRE(std::isfinite(rows[0].f_statistic));
  REQUIRE(!rows[1].error.empty());
  REQUIRE(rows[1].error_kind ==
          leadlag::GrangerPanelRow::ErrorKind::kNumeric);
  REQUIRE(std::isnan(rows[1].f_statistic));
}

TEST_CASE("winsorized variants tame a single wild outlier", "[granger]") {
  // A huge spike in the cause series distorts the raw fit; the winsorized
  // variant clamps it. Check the clamped run matches a hand-clamped run.
  leadlag::TimeSeriesPanel p = leadlag::iid_panel(2, 300, 11);
  p.values(150, 1) = 1e6;  // spike in series_2
  const std::vector<leadlag::GrangerPanelRow> rows = leadlag::granger_panel(
      p, "series_1", {"series_2"}, {2},
      {leadlag::GrangerVariant::kRaw, leadlag::GrangerVariant::kRawWinsorized});
  REQUIRE(rows.size() == 2);
  const std::vector<double> clamped = leadlag::winsorize(p.column("series_2"));
  const leadlag::GrangerResult ref =
      leadlag::granger_test(leadlag::winsorize(p.column("series_1")), clamped, 2);
  REQUIRE(rows[1].f_statistic == Catch::Approx(ref.f_statistic).margin(1e-12));
  // And the clamp actually changed the data (the spike exceeded the cut).
  REQUIRE(rows[0].f_statistic != rows[1].f_statistic);
}
