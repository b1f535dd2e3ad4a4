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

#include "leadlag/panel.hpp"
#include "leadlag/stats.hpp"
#include "leadlag/synth.hpp"

TEST_CASE("iid panel has the requested shape and calendar", "[synth]") {
  const leadlag::TimeSeriesPanel p = leadlag::iid_panel(3, 400, 1);
  REQUIRE(p.rows() == 400);
  REQUIRE(p.cols() == 3);
  REQUIRE(p.names == std::vector<std::string>{"series_1", "series_2",
                                              "series_3"});
  REQUIRE(p.timestamps.front() == leadlag::synthetic_start_day());
  for (std::size_t i = 1; i < p.timestamps.size(); ++i)
    REQUIRE(p.timestamps[i] == p.timestamps[i - 1] + 1);  // daily grid
  REQUIRE_NOTHROW(p.validate());
  REQUIRE_THROWS_AS(leadlag::iid_panel(1, 400, 1), leadlag::DomainError);
  REQUIRE_THROWS_AS(leadlag::iid_panel(2, 9, 1), leadlag::DomainError);
}

TEST_CASE("iid panel columns look like independent standard normals",
          "[synth]") {
  const leadlag::TimeSeriesPanel p = leadlag::iid_panel(2, 400, 20260822);
  const std::vector<double> a = p.column("series_1");
  const std::vector<double> b = p.column("series_2");
  // |sample mean| < 4/sqrt(T): a four-standard-error band.
  REQUIRE(std::abs(leadlag::mean(a)) < 4.0 / std::sqrt(400.0));
  REQUIRE(std::abs(leadlag::mean(b)) < 4.0 / std::sqrt(400.0));
  REQUIRE(leadlag::population_std(a) == Catch::Approx(1.0).margin(0.15));
  REQUIRE(std::abs(leadlag::pearson(a, b)) < 0.2);
}

TEST_CASE("iid panel is reproducible and seed-sensitive", "[synth]") {
  const leadlag::TimeSeriesPanel p1 = leadlag::iid_panel(2, 50, 9);
  const leadlag::TimeSeriesPanel p2 = leadlag::iid_panel(2, 50, 9);
  const leadlag::TimeSeriesPanel p3 = leadlag::iid_panel(2, 50, 10);
  REQUIRE((p1.values.array() == p2.values.array()).all());
  REQUIRE(!(p1.values.array() == p3.values.array()).all());
}

TEST_CASE("coupled pair follows its generating equation exactly", "[synth]") {
  leadlag::CouplingSpec cs;
  cs.true_lag = 2;
  cs.beta = 0.9;
  cs.noise_sigma = 0.5;
  cs.T = 400;
  cs.seed = 33;
  const leadlag::TimeSeriesPanel p = leadlag::coupled_pair(cs);
  REQUIRE(p.names == std::vector<std::string>{"x", "y"});
  const std::vector<double> x = p.column("x");
  const std::vector<double> y = p.column("y");
  // Recover the innovation and check it is N(0,1)-sized, mean ~ 0: the body
  // of y must be beta * lagged x plus sigma * noise and nothing else.
  std::vector<double> eps;
  for (int t = cs.true_lag; t < cs.T; ++t)
    eps.push_back((y[static_cast<std::size_t>(t)] -
                   cs.beta * x[static_cast<std::size_t>(t - cs.true_lag)]) /
                  cs.noise_sigma);
  REQUIRE(std::abs(leadlag::mean(eps)) < 4.0 / std::sqrt(400.0));
  REQUIRE(leadlag::population_std(eps) == Catch::Approx(1.0).margin(0.15));
  // The recovered innovations are uncorrelated with the driver.
  const std::vector<double> x_head(x.begin(),
                                   x.begin() + (cs.T - cs.true_lag));
  REQUIRE(std::abs(leadlag::pearson(eps, x_head)) < 0.2);
  // Head samples (before the lag kicks in) are plain unit-scale noise.
  REQUIRE(std::abs(y[0]) < 5.0);
  REQUIRE(std::abs(y[1]) < 5.0);
}

TEST_CASE("coupled pair without noise is a scaled delayed copy", "[synth]") {
  leadlag::CouplingSpec cs;
  cs.true_lag = 3;
  cs.beta = 0.7;
  cs.noise_sigma = 0.0;
  cs.T = 50;
  cs.seed = 4;
  const leadlag::TimeSeriesPanel p = leadlag::coupled_pair(cs);
  const std::vector<double> x = p.column("x");
  const std::vector<double> y = p.column("y");
  for (int t = 3; t < 50; ++t)
    REQUIRE(y[static_cast<std::size_t>(t)] ==
            Catch::Approx(0.7 * x[static_cast<std::size_t>(t - 3)])
                .margin(1e-15));
}

TEST_CASE("coupling spec validation", "[synth]") {
  leadlag::CouplingSpec cs;
  cs.true_lag = -1;
  REQUIRE_THROWS_AS(cs.validate(), leadlag::DomainError);
  cs.true_lag = 2;
  cs.noise_sigma = -0.1;
  REQUIRE_THROWS_AS(cs.validate(), leadlag::DomainError);
  cs.noise_sigma = 0.5;
  cs.T = 12;  // needs T > true_lag + 10
  REQUIRE_THROWS_AS(cs.validate(), leadlag::DomainError);
  cs.T = 13;
  REQUIRE_NOTHROW(cs.validate());
}
