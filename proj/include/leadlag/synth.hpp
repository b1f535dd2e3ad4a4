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

#include <cstdint>
#include <string>
#include <vector>

#include "leadlag/errors.hpp"
#include "leadlag/panel.hpp"
#include "leadlag/rng.hpp"

namespace leadlag {

// Seedable synthetic panels: i.i.d. Gaussian baselines and linearly coupled
// lead-lag pairs. Timestamps are consecutive days starting 2020-01-01.

inline std::int64_t synthetic_start_day() { return days_from_civil(2020, 1, 1); }

struct CouplingSpec {
  int true_lag = 2;
  double beta = 0.9;        // coupling coefficient
  double noise_sigma = 0.5; // >= 0
  int T = 400;
  std::uint64_t seed = 0;

  void validate() const {
    if (true_lag < 0) throw DomainError("CouplingSpec: true_lag must be >= 0");
    if (noise_sigma < 0.0)
      throw DomainError("CouplingSpec: noise_sigma must be >= 0");
    if (T <= true_lag + 10)
      throw DomainError("CouplingSpec: T must exceed true_lag + 10");
  }
};

// Panel of n_series independent standard-normal columns. Column j draws from
// its own derived stream (stream index j), so columns can be generated in any
// order — or in parallel — with identical results.
inline TimeSeriesPanel iid_panel(int n_series, int T, std::uint64_t seed) {
  if (n_series < 2) throw DomainError("iid_panel: need n_series >= 2");
  if (T < 10) throw DomainError("iid_panel: need T >= 10");
  TimeSeriesPanel panel;
  panel.values.resize(T, n_series);
  panel.timestamps.resize(static_cast<std::size_t>(T));
  for (int t = 0; t < T; ++t)
    panel.timestamps[static_cast<std::size_t>(t)] = synthetic_start_day() + t;
  panel.names.resize(static_cast<std::size_t>(n_series));
  for (int j = 0; j < n_series; ++j) {
    panel.names[static_cast<std::size_t>(j)] =
        "series_" + std::to_string(j + 1);
    Rng rng(Rng::derive_stream(seed, static_cast<std::uint64_t>(j)));
    for (int t = 0; t < T; ++t) panel.values(t, j) = rng.normal();
  }
  return panel;
}

// Two-column panel with a known structural relationship: cause column "x" is
// i.i.d. N(0,1) and effect column "y" follows
//   y[t] = beta * x[t - true_lag] + noise_sigma * eps[t]   for t >= true_lag,
// with the first true_lag entries of y pure N(0,1) noise. Streams: x uses
// derived stream 0, the y head stream 1, eps stream 2.
inline TimeSeriesPanel coupled_pair(const CouplingSpec& spec) {
  spec.validate();
  TimeSeriesPanel panel;
  panel.names = {"x", "y"};
  panel.values.resize(spec.T, 2);
  panel.timestamps.resize(static_cast<std::size_t>(spec.T));
  for (int t = 0; t < spec.T; ++t)
    panel.timestamps[static_cast<std::size_t>(t)] = synthetic_start_day() + t;

  Rng x_rng(Rng::derive_stream(spec.seed, 0));
  Rng head_rng(Rng::derive_stream(spec.seed, 1));
  Rng eps_rng(Rng::derive_stream(spec.seed, 2));
  for (int t = 0; t < spec.T; ++t) panel.values(t, 0) = x_rng.normal();
  for (int t = 0; t < spec.true_lag; ++t) panel.values(t, 1) = head_rng.normal();
  for (int t = spec.true_lag; t < spec.T; ++t)
    panel.values(t, 1) = spec.beta * panel.values(t - spec.true_lag, 0) +
                         spec.noise_sigma * eps_rng.normal();
  return panel;
}

}  // namespace leadlag
