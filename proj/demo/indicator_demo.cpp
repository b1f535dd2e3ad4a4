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

// Minimal library walkthrough: build one coupled pair and one i.i.d. pair,
// run the rolling indicator on both, and show the separation between them.

#include <cstdio>

#include "leadlag/leadlag.hpp"

int main() {
  using namespace leadlag;

  CouplingSpec coupling;
  coupling.true_lag = 2;
  coupling.beta = 0.9;
  coupling.noise_sigma = 0.5;
  coupling.T = 400;
  coupling.seed = 7;
  const TimeSeriesPanel coupled = coupled_pair(coupling);
  const TimeSeriesPanel iid = iid_panel(2, 400, 7);

  WindowSpec spec;
  spec.window_w = 60;
  spec.max_lag = 5;

  auto mean_sigma = [&](const TimeSeriesPanel& panel, const char* effect,
                        const char* cause) {
    const IndicatorSeries series =
        indicator_series(panel, effect, {cause}, spec);
    double acc = 0.0;
    int count = 0;
    for (Eigen::Index i = 0; i < series.sigma_lambda.rows(); ++i) {
      const double v = series.sigma_lambda(i, 0);
      if (!std::isnan(v)) {
        acc += v;
        ++count;
      }
    }
    return acc / count;
  };

  const double coupled_level = mean_sigma(coupled, "y", "x");
  const double iid_level = mean_sigma(iid, "series_2", "series_1");
  std::printf("mean sigma_lambda, coupled pair: %.4f\n", coupled_level);
  std::printf("mean sigma_lambda, i.i.d. pair:  %.4f\n", iid_level);
  std::printf("separation factor:               %.2f\n",
              coupled_level / iid_level);

  // Which lag carries the structure? Average the per-lag profile over windows.
  std::vector<double> profile(static_cast<std::size_t>(spec.max_lag) + 1, 0.0);
  const std::vector<double> y = coupled.column("y");
  const std::vector<double> x = coupled.column("x");
  int windows = 0;
  for (int k = spec.window_w - 1; k < coupling.T; ++k) {
    std::vector<double> yw(y.begin() + (k - spec.window_w + 1),
                           y.begin() + (k + 1));
    std::vector<double> xw(x.begin() + (k - spec.window_w + 1),
                           x.begin() + (k + 1));
    const LagProfile lp =
        lag_profile(standardize_window(yw), standardize_window(xw), spec);
    for (std::size_t i = 0; i < profile.size(); ++i) profile[i] += lp.V[i];
    ++windows;
  }
  std::printf("window-averaged eigenvalue share by lag:\n");
  for (std::size_t i = 0; i < profile.size(); ++i)
    std::printf("  lag %zu: %.4f\n", i, profile[i] / windows);
  return 0;
}
