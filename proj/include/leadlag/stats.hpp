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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "leadlag/errors.hpp"

namespace leadlag {

inline double mean(const std::vector<double>& v) {
  if (v.empty()) throw DomainError("mean: empty input");
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Population convention (divide by n) throughout the library.
inline double population_variance(const std::vector<double>& v) {
  const double m = mean(v);
  double acc = 0.0;
  for (double x : v) acc += (x - m) * (x - m);
  return acc / static_cast<double>(v.size());
}

inline double population_std(const std::vector<double>& v) {
  return std::sqrt(population_variance(v));
}

// Pearson correlation of two equal-length vectors.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("pearson: length mismatch");
  if (x.size() < 3) throw InsufficientOverlapError("pearson: need at least 3 points");
  // An exactly-constant input must throw rather than divide by a rounding
  // residue: the mean of n identical doubles is not always that double, so
  // the variance check alone can see a spurious nonzero.
  const auto [xmin, xmax] = std::minmax_element(x.begin(), x.end());
  const auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
  if (*xmin == *xmax || *ymin == *ymax)
    throw DegenerateWindowError("pearson: zero variance in overlap");
  const double mx = mean(x), my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0)
    throw DegenerateWindowError("pearson: zero variance in overlap");
  double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

// Ranks with average-rank tie handling (1-based ranks).
inline std::vector<double> ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

// Spearman rank correlation; entries where either side is NaN are dropped
// pairwise before ranking.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("spearman: length mismatch");
  std::vector<double> xf, yf;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isnan(x[i]) || std::isnan(y[i])) continue;
    xf.push_back(x[i]);
    yf.push_back(y[i]);
  }
  if (xf.size() < 3)
    throw InsufficientDataError("spearman: fewer than 3 complete pairs");
  return pearson(ranks(xf), ranks(yf));
}

// Clamp to the 1st/99th percentile cuts, taken as symmetric nearest-rank
// order statistics: the k-th smallest and k-th largest with
// k = max(1, ceil(0.01 n)). With n <= 100 the bounds are the sample min/max,
// so the operation is an exact no-op there.
inline std::vector<double> winsorize(const std::vector<double>& v) {
  if (v.empty()) return v;
  const auto n = v.size();
  const auto k = static_cast<std::size_t>(
      std::max(1.0, std::ceil(0.01 * static_cast<double>(n))));
  std::vector<double> sorted(v);
  std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end());
  const double lo = sorted[k - 1];
  std::nth_element(sorted.begin(), sorted.begin() + (n - k), sorted.end());
  const double hi = sorted[n - k];
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::clamp(v[i], lo, hi);
  return out;
}

inline double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace detail {

// Continued fraction for the regularized incomplete beta, evaluated with the
// modified Lentz algorithm.
inline double ibeta_continued_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 3e-16;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 400; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw IntegrationError("incomplete beta: continued fraction did not converge");
}

}  // namespace detail

// Regularized incomplete beta I_x(a, b).
inline double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("incomplete beta: shape parameters must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front =
      a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  // Use the branch whose continued fraction converges fast.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * detail::ibeta_continued_fraction(a, b, x) / a;
  }
  return 1.0 -
         std::exp(log_front) * detail::ibeta_continued_fraction(b, a, 1.0 - x) / b;
}

// Upper-tail probability P(F > f) for the F(d1, d2) distribution.
inline double f_upper_tail(double f, double d1, double d2) {
  if (!(d1 > 0.0) || !(d2 > 0.0))
    throw DomainError("F distribution: degrees of freedom must be positive");
  if (f <= 0.0) return 1.0;
  const double x = d2 / (d2 + d1 * f);
  return regularized_incomplete_beta(0.5 * d2, 0.5 * d1, x);
}

}  // namespace leadlag
