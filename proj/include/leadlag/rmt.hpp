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
#include <cstdint>
#include <string>
#include <vector>

#include "leadlag/errors.hpp"
#include "leadlag/rng.hpp"

namespace leadlag {

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Marcenko-Pastur limiting spectral density.
//
// For an n x p matrix of i.i.d. standard normals X (p <= n), the eigenvalues
// of X^T X / n concentrate on [a, b] with a = (1 - sqrt(g))^2 and
// b = (1 + sqrt(g))^2, g = p/n, with density
//   g(t) = (gamma / (2 pi t)) * sqrt((b - t)(t - a)),  gamma = n/p.
// ---------------------------------------------------------------------------

struct MPParams {
  double gamma;  // n/p >= 1
  double a;      // lower spectral edge
  double b;      // upper spectral edge
};

// Parameters from the aspect ratio p/n in (0, 1].
inline MPParams mp_params_from_ratio(double ratio) {
  if (!(ratio > 0.0 && ratio <= 1.0))
    throw DomainError("mp_params: ratio p/n must lie in (0, 1]");
  const double root = std::sqrt(ratio);
  return {1.0 / ratio, (1.0 - root) * (1.0 - root), (1.0 + root) * (1.0 + root)};
}

inline MPParams mp_params(std::int64_t n, std::int64_t p) {
  if (n < 1 || p < 1) throw DomainError("mp_params: n and p must be positive");
  if (p > n)
    throw DomainError("mp_params: requires p <= n (swap the roles of n and p)");
  return mp_params_from_ratio(static_cast<double>(p) / static_cast<double>(n));
}

// Density value at t; zero outside [a, b] and at the t = 0 hard edge.
inline double mp_density(double t, const MPParams& params) {
  if (t <= 0.0 || t < params.a || t > params.b) return 0.0;
  const double radicand = (params.b - t) * (t - params.a);
  if (radicand <= 0.0) return 0.0;
  return params.gamma / (2.0 * kPi * t) * std::sqrt(radicand);
}

// Integral of the density over [t0, t1] (clamped to the support).
//
// Uses the substitution t = a + (b - a) sin^2(theta), under which the
// edge square roots become smooth trig factors and the t = 0 hard edge of the
// square case has a finite limit; fixed-node composite Simpson then converges
// fast. This is the right model for comparing against a histogram: a histogram
// bar estimates the bin-averaged density, not the midpoint value.
inline double mp_bin_probability(double t0, double t1, const MPParams& params) {
  const double lo = std::max(t0, params.a);
  const double hi = std::min(t1, params.b);
  if (!(hi > lo)) return 0.0;
  const double span = params.b - params.a;
  const double th0 = std::asin(std::sqrt(std::clamp((lo - params.a) / span, 0.0, 1.0)));
  const double th1 = std::asin(std::sqrt(std::clamp((hi - params.a) / span, 0.0, 1.0)));
  constexpr int kIntervals = 128;  // even, for Simpson
  const double h = (th1 - th0) / kIntervals;
  auto integrand = [&](double th) {
    const double s2 = std::sin(th) * std::sin(th);
    const double c2 = std::cos(th) * std::cos(th);
    const double t = params.a + span * s2;
    if (t < 1e-300) return params.gamma * span * c2 / kPi;  // a = 0 edge limit
    return params.gamma * span * span * s2 * c2 / (kPi * t);
  };
  double acc = integrand(th0) + integrand(th1);
  for (int k = 1; k < kIntervals; ++k)
    acc += (k % 2 ? 4.0 : 2.0) * integrand(th0 + k * h);
  return acc * h / 3.0;
}

// ---------------------------------------------------------------------------
// Centering and scaling constants for the largest Wishart eigenvalue.
//   mu_np    = (sqrt(n-1) + sqrt(p))^2
//   sigma_np = (sqrt(n-1) + sqrt(p)) * (1/sqrt(n-1) + 1/sqrt(p))^(1/3)
// When n < p the roles of n and p are swapped before evaluating.
// ---------------------------------------------------------------------------

struct WishartConstants {
  std::int64_t n;
  std::int64_t p;
  double mu_np;
  double sigma_np;
};

inline WishartConstants wishart_constants(std::int64_t n, std::int64_t p) {
  if (n < 1 || p < 1)
    throw DomainError("wishart_constants: n and p must be positive");
  std::int64_t nn = n, pp = p;
  if (nn < pp) std::swap(nn, pp);
  if (nn < 2)
    throw DomainError("wishart_constants: need max(n, p) >= 2");
  const double rn = std::sqrt(static_cast<double>(nn - 1));
  const double rp = std::sqrt(static_cast<double>(pp));
  const double s = rn + rp;
  return {n, p, s * s, s * std::cbrt(1.0 / rn + 1.0 / rp)};
}

// ---------------------------------------------------------------------------
// Largest-eigenvalue distribution for the orthogonal ensemble (beta = 1),
// tabulated once from its Painleve II representation:
//
//   F1(s) = exp( -1/2 * Int_s^inf [ q(x) + (x - s) q(x)^2 ] dx )
//
// where q solves q'' = s q + 2 q^3 with q(s) ~ Ai(s) as s -> +inf (the
// Hastings-McLeod branch).
//
// Numerical scheme: that branch is an unstable separatrix — any marching
// integrator leaving s_max with O(eps) error is off by
// exp((2*sqrt(2)/3)|s|^{3/2}) (a factor ~1e13 by s = -10), so the ODE is
// solved as a two-point boundary-value problem instead: Numerov O(h^4)
// finite differences on a uniform grid, right boundary from the Airy
// asymptotic series, left boundary from the known left asymptote
// q(s) = sqrt(-s/2)(1 + 1/(8 s^3)), damped Newton on the tridiagonal system.
// The BVP formulation is well-conditioned precisely where marching is not.
// F1 is then evaluated per grid node by composite Simpson quadrature.
// ---------------------------------------------------------------------------

struct TWTable {
  std::vector<double> s;   // ascending grid
  std::vector<double> q;   // Painleve II solution at grid nodes
  std::vector<double> F1;  // CDF values at grid nodes
  double s_min = 0.0;
  double s_max = 0.0;
};

// Airy function Ai(s) from its large-s asymptotic series (6 correction
// terms; relative error ~4e-9 at s = 8). Only the asymptotic regime is
// needed — this is not a general-purpose Airy implementation.
inline double airy_asymptotic(double s) {
  if (!(s > 0.0)) throw DomainError("airy_asymptotic: needs s > 0");
  const double zeta = (2.0 / 3.0) * std::pow(s, 1.5);
  double u = 1.0, sum = 1.0, sign = 1.0, zk = 1.0;
  for (int k = 1; k <= 6; ++k) {
    u *= static_cast<double>((6 * k - 5)) * (6 * k - 3) * (6 * k - 1) /
         ((2.0 * k - 1.0) * 216.0 * k);
    sign = -sign;
    zk *= zeta;
    sum += sign * u / zk;
  }
  return std::exp(-zeta) / (2.0 * std::sqrt(kPi) * std::pow(s, 0.25)) * sum;
}

// Left asymptote of the Hastings-McLeod branch, q(s) ~ sqrt(-s/2)(1 + 1/(8s^3)),
// accurate to ~6e-7 relative at s = -10.
inline double painleve_left_asymptote(double s) {
  if (!(s < 0.0)) throw DomainError("painleve_left_asymptote: needs s < 0");
  return std::sqrt(-s / 2.0) * (1.0 + 1.0 / (8.0 * s * s * s));
}

namespace detail {

// Solves the tridiagonal system (lower, diag, upper) * x = rhs in place.
inline void thomas_solve(std::vector<double>& lower, std::vector<double>& diag,
                         std::vector<double>& upper, std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
}

// Composite Simpson over grid nodes [i0, n-1] of the tabulated values g,
// with a 3/8-rule patch when the interval count is odd and a trapezoid for
// a single interval. h is the uniform grid step.
inline double simpson_suffix(const std::vector<double>& g, std::size_t i0,
                             double h) {
  const std::size_t m = g.size() - 1 - i0;  // interval count
  if (m == 0) return 0.0;
  if (m == 1) return 0.5 * h * (g[i0] + g[i0 + 1]);
  std::size_t last = g.size() - 1;
  double acc = 0.0;
  std::size_t simpson_end = last;
  if (m % 2 == 1) {
    // 3/8 rule on the final three intervals, plain Simpson on the rest.
    acc += 3.0 * h / 8.0 *
           (g[last - 3] + 3.0 * g[last - 2] + 3.0 * g[last - 1] + g[last]);
    simpson_end = last - 3;
  }
  if (simpson_end > i0) {
    double s = g[i0] + g[simpson_end];
    for (std::size_t j = i0 + 1; j < simpson_end; ++j)
      s += ((j - i0) % 2 ? 4.0 : 2.0) * g[j];
    acc += s * h / 3.0;
  }
  return acc;
}

}  // namespace detail

inline TWTable build_tw_table(double s_min = -10.0, double s_max = 8.0,
                              double step = 0.005) {
  if (!(s_min < s_max)) throw DomainError("build_tw_table: s_min must be < s_max");
  if (!(step > 0.0)) throw DomainError("build_tw_table: step must be positive");
  if (!(s_max >= 6.0))
    throw DomainError("build_tw_table: s_max must be >= 6 (Airy asymptotic regime)");
  if (!(s_min <= -6.0))
    throw DomainError("build_tw_table: s_min must be <= -6 (left-asymptote regime)");
  if (!(step <= 0.05))
    throw DomainError("build_tw_table: step must be <= 0.05");

  const auto n_intervals =
      static_cast<std::size_t>(std::llround((s_max - s_min) / step));
  const double h = (s_max - s_min) / static_cast<double>(n_intervals);
  const std::size_t n = n_intervals + 1;

  TWTable table;
  table.s_min = s_min;
  table.s_max = s_max;
  table.s.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    table.s[i] = s_min + static_cast<double>(i) * h;
  table.s.back() = s_max;

  // Initial guess: left asymptote for s < 0, Airy-like decay for s >= 0.
  std::vector<double>& q = table.q;
  q.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = table.s[i];
    q[i] = s < 0.0 ? std::sqrt(std::max(-s, 1e-4) / 2.0)
                   : 0.3553 * std::exp(-1.3 * s);
  }
  q.front() = painleve_left_asymptote(s_min);
  q.back() = airy_asymptotic(s_max);

  // Newton iteration on the Numerov residual
  //   R_i = (q_{i+1} - 2 q_i + q_{i-1}) - h^2/12 (f_{i+1} + 10 f_i + f_{i-1}),
  // f = s q + 2 q^3, with the boundary nodes held fixed.
  const double h2_12 = h * h / 12.0;
  const std::size_t interior = n - 2;
  std::vector<double> lower(interior), diag(interior), upper(interior),
      rhs(interior), f(n), fp(n);
  bool converged = false;
  for (int iter = 0; iter < 40; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = table.s[i] * q[i] + 2.0 * q[i] * q[i] * q[i];
      fp[i] = table.s[i] + 6.0 * q[i] * q[i];
    }
    double max_dq = 0.0;
    for (std::size_t i = 1; i <= interior; ++i) {
      const double residual = (q[i + 1] - 2.0 * q[i] + q[i - 1]) -
                              h2_12 * (f[i + 1] + 10.0 * f[i] + f[i - 1]);
      rhs[i - 1] = -residual;
      lower[i - 1] = 1.0 - h2_12 * fp[i - 1];
      diag[i - 1] = -2.0 - 10.0 * h2_12 * fp[i];
      upper[i - 1] = 1.0 - h2_12 * fp[i + 1];
    }
    // Boundary columns multiply fixed values; their contribution is already in
    // the residual, so zero them out of the linear system.
    lower.front() = 0.0;
    upper.back() = 0.0;
    detail::thomas_solve(lower, diag, upper, rhs);
    for (std::size_t i = 1; i <= interior; ++i) {
      const double dq = std::clamp(rhs[i - 1], -0.5, 0.5);  // damping
      q[i] += dq;
      max_dq = std::max(max_dq, std::fabs(dq));
    }
    if (max_dq < 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw IntegrationError(
        "build_tw_table: Newton iteration on the Painleve II boundary-value "
        "problem did not converge; widen [s_min, s_max] or reduce step");

  for (std::size_t i = 0; i < n; ++i)
    if (!(q[i] > 0.0))
      throw ConsistencyError("build_tw_table: solution lost positivity");

  // F1(s_i) = exp(-I_i/2), I_i = Int_{s_i}^{s_max} q(x) + (x - s_i) q(x)^2 dx.
  table.F1.resize(n);
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double dx = table.s[j] - table.s[i];
      g[j] = q[j] + dx * q[j] * q[j];
    }
    table.F1[i] = std::exp(-0.5 * detail::simpson_suffix(g, i, h));
  }

  for (std::size_t i = 0; i + 1 < n; ++i)
    if (table.F1[i + 1] < table.F1[i] - 1e-10)
      throw ConsistencyError("build_tw_table: CDF not monotone");
  for (double v : table.F1)
    if (!(v >= 0.0 && v <= 1.0 + 1e-12))
      throw ConsistencyError("build_tw_table: CDF outside [0, 1]");

  return table;
}

// CDF lookup by linear interpolation; clamps to 0 / 1 outside the grid.
inline double tw_cdf(double s, const TWTable& table) {
  if (table.s.empty()) throw DomainError("tw_cdf: table not built");
  if (s < table.s_min) return 0.0;
  if (s >= table.s_max) return 1.0;
  const auto it = std::upper_bound(table.s.begin(), table.s.end(), s);
  const auto hi = static_cast<std::size_t>(it - table.s.begin());
  if (hi == 0) return table.F1.front();
  const std::size_t lo = hi - 1;
  const double t = (s - table.s[lo]) / (table.s[hi] - table.s[lo]);
  return table.F1[lo] + t * (table.F1[hi] - table.F1[lo]);
}

// Inverse CDF on the tabulated grid (linear interpolation between nodes).
inline double tw_quantile(double prob, const TWTable& table) {
  if (table.s.empty()) throw DomainError("tw_quantile: table not built");
  if (!(prob > 0.0 && prob < 1.0))
    throw DomainError("tw_quantile: prob must lie in (0, 1)");
  const auto it = std::lower_bound(table.F1.begin(), table.F1.end(), prob);
  if (it == table.F1.begin()) return table.s_min;
  if (it == table.F1.end()) return table.s_max;
  const auto hi = static_cast<std::size_t>(it - table.F1.begin());
  const std::size_t lo = hi - 1;
  const double span = table.F1[hi] - table.F1[lo];
  if (span <= 0.0) return table.s[hi];
  const double t = (prob - table.F1[lo]) / span;
  return table.s[lo] + t * (table.s[hi] - table.s[lo]);
}

// ---------------------------------------------------------------------------
// Monte-Carlo sampling of the standardized largest Wishart eigenvalue.
// ---------------------------------------------------------------------------

// Draws `replications` white Wishart matrices X^T X (X: n x p of i.i.d.
// standard normals) and returns (l1 - mu_np) / sigma_np per replication.
//
// Each replication uses an independent derived stream, so results do not
// depend on evaluation order and any subset can be reproduced. X is filled
// column-by-column. The eigensolve runs on the smaller Gram matrix (X^T X or
// X X^T, whichever is smaller — they share nonzero spectrum). Replications
// whose eigensolve fails are skipped and counted; more than 1% skipped is an
// error.
inline std::vector<double> standardized_lmax_sample(std::int64_t n,
                                                    std::int64_t p,
                                                    std::int64_t replications,
                                                    std::uint64_t seed) {
  if (n < 2 || p < 1)
    throw DomainError("standardized_lmax_sample: need n >= 2, p >= 1");
  if (replications < 1)
    throw DomainError("standardized_lmax_sample: need replications >= 1");
  const WishartConstants c = wishart_constants(n, p);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(replications));
  std::int64_t skipped = 0;
  Eigen::MatrixXd x(n, p);
  for (std::int64_t r = 0; r < replications; ++r) {
    Rng rng(Rng::derive_stream(seed, static_cast<std::uint64_t>(r)));
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      for (Eigen::Index i = 0; i < x.rows(); ++i) x(i, j) = rng.normal();
    Eigen::MatrixXd gram;
    if (p <= n)
      gram.noalias() = x.transpose() * x;
    else
      gram.noalias() = x * x.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram,
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      ++skipped;
      continue;
    }
    const double l1 = solver.eigenvalues().maxCoeff();
    out.push_back((l1 - c.mu_np) / c.sigma_np);
  }
  if (skipped * 100 > replications)
    throw NumericError(
        "standardized_lmax_sample: eigensolver failed in more than 1% of "
        "replications");
  return out;
}

// Full eigenvalue spectrum of one white Wishart draw, scaled by 1/n: the
// eigenvalues of X^T X / n for X an n x p matrix of i.i.d. standard normals,
// ascending. This is the empirical counterpart of mp_density.
inline std::vector<double> wishart_spectrum(std::int64_t n, std::int64_t p,
                                            std::uint64_t seed) {
  if (n < 2 || p < 1) throw DomainError("wishart_spectrum: need n >= 2, p >= 1");
  if (p > n)
    throw DomainError("wishart_spectrum: requires p <= n (swap the roles of n and p)");
  Rng rng(seed);
  Eigen::MatrixXd x(n, p);
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) x(i, j) = rng.normal();
  Eigen::MatrixXd gram = x.transpose() * x / static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("wishart_spectrum: eigensolver failed");
  std::vector<double> out(static_cast<std::size_t>(p));
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

// One-sample Kolmogorov-Smirnov distance between a sample and the tabulated
// CDF: max over order statistics of |F(x_(i)) - i/n| and |F(x_(i)) - (i-1)/n|.
inline double ks_distance(std::vector<double> sample, const TWTable& table) {
  if (sample.empty()) throw DomainError("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = tw_cdf(sample[i], table);
    d = std::max(d, std::fabs(f - static_cast<double>(i + 1) / n));
    d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
  }
  return d;
}

}  // namespace leadlag
