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

// Batch CLI over the leadlag library. Subcommands:
//   twtable       tabulate the largest-eigenvalue limit distribution
//   validate-rmt  Monte-Carlo checks of the random-matrix limits
//   simulate      generate synthetic panels (i.i.d. or lag-coupled)
//   indicator     rolling sigma_lambda lead-lag indicator over a panel
//   granger       Granger-causality F-tests over a panel
//   compare       indicator vs Granger, side by side, with rank correlation
//
// Every output embeds the fully resolved configuration, so identical
// invocations produce byte-identical files. Exit codes: 0 success,
// 1 usage/config error, 2 data error, 3 numeric failure.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "leadlag/leadlag.hpp"

namespace {

using namespace leadlag;

constexpr const char* kConfigHelp =
    "Config file: flat key=value lines; keys are the long option names "
    "without the leading dashes (e.g. max-lag=5). Command-line flags "
    "override config values.";

struct CommonArgs {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  std::string config_path;
};

void add_common(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--config", args.config_path, kConfigHelp);
  sub->add_option("--seed", args.seed, "Seed for all randomness")
      ->capture_default_str();
  sub->add_option("--out", args.out,
                  "Output file path (omit to write to stdout)");
  sub->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

// Applies a key=value config file to a parsed subcommand. CLI11 only honors
// set_config on the root app, so this fills each matching long option by hand;
// options already given on the command line keep their values.
void apply_config_file(CLI::App* sub, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("config: cannot open file: '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string where = " (line " + std::to_string(line_no) + " of '" +
                              path + "')";
    std::string trimmed = CLI::detail::trim_copy(line);
    if (trimmed.empty() || trimmed.front() == '#' || trimmed.front() == ';')
      continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw UsageError("config: expected key=value" + where);
    const std::string key = CLI::detail::trim_copy(trimmed.substr(0, eq));
    std::string value = CLI::detail::trim_copy(trimmed.substr(eq + 1));
    if (value.size() >= 2 && value.front() == value.back() &&
        (value.front() == '"' || value.front() == '\''))
      value = value.substr(1, value.size() - 2);
    if (key.empty()) throw UsageError("config: empty key" + where);
    if (key == "config")
      throw UsageError("config: 'config' cannot be set from a config file" +
                       where);
    CLI::Option* op = sub->get_option_no_throw("--" + key);
    if (op == nullptr)
      throw UsageError("config: unknown option '" + key + "'" + where);
    if (op->count() > 0) continue;  // the command line overrides the file
    try {
      op->add_result(value);
      op->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config: bad value for '" + key + "': " + e.what() +
                       where);
    }
  }
}

// Writes through a file or stdout, consistently.
void emit(const CommonArgs& args,
          const std::function<void(std::ostream&, OutputFormat)>& writer) {
  const OutputFormat format = parse_output_format(args.format);
  if (args.out.empty()) {
    writer(std::cout, format);
    return;
  }
  std::ofstream os(args.out, std::ios::binary);
  if (!os) throw DataError("cannot open output file: '" + args.out + "'");
  writer(os, format);
  if (!os) throw DataError("write failed: '" + args.out + "'");
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Panel-reading arguments shared by indicator / granger / compare.
// ---------------------------------------------------------------------------

struct PanelArgs {
  std::string in;
  std::string effect;
  std::vector<std::string> causes;  // empty: all non-effect columns
  std::string time_column;          // empty: first column
  std::string date_format = "%Y-%m-%d";
  std::string missing_policy = "drop_row";
};

void add_panel_args(CLI::App* sub, PanelArgs& args) {
  sub->add_option("--in", args.in, "Input panel CSV")->required();
  sub->add_option("--effect", args.effect, "Effect (target) column")->required();
  sub->add_option("--causes", args.causes,
                  "Candidate cause columns (default: all other columns)")
      ->delimiter(',');
  sub->add_option("--time-column", args.time_column,
                  "Timestamp column (default: first column)");
  sub->add_option("--date-format", args.date_format,
                  "strptime-style timestamp format")
      ->capture_default_str();
  sub->add_option("--missing-policy", args.missing_policy,
                  "What to do with rows holding missing values")
      ->check(CLI::IsMember({"drop_row", "error"}))
      ->capture_default_str();
}

ReadResult load_panel(const PanelArgs& args) {
  PanelSchema schema;
  schema.time_column = args.time_column;
  schema.date_format = args.date_format;
  schema.missing_policy = args.missing_policy == "error"
                              ? MissingPolicy::kError
                              : MissingPolicy::kDropRow;
  return read_panel(args.in, schema);
}

std::vector<std::string> resolve_causes(const TimeSeriesPanel& panel,
                                        const PanelArgs& args) {
  panel.column_index(args.effect);  // NameError if absent
  if (!args.causes.empty()) {
    for (const auto& c : args.causes) panel.column_index(c);
    return args.causes;
  }
  std::vector<std::string> causes;
  for (const auto& name : panel.names)
    if (name != args.effect) causes.push_back(name);
  if (causes.empty())
    throw DataError("panel has no candidate cause columns besides the effect");
  return causes;
}

void echo_panel_args(ConfigEcho& echo, const PanelArgs& args,
                     const std::vector<std::string>& causes,
                     const LoadReport& report) {
  echo.emplace_back("in", args.in);
  echo.emplace_back("effect", args.effect);
  echo.emplace_back("causes", join(causes, ","));
  echo.emplace_back("date_format", args.date_format);
  echo.emplace_back("missing_policy", args.missing_policy);
  echo.emplace_back("rows_read", std::to_string(report.rows_read));
  echo.emplace_back("rows_dropped", std::to_string(report.rows_dropped));
}

// ---------------------------------------------------------------------------
// twtable
// ---------------------------------------------------------------------------

struct TwtableArgs {
  CommonArgs common;
  double s_min = -10.0;
  double s_max = 8.0;
  double step = 0.005;
};

int run_twtable(const TwtableArgs& args) {
  const TWTable table = build_tw_table(args.s_min, args.s_max, args.step);
  ConfigEcho echo{{"subcommand", "twtable"},
                  {"s_min", format_g12(args.s_min)},
                  {"s_max", format_g12(args.s_max)},
                  {"step", format_g12(args.step)},
                  {"seed", std::to_string(args.common.seed)}};
  emit(args.common, [&](std::ostream& os, OutputFormat format) {
    write_tw_table(table, os, format, echo);
  });
  return 0;
}

// ---------------------------------------------------------------------------
// validate-rmt
// ---------------------------------------------------------------------------

struct ValidateArgs {
  CommonArgs common;
  std::int64_t n = 100;
  std::int64_t p = 100;
  std::int64_t replications = 2000;
  std::int64_t mp_n = 1000;
  int mp_bins = 40;
};

int run_validate_rmt(const ValidateArgs& args) {
  if (args.replications < 100)
    throw UsageError("validate-rmt: too few replications (need >= 100)");
  if (args.n < 2 || args.p < 1)
    throw UsageError("validate-rmt: need n >= 2, p >= 1");
  if (args.mp_n < 4) throw UsageError("validate-rmt: mp-n too small");
  if (args.mp_bins < 4) throw UsageError("validate-rmt: mp-bins too small");

  const TWTable table = build_tw_table();
  std::vector<CheckRow> checks;

  // Largest-eigenvalue distribution at the requested scale.
  const bool tw_gated = std::min(args.n, args.p) >= 50;
  {
    const std::vector<double> sample = standardized_lmax_sample(
        args.n, args.p, args.replications, args.common.seed);
    const double ks = ks_distance(sample, table);
    double below = 0.0;
    for (double v : sample)
      if (v <= 0.0) below += 1.0;
    below /= static_cast<double>(sample.size());
    checks.push_back({"ks_distance", ks, "<0.05",
                      !tw_gated ? "info" : (ks < 0.05 ? "pass" : "fail")});
    const bool in_band = below >= 0.80 && below <= 0.86;
    checks.push_back({"fraction_below_center", below, "[0.80,0.86]",
                      !tw_gated ? "info" : (in_band ? "pass" : "fail")});
  }

  // Bulk spectrum vs the limiting density at two aspect ratios.
  const bool mp_gated = args.mp_n >= 50;
  const double ratios[] = {1.0, 0.5};
  for (int k = 0; k < 2; ++k) {
    const double ratio = ratios[k];
    const auto p = static_cast<std::int64_t>(
        std::llround(ratio * static_cast<double>(args.mp_n)));
    const MPParams params = mp_params(args.mp_n, p);
    const std::vector<double> spectrum = wishart_spectrum(
        args.mp_n, p,
        Rng::derive_stream(args.common.seed, 101 + static_cast<std::uint64_t>(k)));
    const double width = (params.b - params.a) / args.mp_bins;
    double mad = 0.0;
    for (int bin = 0; bin < args.mp_bins; ++bin) {
      const double lo = params.a + bin * width;
      const double hi = lo + width;
      std::size_t count = 0;
      for (double ev : spectrum)
        if (ev >= lo && (ev < hi || (bin == args.mp_bins - 1 && ev <= hi)))
          ++count;
      const double empirical =
          static_cast<double>(count) / (static_cast<double>(p) * width);
      const double model = mp_bin_probability(lo, hi, params) / width;
      mad += std::fabs(empirical - model);
    }
    mad /= args.mp_bins;
    const std::string tag = format_g12(ratio);
    checks.push_back({"mp_histogram_mad_ratio_" + tag, mad, "<0.02",
                      !mp_gated ? "info" : (mad < 0.02 ? "pass" : "fail")});
    const double mass = mp_bin_probability(params.a, params.b, params);
    const bool mass_ok = std::fabs(mass - 1.0) <= 1e-3;
    checks.push_back({"mp_normalization_ratio_" + tag, mass, "[0.999,1.001]",
                      mass_ok ? "pass" : "fail"});
  }

  ConfigEcho echo{{"subcommand", "validate-rmt"},
                  {"n", std::to_string(args.n)},
                  {"p", std::to_string(args.p)},
                  {"replications", std::to_string(args.replications)},
                  {"mp_n", std::to_string(args.mp_n)},
                  {"mp_bins", std::to_string(args.mp_bins)},
                  {"seed", std::to_string(args.common.seed)}};

  bool any_fail = false;
  for (const auto& row : checks) {
    if (row.status == "fail") any_fail = true;
    std::ostringstream line;
    line << (row.status == "pass" ? "PASS" : row.status == "fail" ? "FAIL" : "INFO")
         << " " << row.check << "=" << format_g12(row.statistic) << " (want "
         << row.threshold << ")";
    std::cout << line.str() << "\n";
  }
  if (!args.common.out.empty()) {
    emit(args.common, [&](std::ostream& os, OutputFormat format) {
      write_check_rows(checks, os, format, echo);
    });
  }
  if (!tw_gated || !mp_gated)
    std::cout << "note: scales below 50 are informational, not gated\n";
  return any_fail ? 3 : 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateArgs {
  CommonArgs common;
  std::string kind = "iid";
  int n_series = 10;
  int length = 400;
  double beta = 0.9;
  double noise_sigma = 0.5;
  int true_lag = 2;
};

int run_simulate(const SimulateArgs& args) {
  TimeSeriesPanel panel;
  ConfigEcho echo{{"subcommand", "simulate"}, {"kind", args.kind}};
  if (args.kind == "iid") {
    panel = iid_panel(args.n_series, args.length, args.common.seed);
    echo.emplace_back("n_series", std::to_string(args.n_series));
    echo.emplace_back("T", std::to_string(args.length));
  } else {
    CouplingSpec spec;
    spec.true_lag = args.true_lag;
    spec.beta = args.beta;
    spec.noise_sigma = args.noise_sigma;
    spec.T = args.length;
    spec.seed = args.common.seed;
    panel = coupled_pair(spec);
    echo.emplace_back("T", std::to_string(args.length));
    echo.emplace_back("beta", format_g12(args.beta));
    echo.emplace_back("noise_sigma", format_g12(args.noise_sigma));
    echo.emplace_back("true_lag", std::to_string(args.true_lag));
  }
  echo.emplace_back("seed", std::to_string(args.common.seed));
  emit(args.common, [&](std::ostream& os, OutputFormat format) {
    write_panel(panel, os, format, echo);
  });
  return 0;
}

// ---------------------------------------------------------------------------
// indicator
// ---------------------------------------------------------------------------

struct IndicatorArgs {
  CommonArgs common;
  PanelArgs panel;
  int window = 60;
  int max_lag = 5;
  bool include_lag0 = false;
};

int run_indicator(const IndicatorArgs& args) {
  const ReadResult loaded = load_panel(args.panel);
  const std::vector<std::string> causes = resolve_causes(loaded.panel, args.panel);
  WindowSpec spec;
  spec.window_w = args.window;
  spec.max_lag = args.max_lag;
  spec.lag_set = args.include_lag0 ? LagSetPolicy::kIncludeLagZero
                                   : LagSetPolicy::kExcludeLagZero;
  const IndicatorSeries series =
      indicator_series(loaded.panel, args.panel.effect, causes, spec);

  ConfigEcho echo{{"subcommand", "indicator"}};
  echo_panel_args(echo, args.panel, causes, loaded.report);
  echo.emplace_back("window_w", std::to_string(args.window));
  echo.emplace_back("max_lag", std::to_string(args.max_lag));
  echo.emplace_back("lag_set",
                    args.include_lag0 ? "include_lag0" : "exclude_lag0");
  echo.emplace_back("seed", std::to_string(args.common.seed));
  emit(args.common, [&](std::ostream& os, OutputFormat format) {
    write_indicator_series(series, os, format, echo);
  });
  return 0;
}

// ---------------------------------------------------------------------------
// granger
// ---------------------------------------------------------------------------

struct GrangerArgs {
  CommonArgs common;
  PanelArgs panel;
  std::vector<int> lags{2, 5};
  std::vector<std::string> variants{"raw", "diff"};
};

int run_granger(const GrangerArgs& args) {
  const ReadResult loaded = load_panel(args.panel);
  const std::vector<std::string> causes = resolve_causes(loaded.panel, args.panel);
  std::vector<GrangerVariant> variants;
  for (const auto& name : args.variants)
    variants.push_back(granger_variant_from_name(name));
  for (int lag : args.lags)
    if (lag < 1) throw UsageError("granger: lag orders must be >= 1");

  const std::vector<GrangerPanelRow> rows = granger_panel(
      loaded.panel, args.panel.effect, causes, args.lags, variants);

  ConfigEcho echo{{"subcommand", "granger"}};
  echo_panel_args(echo, args.panel, causes, loaded.report);
  std::vector<std::string> lag_text;
  for (int lag : args.lags) lag_text.push_back(std::to_string(lag));
  echo.emplace_back("lags", join(lag_text, ","));
  echo.emplace_back("variants", join(args.variants, ","));
  echo.emplace_back("seed", std::to_string(args.common.seed));
  emit(args.common, [&](std::ostream& os, OutputFormat format) {
    write_granger_rows(rows, os, format, echo);
  });

  bool any_ok = false, any_numeric = false;
  for (const auto& row : rows) {
    if (row.error.empty())
      any_ok = true;
    else if (row.error_kind == GrangerPanelRow::ErrorKind::kNumeric)
      any_numeric = true;
  }
  if (!any_ok) return any_numeric ? 3 : 2;  // every pair failed
  return 0;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

struct CompareArgs {
  CommonArgs common;
  PanelArgs panel;
  int window = 60;
  bool include_lag0 = false;
};

int run_compare(const CompareArgs& args) {
  const ReadResult loaded = load_panel(args.panel);
  const std::vector<std::string> causes = resolve_causes(loaded.panel, args.panel);
  const int kLagOrders[2] = {2, 5};

  // Indicator side: mean sigma_lambda over valid windows, per cause, per lag.
  std::vector<CompareRow> rows(causes.size());
  for (std::size_t j = 0; j < causes.size(); ++j) rows[j].cause_name = causes[j];
  for (int which = 0; which < 2; ++which) {
    WindowSpec spec;
    spec.window_w = args.window;
    spec.max_lag = kLagOrders[which];
    spec.lag_set = args.include_lag0 ? LagSetPolicy::kIncludeLagZero
                                     : LagSetPolicy::kExcludeLagZero;
    const IndicatorSeries series =
        indicator_series(loaded.panel, args.panel.effect, causes, spec);
    for (std::size_t j = 0; j < causes.size(); ++j) {
      double acc = 0.0;
      std::size_t count = 0;
      for (Eigen::Index i = 0; i < series.sigma_lambda.rows(); ++i) {
        const double v = series.sigma_lambda(i, static_cast<Eigen::Index>(j));
        if (!std::isnan(v)) {
          acc += v;
          ++count;
        }
      }
      const double mean_sigma =
          count ? acc / static_cast<double>(count)
                : std::numeric_limits<double>::quiet_NaN();
      if (which == 0)
        rows[j].mean_sigma_lambda_lag2 = mean_sigma;
      else
        rows[j].mean_sigma_lambda_lag5 = mean_sigma;
    }
  }

  // Granger side: raw variant at the same two lag orders.
  const std::vector<double> y = loaded.panel.column(args.panel.effect);
  for (std::size_t j = 0; j < causes.size(); ++j) {
    const std::vector<double> x = loaded.panel.column(causes[j]);
    for (int which = 0; which < 2; ++which) {
      double value = std::numeric_limits<double>::quiet_NaN();
      try {
        value = granger_test(y, x, kLagOrders[which], false).log_inv_p;
      } catch (const Error&) {
        // failure = gap in the comparison table
      }
      if (which == 0)
        rows[j].log_inv_p_lag2 = value;
      else
        rows[j].log_inv_p_lag5 = value;
    }
  }

  // Rank agreement between the two methods, per lag order.
  auto rank_corr = [&](bool lag2) {
    std::vector<double> a, b;
    for (const auto& row : rows) {
      a.push_back(lag2 ? row.mean_sigma_lambda_lag2 : row.mean_sigma_lambda_lag5);
      b.push_back(lag2 ? row.log_inv_p_lag2 : row.log_inv_p_lag5);
    }
    try {
      return spearman(a, b);
    } catch (const Error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  const double spearman_lag2 = rank_corr(true);
  const double spearman_lag5 = rank_corr(false);

  ConfigEcho echo{{"subcommand", "compare"}};
  echo_panel_args(echo, args.panel, causes, loaded.report);
  echo.emplace_back("window_w", std::to_string(args.window));
  echo.emplace_back("lag_orders", "2,5");
  echo.emplace_back("lag_set",
                    args.include_lag0 ? "include_lag0" : "exclude_lag0");
  echo.emplace_back("granger_variant", "raw");
  echo.emplace_back("seed", std::to_string(args.common.seed));
  emit(args.common, [&](std::ostream& os, OutputFormat format) {
    write_compare_rows(rows, spearman_lag2, spearman_lag5, os, format, echo);
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Lead-lag structure detection between time-series pairs: rolling "
      "eigenvalue-share indicator, random-matrix reference distributions, "
      "and a Granger-causality baseline."};
  app.require_subcommand(1);

  TwtableArgs twtable_args;
  auto* twtable = app.add_subcommand(
      "twtable", "Tabulate the largest-eigenvalue limit distribution");
  add_common(twtable, twtable_args.common);
  twtable->add_option("--s-min", twtable_args.s_min, "Left end of the grid")
      ->capture_default_str();
  twtable->add_option("--s-max", twtable_args.s_max, "Right end of the grid")
      ->capture_default_str();
  twtable->add_option("--step", twtable_args.step, "Grid step")
      ->capture_default_str();

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand(
      "validate-rmt", "Monte-Carlo checks of the random-matrix limits");
  add_common(validate, validate_args.common);
  validate->add_option("--n", validate_args.n, "Rows of the Gaussian matrix")
      ->capture_default_str();
  validate->add_option("--p", validate_args.p, "Columns of the Gaussian matrix")
      ->capture_default_str();
  validate
      ->add_option("--replications", validate_args.replications,
                   "Monte-Carlo replications")
      ->capture_default_str();
  validate
      ->add_option("--mp-n", validate_args.mp_n,
                   "Matrix rows for the bulk-spectrum histogram")
      ->capture_default_str();
  validate
      ->add_option("--mp-bins", validate_args.mp_bins,
                   "Histogram bins for the bulk-spectrum check")
      ->capture_default_str();

  SimulateArgs simulate_args;
  auto* simulate =
      app.add_subcommand("simulate", "Generate a synthetic panel CSV");
  add_common(simulate, simulate_args.common);
  simulate->add_option("--kind", simulate_args.kind, "Panel kind")
      ->check(CLI::IsMember({"iid", "coupled"}))
      ->capture_default_str();
  simulate
      ->add_option("--n-series", simulate_args.n_series,
                   "Number of i.i.d. series (kind=iid)")
      ->capture_default_str();
  simulate->add_option("--length", simulate_args.length, "Observations T")
      ->capture_default_str();
  simulate
      ->add_option("--beta", simulate_args.beta,
                   "Coupling coefficient (kind=coupled)")
      ->capture_default_str();
  simulate
      ->add_option("--noise-sigma", simulate_args.noise_sigma,
                   "Noise level (kind=coupled)")
      ->capture_default_str();
  simulate
      ->add_option("--true-lag", simulate_args.true_lag,
                   "Structural lag (kind=coupled)")
      ->capture_default_str();

  IndicatorArgs indicator_args;
  auto* indicator = app.add_subcommand(
      "indicator", "Rolling sigma_lambda indicator over a panel");
  add_common(indicator, indicator_args.common);
  add_panel_args(indicator, indicator_args.panel);
  indicator->add_option("--window", indicator_args.window, "Rolling window length")
      ->capture_default_str();
  indicator->add_option("--max-lag", indicator_args.max_lag, "Largest lag")
      ->capture_default_str();
  indicator->add_flag("--include-lag0", indicator_args.include_lag0,
                      "Include lag 0 in the spread across lags");

  GrangerArgs granger_args;
  auto* granger =
      app.add_subcommand("granger", "Granger-causality F-tests over a panel");
  add_common(granger, granger_args.common);
  add_panel_args(granger, granger_args.panel);
  granger->add_option("--lags", granger_args.lags, "Lag orders, comma-separated")
      ->delimiter(',')
      ->capture_default_str();
  granger
      ->add_option("--variants", granger_args.variants,
                   "Preprocessing variants: raw, diff, raw_winsorized, "
                   "diff_winsorized")
      ->delimiter(',')
      ->capture_default_str();

  CompareArgs compare_args;
  auto* compare = app.add_subcommand(
      "compare", "Indicator vs Granger ranking table (lag orders 2 and 5)");
  add_common(compare, compare_args.common);
  add_panel_args(compare, compare_args.panel);
  compare->add_option("--window", compare_args.window, "Rolling window length")
      ->capture_default_str();
  compare->add_flag("--include-lag0", compare_args.include_lag0,
                    "Include lag 0 in the spread across lags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    for (CLI::App* sub : app.get_subcommands()) {
      const CLI::Option* cfg = sub->get_option_no_throw("--config");
      if (cfg != nullptr && cfg->count() > 0)
        apply_config_file(sub, cfg->as<std::string>());
    }
    if (twtable->parsed()) return run_twtable(twtable_args);
    if (validate->parsed()) return run_validate_rmt(validate_args);
    if (simulate->parsed()) return run_simulate(simulate_args);
    if (indicator->parsed()) return run_indicator(indicator_args);
    if (granger->parsed()) return run_granger(granger_args);
    if (compare->parsed()) return run_compare(compare_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
