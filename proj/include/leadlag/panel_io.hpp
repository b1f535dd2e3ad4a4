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

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "leadlag/errors.hpp"
#include "leadlag/granger.hpp"
#include "leadlag/indicator.hpp"
#include "leadlag/panel.hpp"
#include "leadlag/rmt.hpp"

namespace leadlag {

// ---------------------------------------------------------------------------
// Formatting conventions shared by every writer.
//
// Numbers are serialized with 12 significant digits (printf %.12g). JSON
// numbers are the strtod round-trip of that text, so CSV and JSON outputs
// agree at 12 significant digits. Gaps (NaN) become empty CSV fields and JSON
// nulls. Metadata rides in `# key=value` comment lines before the CSV header
// (a JSON "config" object); readers skip/consume them, so files round-trip.
// ---------------------------------------------------------------------------

enum class OutputFormat { kCsv, kJson };

inline OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw UsageError("unknown output format: '" + name + "' (expected csv or json)");
}

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

inline std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// The double whose shortest representation CSV consumers will reparse:
// value-identical to the CSV text at 12 significant digits.
inline double round_g12(double v) {
  return std::strtod(format_g12(v).c_str(), nullptr);
}

namespace detail {

inline void echo_comments(std::ostream& os, const ConfigEcho& echo) {
  for (const auto& [k, v] : echo) os << "# " << k << "=" << v << "\n";
}

inline nlohmann::ordered_json echo_object(const ConfigEcho& echo) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : echo) obj[k] = v;
  return obj;
}

inline nlohmann::ordered_json json_value_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return round_g12(v);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  out.push_back(field);
  return out;
}

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

inline double parse_number(const std::string& text, std::size_t row,
                           const std::string& column) {
  const std::string t = trim(text);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0' || errno == ERANGE)
    throw ParseError("unparseable number '" + t + "' at row " +
                     std::to_string(row) + ", column '" + column + "'");
  return v;
}

// Parses a timestamp using either the built-in ISO path or std::get_time.
inline std::int64_t parse_timestamp(const std::string& text,
                                    const std::string& date_format,
                                    std::size_t row) {
  const std::string t = trim(text);
  if (date_format == "%Y-%m-%d") {
    try {
      return parse_date(t);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " at row " + std::to_string(row));
    }
  }
  std::tm tm = {};
  std::istringstream stream(t);
  stream >> std::get_time(&tm, date_format.c_str());
  if (stream.fail())
    throw ParseError("unparseable date '" + t + "' at row " +
                     std::to_string(row) + " (format '" + date_format + "')");
  return days_from_civil(tm.tm_year + 1900,
                         static_cast<unsigned>(tm.tm_mon + 1),
                         static_cast<unsigned>(tm.tm_mday));
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot open output file: '" + path + "'");
  return os;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open input file: '" + path + "'");
  return is;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Panel ingestion.
// ---------------------------------------------------------------------------

enum class MissingPolicy { kDropRow, kError };

struct PanelSchema {
  std::string time_column;                 // empty: first column
  std::vector<std::string> value_columns;  // empty: all non-time columns
  std::string date_format = "%Y-%m-%d";
  MissingPolicy missing_policy = MissingPolicy::kDropRow;
};

struct LoadReport {
  std::size_t rows_read = 0;
  std::size_t rows_dropped = 0;
};

struct ReadResult {
  TimeSeriesPanel panel;
  LoadReport report;
};

// Reads a CSV panel: header row, one timestamp column, numeric value columns.
// Comment lines starting with '#' are skipped. Fields are comma-separated
// (no quoting). Rows with missing (empty) cells in selected columns are
// dropped or rejected per the schema's missing policy; nothing is imputed.
inline ReadResult read_panel(std::istream& is, const PanelSchema& schema) {
  std::string line;
  // Header (skip comments and blank lines; tolerate a UTF-8 BOM).
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    if (!line.empty() && line.rfind("\xEF\xBB\xBF", 0) == 0) line = line.substr(3);
    if (line.empty() || detail::trim(line).empty()) continue;
    if (line[0] == '#') continue;
    header = detail::split_csv_line(line);
    for (auto& h : header) h = detail::trim(h);
    break;
  }
  if (header.empty()) throw ParseError("panel file has no header row");

  std::size_t time_idx = 0;
  if (!schema.time_column.empty()) {
    bool found = false;
    for (std::size_t j = 0; j < header.size(); ++j)
      if (header[j] == schema.time_column) {
        time_idx = j;
        found = true;
        break;
      }
    if (!found)
      throw NameError("time column '" + schema.time_column + "' not in header");
  }

  std::vector<std::size_t> value_idx;
  std::vector<std::string> value_names;
  if (schema.value_columns.empty()) {
    for (std::size_t j = 0; j < header.size(); ++j)
      if (j != time_idx) {
        value_idx.push_back(j);
        value_names.push_back(header[j]);
      }
  } else {
    for (const auto& want : schema.value_columns) {
      bool found = false;
      for (std::size_t j = 0; j < header.size(); ++j)
        if (header[j] == want) {
          if (j == time_idx)
            throw DataError("column '" + want + "' is the time column");
          value_idx.push_back(j);
          value_names.push_back(want);
          found = true;
          break;
        }
      if (!found) throw NameError("value column '" + want + "' not in header");
    }
  }
  if (value_names.empty()) throw DataError("panel has no value columns");

  std::vector<std::int64_t> timestamps;
  std::vector<std::vector<double>> rows;
  LoadReport report;
  std::size_t line_no = 1;  // header was line 1 of the logical content
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || detail::trim(line).empty()) continue;
    if (line[0] == '#') continue;
    ++report.rows_read;
    const std::vector<std::string> fields = detail::split_csv_line(line);
    if (fields.size() != header.size())
      throw ParseError("row " + std::to_string(line_no) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(header.size()));
    bool missing = false;
    for (std::size_t j : value_idx)
      if (detail::trim(fields[j]).empty()) {
        missing = true;
        if (schema.missing_policy == MissingPolicy::kError)
          throw ParseError("missing value at row " + std::to_string(line_no) +
                           ", column '" + header[j] + "'");
      }
    if (detail::trim(fields[time_idx]).empty()) {
      missing = true;
      if (schema.missing_policy == MissingPolicy::kError)
        throw ParseError("missing timestamp at row " + std::to_string(line_no));
    }
    if (missing) {
      ++report.rows_dropped;
      continue;
    }
    const std::int64_t ts = detail::parse_timestamp(
        fields[time_idx], schema.date_format, line_no);
    if (!timestamps.empty()) {
      if (ts == timestamps.back())
        throw DuplicateTimestampError("duplicate timestamp " + format_date(ts) +
                                      " at row " + std::to_string(line_no));
      if (ts < timestamps.back())
        throw OrderError("timestamps not increasing at row " +
                         std::to_string(line_no) + " (" + format_date(ts) + ")");
    }
    timestamps.push_back(ts);
    std::vector<double> row;
    row.reserve(value_idx.size());
    for (std::size_t k = 0; k < value_idx.size(); ++k)
      row.push_back(
          detail::parse_number(fields[value_idx[k]], line_no, value_names[k]));
    rows.push_back(std::move(row));
  }

  ReadResult result;
  result.report = report;
  result.panel.timestamps = std::move(timestamps);
  result.panel.names = std::move(value_names);
  result.panel.values.resize(static_cast<Eigen::Index>(rows.size()),
                             static_cast<Eigen::Index>(result.panel.names.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      result.panel.values(static_cast<Eigen::Index>(i),
                          static_cast<Eigen::Index>(j)) = rows[i][j];
  result.panel.validate();
  return result;
}

inline ReadResult read_panel(const std::string& path, const PanelSchema& schema) {
  std::ifstream is = detail::open_input(path);
  return read_panel(is, schema);
}

// ---------------------------------------------------------------------------
// Writers. Each emits CSV or JSON with the shared conventions above.
// ---------------------------------------------------------------------------

inline void write_panel(const TimeSeriesPanel& panel, std::ostream& os,
                        OutputFormat format, const ConfigEcho& echo) {
  if (format == OutputFormat::kCsv) {
    detail::echo_comments(os, echo);
    os << "timestamp";
    for (const auto& name : panel.names) os << "," << name;
    os << "\n";
    for (Eigen::Index i = 0; i < panel.rows(); ++i) {
      os << format_date(panel.timestamps[static_cast<std::size_t>(i)]);
      for (Eigen::Index j = 0; j < panel.cols(); ++j)
        os << "," << format_g12(panel.values(i, j));
      os << "\n";
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["config"] = detail::echo_object(echo);
  doc["columns"] = panel.names;
  auto timestamps = nlohmann::ordered_json::array();
  for (auto ts : panel.timestamps) timestamps.push_back(format_date(ts));
  doc["timestamps"] = std::move(timestamps);
  auto values = nlohmann::ordered_json::object();
  for (Eigen::Index j = 0; j < panel.cols(); ++j) {
    auto col = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < panel.rows(); ++i)
      col.push_back(detail::json_value_or_null(panel.values(i, j)));
    values[panel.names[static_cast<std::size_t>(j)]] = std::move(col);
  }
  doc["values"] = std::move(values);
  os << doc.dump(2) << "\n";
}

inline void write_tw_table(const TWTable& table, std::ostream& os,
                           OutputFormat format, const ConfigEcho& echo) {
  if (format == OutputFormat::kCsv) {
    detail::echo_comments(os, echo);
    os << "s,q,F1\n";
    for (std::size_t i = 0; i < table.s.size(); ++i)
      os << format_g12(table.s[i]) << "," << format_g12(table.q[i]) << ","
         << format_g12(table.F1[i]) << "\n";
    return;
  }
  nlohmann::ordered_json doc;
  doc["config"] = detail::echo_object(echo);
  auto dump_column = [](const std::vector<double>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (double x : v) arr.push_back(detail::json_value_or_null(x));
    return arr;
  };
  doc["s"] = dump_column(table.s);
  doc["q"] = dump_column(table.q);
  doc["F1"] = dump_column(table.F1);
  os << doc.dump(2) << "\n";
}

inline void write_indicator_series(const IndicatorSeries& series,
                                   std::ostream& os, OutputFormat format,
                                   const ConfigEcho& echo) {
  if (format == OutputFormat::kCsv) {
    detail::echo_comments(os, echo);
    os << "# effect=" << series.effect_name << "\n";
    os << "timestamp";
    for (const auto& cause : series.cause_names) os << ",sigma_lambda_" << cause;
    os << "\n";
    for (Eigen::Index i = 0; i < series.sigma_lambda.rows(); ++i) {
      os << format_date(series.timestamps[static_cast<std::size_t>(i)]);
      for (Eigen::Index j = 0; j < series.sigma_lambda.cols(); ++j) {
        const double v = series.sigma_lambda(i, j);
        os << ",";
        if (!std::isnan(v)) os << format_g12(v);
      }
      os << "\n";
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["config"] = detail::echo_object(echo);
  doc["effect"] = series.effect_name;
  doc["causes"] = series.cause_names;
  auto timestamps = nlohmann::ordered_json::array();
  for (auto ts : series.timestamps) timestamps.push_back(format_date(ts));
  doc["timestamps"] = std::move(timestamps);
  auto values = nlohmann::ordered_json::object();
  for (Eigen::Index j = 0; j < series.sigma_lambda.cols(); ++j) {
    auto col = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < series.sigma_lambda.rows(); ++i)
      col.push_back(detail::json_value_or_null(series.sigma_lambda(i, j)));
    values["sigma_lambda_" + series.cause_names[static_cast<std::size_t>(j)]] =
        std::move(col);
  }
  doc["sigma_lambda"] = std::move(values);
  os << doc.dump(2) << "\n";
}

// Reads back an indicator CSV written by write_indicator_series.
inline IndicatorSeries read_indicator_series(std::istream& is) {
  IndicatorSeries series;
  std::string line;
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    if (line.empty() || detail::trim(line).empty()) continue;
    if (line[0] == '#') {
      const std::string body = detail::trim(line.substr(1));
      if (body.rfind("effect=", 0) == 0)
        series.effect_name = body.substr(std::string("effect=").size());
      continue;
    }
    header = detail::split_csv_line(line);
    break;
  }
  if (header.size() < 2 || detail::trim(header[0]) != "timestamp")
    throw ParseError("indicator file: malformed header");
  constexpr const char* kPrefix = "sigma_lambda_";
  for (std::size_t j = 1; j < header.size(); ++j) {
    const std::string h = detail::trim(header[j]);
    if (h.rfind(kPrefix, 0) != 0)
      throw ParseError("indicator file: unexpected column '" + h + "'");
    series.cause_names.push_back(h.substr(std::string(kPrefix).size()));
  }
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || detail::trim(line).empty()) continue;
    if (line[0] == '#') continue;
    const std::vector<std::string> fields = detail::split_csv_line(line);
    if (fields.size() != header.size())
      throw ParseError("indicator file: field count mismatch at row " +
                       std::to_string(line_no));
    series.timestamps.push_back(
        detail::parse_timestamp(fields[0], "%Y-%m-%d", line_no));
    std::vector<double> row;
    for (std::size_t j = 1; j < fields.size(); ++j) {
      const std::string f = detail::trim(fields[j]);
      row.push_back(f.empty() ? std::numeric_limits<double>::quiet_NaN()
                              : detail::parse_number(f, line_no, header[j]));
    }
    rows.push_back(std::move(row));
  }
  series.sigma_lambda.resize(static_cast<Eigen::Index>(rows.size()),
                             static_cast<Eigen::Index>(series.cause_names.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      series.sigma_lambda(static_cast<Eigen::Index>(i),
                          static_cast<Eigen::Index>(j)) = rows[i][j];
  return series;
}

inline IndicatorSeries read_indicator_series(const std::string& path) {
  std::ifstream is = detail::open_input(path);
  return read_indicator_series(is);
}

inline void write_granger_rows(const std::vector<GrangerPanelRow>& rows,
                               std::ostream& os, OutputFormat format,
                               const ConfigEcho& echo) {
  if (format == OutputFormat::kCsv) {
    detail::echo_comments(os, echo);
    os << "cause,lag_order,variant,f_stat,p_value,log_inv_p\n";
    for (const auto& row : rows) {
      os << row.cause_name << "," << row.lag_order << ","
         << granger_variant_name(row.variant) << ",";
      if (row.error.empty()) {
        os << format_g12(row.f_statistic) << "," << format_g12(row.p_value)
           << "," << format_g12(row.log_inv_p);
      } else {
        os << ",,";  // failure = gap, consistent with the indicator convention
      }
      os << "\n";
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["config"] = detail::echo_object(echo);
  auto results = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    obj["cause"] = row.cause_name;
    obj["lag_order"] = row.lag_order;
    obj["variant"] = granger_variant_name(row.variant);
    obj["f_stat"] = detail::json_value_or_null(row.f_statistic);
    obj["p_value"] = detail::json_value_or_null(row.p_value);
    obj["log_inv_p"] = detail::json_value_or_null(row.log_inv_p);
    if (!row.error.empty()) obj["error"] = row.error;
    results.push_back(std::move(obj));
  }
  doc["results"] = std::move(results);
  os << doc.dump(2) << "\n";
}

// One row of the method-comparison table.
struct CompareRow {
  std::string cause_name;
  double mean_sigma_lambda_lag2 = std::numeric_limits<double>::quiet_NaN();
  double mean_sigma_lambda_lag5 = std::numeric_limits<double>::quiet_NaN();
  double log_inv_p_lag2 = std::numeric_limits<double>::quiet_NaN();
  double log_inv_p_lag5 = std::numeric_limits<double>::quiet_NaN();
};

inline void write_compare_rows(const std::vector<CompareRow>& rows,
                               double spearman_lag2, double spearman_lag5,
                               std::ostream& os, OutputFormat format,
                               const ConfigEcho& echo) {
  auto field = [](double v) { return std::isnan(v) ? std::string() : format_g12(v); };
  if (format == OutputFormat::kCsv) {
    detail::echo_comments(os, echo);
    os << "# spearman_lag2=" << field(spearman_lag2) << "\n";
    os << "# spearman_lag5=" << field(spearman_lag5) << "\n";
    os << "cause,mean_sigma_lambda_lag2,mean_sigma_lambda_lag5,"
          "log_inv_p_lag2,log_inv_p_lag5\n";
    for (const auto& row : rows)
      os << row.cause_name << "," << field(row.mean_sigma_lambda_lag2) << ","
         << field(row.mean_sigma_lambda_lag5) << "," << field(row.log_inv_p_lag2)
         << "," << field(row.log_inv_p_lag5) << "\n";
    return;
  }
  nlohmann::ordered_json doc;
  doc["config"] = detail::echo_object(echo);
  doc["spearman_lag2"] = detail::json_value_or_null(spearman_lag2);
  doc["spearman_lag5"] = detail::json_value_or_null(spearman_lag5);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    obj["cause"] = row.cause_name;
    obj["mean_sigma_lambda_lag2"] =
        detail::json_value_or_null(row.mean_sigma_lambda_lag2);
    obj["mean_sigma_lambda_lag5"] =
        detail::json_value_or_null(row.mean_sigma_lambda_lag5);
    obj["log_inv_p_lag2"] = detail::json_value_or_null(row.log_inv_p_lag2);
    obj["log_inv_p_lag5"] = detail::json_value_or_null(row.log_inv_p_lag5);
    arr.push_back(std::move(obj));
  }
  doc["rows"] = std::move(arr);
  os << doc.dump(2) << "\n";
}

// One validation check: a computed statistic, its acceptance band, and status
// "pass" / "fail" / "info" (info = run at a scale where the band is not a gate).
struct CheckRow {
  std::string check;
  double statistic = std::numeric_limits<double>::quiet_NaN();
  std::string threshold;
  std::string status;
};

inline void write_check_rows(const std::vector<CheckRow>& rows, std::ostream& os,
                             OutputFormat format, const ConfigEcho& echo) {
  if (format == OutputFormat::kCsv) {
    detail::echo_comments(os, echo);
    os << "check,statistic,threshold,status\n";
    for (const auto& row : rows)
      os << row.check << "," << format_g12(row.statistic) << "," << row.threshold
         << "," << row.status << "\n";
    return;
  }
  nlohmann::ordered_json doc;
  doc["config"] = detail::echo_object(echo);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    obj["check"] = row.check;
    obj["statistic"] = detail::json_value_or_null(row.statistic);
    obj["threshold"] = row.threshold;
    obj["status"] = row.status;
    arr.push_back(std::move(obj));
  }
  doc["checks"] = std::move(arr);
  os << doc.dump(2) << "\n";
}

}  // namespace leadlag
