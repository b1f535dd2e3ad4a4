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
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "leadlag/errors.hpp"

namespace leadlag {

// ---- Civil-date <-> day-count conversions (Howard Hinnant's algorithms).
// Timestamps are stored as int64 days since 1970-01-01.

inline std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct CivilDate {
  int year;
  unsigned month;
  unsigned day;
};

inline CivilDate civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return {static_cast<int>(y + (m <= 2)), m, d};
}

// ISO-8601 (YYYY-MM-DD) text for a day count.
inline std::string format_date(std::int64_t day) {
  const CivilDate c = civil_from_days(day);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", c.year, c.month, c.day);
  return buf;
}

// Parses YYYY-MM-DD (the default wire format). Throws ParseError on anything
// malformed, including out-of-range month/day.
inline std::int64_t parse_date(const std::string& text) {
  int y = 0;
  unsigned m = 0, d = 0;
  char tail = '\0';
  if (std::sscanf(text.c_str(), "%d-%u-%u%c", &y, &m, &d, &tail) != 3)
    throw ParseError("unparseable date: '" + text + "'");
  if (m < 1 || m > 12 || d < 1 || d > 31)
    throw ParseError("date out of range: '" + text + "'");
  const std::int64_t day = days_from_civil(y, m, d);
  const CivilDate back = civil_from_days(day);
  if (back.year != y || back.month != m || back.day != d)
    throw ParseError("invalid calendar date: '" + text + "'");
  return day;
}

// ---- TimeSeriesPanel: T observations x M named series over a time index.

struct TimeSeriesPanel {
  std::vector<std::int64_t> timestamps;  // strictly increasing, length T
  std::vector<std::string> names;        // M distinct column labels
  Eigen::MatrixXd values;                // T x M, all entries finite

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }

  Eigen::Index column_index(const std::string& name) const {
    for (std::size_t j = 0; j < names.size(); ++j)
      if (names[j] == name) return static_cast<Eigen::Index>(j);
    throw NameError("unknown column: '" + name + "'");
  }

  std::vector<double> column(const std::string& name) const {
    const Eigen::Index j = column_index(name);
    std::vector<double> out(static_cast<std::size_t>(values.rows()));
    for (Eigen::Index i = 0; i < values.rows(); ++i)
      out[static_cast<std::size_t>(i)] = values(i, j);
    return out;
  }

  // Enforces the structural invariants; call after assembling a panel by hand.
  void validate() const {
    if (static_cast<Eigen::Index>(timestamps.size()) != values.rows())
      throw DataError("panel: timestamp count does not match row count");
    if (static_cast<Eigen::Index>(names.size()) != values.cols())
      throw DataError("panel: name count does not match column count");
    for (std::size_t i = 1; i < timestamps.size(); ++i) {
      if (timestamps[i] == timestamps[i - 1])
        throw DuplicateTimestampError("panel: duplicate timestamp " +
                                      format_date(timestamps[i]));
      if (timestamps[i] < timestamps[i - 1])
        throw OrderError("panel: timestamps not increasing at " +
                         format_date(timestamps[i]));
    }
    for (std::size_t a = 0; a < names.size(); ++a)
      for (std::size_t b = a + 1; b < names.size(); ++b)
        if (names[a] == names[b])
          throw DataError("panel: duplicate column name '" + names[a] + "'");
    for (Eigen::Index i = 0; i < values.rows(); ++i)
      for (Eigen::Index j = 0; j < values.cols(); ++j)
        if (!std::isfinite(values(i, j)))
          throw DataError("panel: non-finite value in column '" +
                          names[static_cast<std::size_t>(j)] + "'");
  }
};

}  // namespace leadlag
