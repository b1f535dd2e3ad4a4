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

#include <catch2/catch_amalgamated.hpp>

#include "leadlag/panel.hpp"

TEST_CASE("civil date round-trip over a wide range", "[panel]") {
  // Every 97th day across ~60 years exercises all month/leap branches.
  for (std::int64_t d = -11000; d <= 22000; d += 97) {
    const leadlag::CivilDate c = leadlag::civil_from_days(d);
    REQUIRE(leadlag::days_from_civil(c.year, c.month, c.day) == d);
  }
}

TEST_CASE("known date anchors", "[panel]") {
  REQUIRE(leadlag::days_from_civil(1970, 1, 1) == 0);
  REQUIRE(leadlag::days_from_civil(2020, 1, 1) == 18262);
  REQUIRE(leadlag::days_from_civil(2020, 3, 1) ==
          leadlag::days_from_civil(2020, 2, 29) + 1);  // leap year
  REQUIRE(leadlag::format_date(18262) == "2020-01-01");
  REQUIRE(leadlag::parse_date("2020-01-01") == 18262);
}

TEST_CASE("parse_date rejects malformed input", "[panel]") {
  REQUIRE_THROWS_AS(leadlag::parse_date("2020-13-01"), leadlag::ParseError);
  REQUIRE_THROWS_AS(leadlag::parse_date("2020-02-30"), leadlag::ParseError);
  REQUIRE_THROWS_AS(leadlag::parse_date("not-a-date"), leadlag::ParseError);
}

TEST_CASE("panel validation catches structural faults", "[panel]") {
  leadlag::TimeSeriesPanel p;
  p.timestamps = {0, 1, 2};
  p.names = {"a", "b"};
  p.values.resize(3, 2);
  p.values.setZero();
  REQUIRE_NOTHROW(p.validate());

  SECTION("duplicate timestamp") {
    p.timestamps = {0, 1, 1};
    REQUIRE_THROWS_AS(p.validate(), leadlag::DuplicateTimestampError);
  }
  SECTION("decreasing timestamp") {
    p.timestamps = {0, 2, 1};
    REQUIRE_THROWS_AS(p.validate(), leadlag::OrderError);
  }
  SECTION("duplicate column name") {
    p.names = {"a", "a"};
    REQUIRE_THROWS_AS(p.validate(), leadlag::DataError);
  }
  SECTION("non-finite cell") {
    p.values(1, 0) = std::nan("");
    REQUIRE_THROWS_AS(p.validate(), leadlag::DataError);
  }
  SECTION("shape mismatch") {
    p.timestamps = {0, 1};
    REQUIRE_THROWS_AS(p.validate(), leadlag::DataError);
  }
}

TEST_CASE("column lookup by name", "[panel]") {
  leadlag::TimeSeriesPanel p;
  p.timestamps = {0, 1, 2};
  p.names = {"x", "y"};
  p.values.resize(3, 2);
  p.values << 1.0, 10.0, 2.0, 20.0, 3.0, 30.0;
  REQUIRE(p.column_index("y") == 1);
  const std::vector<double> y = p.column("y");
  REQUIRE(y == std::vector<double>{10.0, 20.0, 30.0});
  REQUIRE_THROWS_AS(p.column_index("absent"), leadlag::NameError);
}
