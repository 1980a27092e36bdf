#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "gft/report_io.hpp"

using namespace gft;

TEST_CASE("target names by class kind") {
  CHECK(target_name(ClassId::F1, Region::lemniscate()) == "SL");
  CHECK(target_name(ClassId::F1, Region::half_plane_max(2.0)) == "M");
  CHECK(target_name(ClassId::F1, Region::half_plane_min(0.0)) == "S*");
  CHECK(target_name(ClassId::F1, Region::parabola()) == "SP");
  CHECK(target_name(ClassId::F8, Region::half_plane_min(0.0)) == "C");
  CHECK(target_name(ClassId::F8, Region::parabola()) == "UCV");
}

TEST_CASE("region parsing accepts kind names and target aliases") {
  CHECK(parse_region_kind("lemniscate") == RegionKind::Lemniscate);
  CHECK(parse_region_kind("SL") == RegionKind::Lemniscate);
  CHECK(parse_region_kind("max") == RegionKind::HalfPlaneMax);
  CHECK(parse_region_kind("M") == RegionKind::HalfPlaneMax);
  CHECK(parse_region_kind("min") == RegionKind::HalfPlaneMin);
  CHECK(parse_region_kind("S*") == RegionKind::HalfPlaneMin);
  CHECK(parse_region_kind("convex") == RegionKind::HalfPlaneMin);
  CHECK(parse_region_kind("parabola") == RegionKind::Parabola);
  CHECK(parse_region_kind("UCV") == RegionKind::Parabola);
  CHECK_FALSE(parse_region_kind("circle").has_value());
}

TEST_CASE("format parsing and value formatting") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("JSON") == OutputFormat::Json);
  CHECK_FALSE(parse_format("xml").has_value());
  CHECK(format_value(0.1024661512216401) == "0.102466151222");
  CHECK(format_value(1.0 / 3.0) == "0.333333333333");
}

namespace {

std::vector<TableRow> sample_table() {
  std::vector<TableRow> rows;
  rows.push_back(to_table_row(formula_radius(ClassId::F1, Region::lemniscate())));
  rows.push_back(
      to_table_row(formula_radius(ClassId::F5, Region::half_plane_max(2.0))));
  rows.push_back(
      to_table_row(formula_radius(ClassId::F8, Region::half_plane_min(0.25))));
  return rows;
}

void check_equal(const std::vector<TableRow>& a, const std::vector<TableRow>& b,
                 double value_tol) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].cls == b[i].cls);
    CHECK(a[i].target == b[i].target);
    CHECK(a[i].parameter.has_value() == b[i].parameter.has_value());
    if (a[i].parameter)
      CHECK(*a[i].parameter == doctest::Approx(*b[i].parameter).epsilon(value_tol));
    CHECK(a[i].value == doctest::Approx(b[i].value).epsilon(value_tol));
    CHECK(a[i].sharp == b[i].sharp);
    CHECK(a[i].provenance == b[i].provenance);
    CHECK(a[i].closed_form == b[i].closed_form);
  }
}

}  // namespace

TEST_CASE("csv round trip preserves printed precision") {
  const auto rows = sample_table();
  const auto parsed = table_from_csv(table_to_csv(rows));
  check_equal(rows, parsed, 1e-11);
}

TEST_CASE("json round trip is exact") {
  const auto rows = sample_table();
  const auto parsed = table_from_json(table_to_json(rows));
  check_equal(rows, parsed, 1e-15);
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS(table_from_csv("class,target\nF1"));
  CHECK_THROWS(table_from_json("{not json"));
}

TEST_CASE("report serialization embeds the seed") {
  ReportConfig config;
  config.classes = {ClassId::F1};
  config.region_kinds = {RegionKind::HalfPlaneMin};
  config.members = 3;
  config.grid = 64;
  const auto rows = build_report(config);
  REQUIRE(rows.size() == 1);

  const std::string csv = report_to_csv(rows, 2012);
  CHECK(csv.find("# seed=2012") != std::string::npos);
  CHECK(csv.find("F1,S*") != std::string::npos);

  const auto doc = nlohmann::json::parse(report_to_json(rows, 2012));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0].at("seed").get<std::uint64_t>() == 2012);
  CHECK(doc[0].at("class").get<std::string>() == "F1");
  CHECK(doc[0].at("target").get<std::string>() == "S*");
  CHECK(doc[0].at("passed").get<bool>());
  CHECK(doc[0].at("formula_value").get<double>() ==
        doctest::Approx(rows[0].formula_value).epsilon(1e-15));
}
