#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gft/certify.hpp"
#include "gft/radii.hpp"

namespace gft {

// Display name of the target property: SL, M, S*, SP for the starlike
// functional; C, UCV for the convex one (same half-plane / parabola regions).
std::string target_name(ClassId cls, const Region& region);

// Accepts kind names (lemniscate, halfplane-min, halfplane-max, parabola) and
// the target aliases (SL, M, S*, SP, C, UCV).
std::optional<RegionKind> parse_region_kind(std::string_view text);

// Parameter attached to the region, if any (alpha or beta).
std::optional<double> region_parameter(const Region& region);

enum class OutputFormat { Csv, Json };
std::optional<OutputFormat> parse_format(std::string_view text);

struct TableRow {
  std::string cls;
  std::string target;
  std::optional<double> parameter;
  double value = 0.0;
  bool sharp = false;
  std::string provenance;
  std::string closed_form;
};

TableRow to_table_row(const RadiusResult& result);

std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_json(const std::vector<TableRow>& rows);
std::vector<TableRow> table_from_csv(const std::string& text);
std::vector<TableRow> table_from_json(const std::string& text);

std::string report_to_csv(const std::vector<CertRow>& rows, std::uint64_t seed);
std::string report_to_json(const std::vector<CertRow>& rows, std::uint64_t seed);

// 12-significant-digit formatting used in CSV output.
std::string format_value(double v);

}  // namespace gft
