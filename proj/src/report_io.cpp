#include "gft/report_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace gft {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::string target_name(ClassId cls, const Region& region) {
  const bool convex = functional_kind(cls) == FunctionalKind::Convex;
  switch (region.kind) {
    case RegionKind::Lemniscate:
      return "SL";
    case RegionKind::HalfPlaneMax:
      return "M";
    case RegionKind::HalfPlaneMin:
      return convex ? "C" : "S*";
    case RegionKind::Parabola:
      return convex ? "UCV" : "SP";
  }
  return "?";
}

std::optional<RegionKind> parse_region_kind(std::string_view text) {
  const std::string t = lower(text);
  if (t == "lemniscate" || t == "sl") return RegionKind::Lemniscate;
  if (t == "halfplane-max" || t == "max" || t == "m") return RegionKind::HalfPlaneMax;
  if (t == "halfplane-min" || t == "min" || t == "s*" || t == "starlike" || t == "c" ||
      t == "convex")
    return RegionKind::HalfPlaneMin;
  if (t == "parabola" || t == "sp" || t == "ucv") return RegionKind::Parabola;
  return std::nullopt;
}

std::optional<double> region_parameter(const Region& region) {
  if (region.kind == RegionKind::HalfPlaneMin) return region.alpha;
  if (region.kind == RegionKind::HalfPlaneMax) return region.beta;
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view text) {
  const std::string t = lower(text);
  if (t == "csv") return OutputFormat::Csv;
  if (t == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

TableRow to_table_row(const RadiusResult& result) {
  TableRow row;
  row.cls = std::string(class_name(result.cls));
  row.target = target_name(result.cls, result.region);
  row.parameter = region_parameter(result.region);
  row.value = result.value;
  row.sharp = result.sharp;
  row.provenance =
      result.provenance == Provenance::Theorem ? "theorem" : "conjecture";
  row.closed_form = result.closed_form;
  return row;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "class,target,parameter,value,sharp,provenance,closed_form\n";
  for (const auto& r : rows) {
    os << r.cls << ',' << r.target << ','
       << (r.parameter ? format_value(*r.parameter) : "") << ','
       << format_value(r.value) << ',' << (r.sharp ? "true" : "false") << ','
       << r.provenance << ',' << r.closed_form << '\n';
  }
  return os.str();
}

std::string table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json o{{"class", r.cls},
                     {"target", r.target},
                     {"value", r.value},
                     {"sharp", r.sharp},
                     {"provenance", r.provenance},
                     {"closed_form", r.closed_form}};
    if (r.parameter) o["parameter"] = *r.parameter;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<TableRow> table_from_csv(const std::string& text) {
  std::vector<TableRow> rows;
  std::istringstream is(text);
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 7) throw std::runtime_error("table_from_csv: malformed row");
    TableRow row;
    row.cls = f[0];
    row.target = f[1];
    if (!f[2].empty()) row.parameter = std::stod(f[2]);
    row.value = std::stod(f[3]);
    row.sharp = f[4] == "true";
    row.provenance = f[5];
    row.closed_form = f[6];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> table_from_json(const std::string& text) {
  std::vector<TableRow> rows;
  for (const auto& o : nlohmann::json::parse(text)) {
    TableRow row;
    row.cls = o.at("class").get<std::string>();
    row.target = o.at("target").get<std::string>();
    if (o.contains("parameter")) row.parameter = o.at("parameter").get<double>();
    row.value = o.at("value").get<double>();
    row.sharp = o.at("sharp").get<bool>();
    row.provenance = o.at("provenance").get<std::string>();
    row.closed_form = o.at("closed_form").get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

nlohmann::json cert_row_json(const CertRow& r) {
  nlohmann::json o{{"class", std::string(class_name(r.cls))},
                   {"target", target_name(r.cls, r.region)},
                   {"formula_value", r.formula_value},
                   {"solver_value", r.solver_value},
                   {"sharp", r.sharp},
                   {"provenance",
                    r.provenance == Provenance::Theorem ? "theorem" : "conjecture"},
                   {"empirical_lo", r.empirical.lo},
                   {"empirical_hi", r.empirical.hi},
                   {"passed", r.passed}};
  if (auto p = region_parameter(r.region)) o["parameter"] = *p;
  if (r.sharpness) {
    o["sharp_margin_at_radius"] = r.sharpness->margin_at_radius;
    o["sharp_margin_beyond"] = r.sharpness->margin_beyond;
  }
  if (r.conjecture_value) o["conjecture_value"] = *r.conjecture_value;
  if (r.probe_value) o["probe_value"] = *r.probe_value;
  if (!r.failure.empty()) o["failure"] = r.failure;
  return o;
}

}  // namespace

std::string report_to_csv(const std::vector<CertRow>& rows, std::uint64_t seed) {
  std::ostringstream os;
  os << "# seed=" << seed << "\n";
  os << "class,target,parameter,formula_value,solver_value,sharp,provenance,"
        "sharp_margin_at_radius,sharp_margin_beyond,empirical_lo,empirical_hi,"
        "conjecture_value,probe_value,passed,failure\n";
  for (const auto& r : rows) {
    const auto p = region_parameter(r.region);
    os << class_name(r.cls) << ',' << target_name(r.cls, r.region) << ','
       << (p ? format_value(*p) : "") << ',' << format_value(r.formula_value) << ','
       << format_value(r.solver_value) << ',' << (r.sharp ? "true" : "false") << ','
       << (r.provenance == Provenance::Theorem ? "theorem" : "conjecture") << ','
       << (r.sharpness ? format_value(r.sharpness->margin_at_radius) : "") << ','
       << (r.sharpness ? format_value(r.sharpness->margin_beyond) : "") << ','
       << format_value(r.empirical.lo) << ',' << format_value(r.empirical.hi) << ','
       << (r.conjecture_value ? format_value(*r.conjecture_value) : "") << ','
       << (r.probe_value ? format_value(*r.probe_value) : "") << ','
       << (r.passed ? "true" : "false") << ',' << r.failure << '\n';
  }
  return os.str();
}

std::string report_to_json(const std::vector<CertRow>& rows, std::uint64_t seed) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    auto o = cert_row_json(r);
    o["seed"] = seed;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

}  // namespace gft
