#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gft/certify.hpp"
#include "gft/classes.hpp"
#include "gft/radii.hpp"
#include "gft/regions.hpp"
#include "gft/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::vector<std::string> classes;
  std::vector<std::string> regions;
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75};
  std::vector<double> betas{1.5, 2.0, 4.0};
  std::uint64_t seed = 2012;
  int samples = 200;
  int grid = 256;
  double tol = 1e-9;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--classes", o.classes, "Class filter (F1..F8)");
  cmd->add_option("--regions", o.regions,
                  "Region filter (lemniscate, max, min, parabola; aliases SL, M, S*, C, SP, UCV)");
  cmd->add_option("--alpha", o.alphas, "Order grid for the half-plane-min target");
  cmd->add_option("--beta", o.betas, "Bound grid for the half-plane-max target");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--samples", o.samples, "Sampled members per class");
  cmd->add_option("--grid", o.grid, "Circle grid size");
  cmd->add_option("--tol", o.tol, "Numeric tolerance");
  cmd->add_option("--format", o.format, "Output format: csv or json");
  cmd->add_option("--out", o.out, "Output path (stdout when omitted)");
}

int usage_error(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return kExitUsage;
}

std::optional<std::vector<gft::ClassId>> resolve_classes(const CommonOpts& o) {
  if (o.classes.empty())
    return std::vector<gft::ClassId>(std::begin(gft::kAllClasses),
                                     std::end(gft::kAllClasses));
  std::vector<gft::ClassId> out;
  for (const auto& name : o.classes) {
    const auto id = gft::parse_class(name);
    if (!id) return std::nullopt;
    out.push_back(*id);
  }
  return out;
}

std::optional<std::vector<gft::RegionKind>> resolve_regions(const CommonOpts& o) {
  if (o.regions.empty())
    return std::vector<gft::RegionKind>{
        gft::RegionKind::Lemniscate, gft::RegionKind::HalfPlaneMax,
        gft::RegionKind::HalfPlaneMin, gft::RegionKind::Parabola};
  std::vector<gft::RegionKind> out;
  for (const auto& name : o.regions) {
    const auto kind = gft::parse_region_kind(name);
    if (!kind) return std::nullopt;
    out.push_back(*kind);
  }
  return out;
}

int validate_parameters(const CommonOpts& o) {
  for (double a : o.alphas)
    if (!(a >= 0.0 && a < 1.0)) return usage_error("--alpha values must be in [0, 1)");
  for (double b : o.betas)
    if (!(b > 1.0)) return usage_error("--beta values must be > 1");
  if (!(o.tol > 0.0)) return usage_error("--tol must be positive");
  if (o.samples < 1) return usage_error("--samples must be >= 1");
  if (o.grid < 8) return usage_error("--grid must be >= 8");
  if (gft::parse_format(o.format) == std::nullopt)
    return usage_error("--format must be csv or json");
  return kExitOk;
}

int emit(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream fs(o.out);
  if (!fs) return usage_error("cannot open output path " + o.out);
  fs << text;
  return kExitOk;
}

std::vector<gft::Region> regions_for_kind(gft::RegionKind kind, const CommonOpts& o) {
  std::vector<gft::Region> out;
  switch (kind) {
    case gft::RegionKind::HalfPlaneMin:
      for (double a : o.alphas) out.push_back(gft::Region::half_plane_min(a));
      break;
    case gft::RegionKind::HalfPlaneMax:
      for (double b : o.betas) out.push_back(gft::Region::half_plane_max(b));
      break;
    case gft::RegionKind::Parabola:
      out.push_back(gft::Region::parabola());
      break;
    case gft::RegionKind::Lemniscate:
      out.push_back(gft::Region::lemniscate());
      break;
  }
  return out;
}

int cmd_table(const CommonOpts& o) {
  if (int rc = validate_parameters(o); rc != kExitOk) return rc;
  const auto classes = resolve_classes(o);
  if (!classes) return usage_error("unknown class in --classes");
  const auto kinds = resolve_regions(o);
  if (!kinds) return usage_error("unknown region in --regions");

  std::vector<gft::TableRow> rows;
  for (gft::ClassId cls : *classes) {
    for (gft::RegionKind kind : *kinds) {
      for (const gft::Region& region : regions_for_kind(kind, o)) {
        if (!gft::covered(cls, region)) continue;
        rows.push_back(gft::to_table_row(gft::formula_radius(cls, region)));
      }
    }
  }
  const auto fmt = *gft::parse_format(o.format);
  return emit(o, fmt == gft::OutputFormat::Csv ? gft::table_to_csv(rows)
                                               : gft::table_to_json(rows));
}

int cmd_verify(const CommonOpts& o) {
  if (int rc = validate_parameters(o); rc != kExitOk) return rc;
  const auto classes = resolve_classes(o);
  if (!classes) return usage_error("unknown class in --classes");
  const auto kinds = resolve_regions(o);
  if (!kinds) return usage_error("unknown region in --regions");

  gft::ReportConfig config;
  config.classes = *classes;
  config.region_kinds = *kinds;
  config.alpha = o.alphas.empty() ? 0.0 : o.alphas.front();
  config.beta = o.betas.empty() ? 2.0 : o.betas.front();
  config.members = o.samples;
  config.grid = o.grid;
  config.seed = o.seed;
  config.tol = o.tol;

  const auto rows = gft::build_report(config);
  const auto fmt = *gft::parse_format(o.format);
  if (int rc = emit(o, fmt == gft::OutputFormat::Csv
                           ? gft::report_to_csv(rows, o.seed)
                           : gft::report_to_json(rows, o.seed));
      rc != kExitOk)
    return rc;

  bool all_passed = !rows.empty();
  for (const auto& row : rows) {
    if (!row.passed) {
      all_passed = false;
      std::cerr << gft::class_name(row.cls) << "/"
                << gft::target_name(row.cls, row.region) << ": " << row.failure
                << "\n";
    }
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_sweep(const CommonOpts& o) {
  if (int rc = validate_parameters(o); rc != kExitOk) return rc;
  const auto classes = resolve_classes(o);
  if (!classes) return usage_error("unknown class in --classes");
  const auto kinds = resolve_regions(o);
  if (!kinds) return usage_error("unknown region in --regions");

  std::ostringstream csv;
  csv << "class,target,parameter,formula_value,solver_value,abs_diff\n";
  std::string json = "[";
  bool first = true;
  for (gft::ClassId cls : *classes) {
    for (gft::RegionKind kind : *kinds) {
      for (const gft::Region& region : regions_for_kind(kind, o)) {
        if (!gft::covered(cls, region)) continue;
        const double formula = gft::formula_radius(cls, region).value;
        const double solver = gft::solve_radius(cls, region, 1e-13);
        const auto param = gft::region_parameter(region);
        csv << gft::class_name(cls) << ',' << gft::target_name(cls, region) << ','
            << (param ? gft::format_value(*param) : "") << ','
            << gft::format_value(formula) << ',' << gft::format_value(solver) << ','
            << gft::format_value(std::abs(formula - solver)) << '\n';
        if (!first) json += ",";
        first = false;
        json += "\n  {\"class\":\"" + std::string(gft::class_name(cls)) +
                "\",\"target\":\"" + gft::target_name(cls, region) + "\"";
        if (param) json += ",\"parameter\":" + gft::format_value(*param);
        json += ",\"formula_value\":" + gft::format_value(formula) +
                ",\"solver_value\":" + gft::format_value(solver) + "}";
      }
    }
  }
  json += "\n]\n";
  const auto fmt = *gft::parse_format(o.format);
  return emit(o, fmt == gft::OutputFormat::Csv ? csv.str() : json);
}

int cmd_probe(const CommonOpts& o) {
  if (int rc = validate_parameters(o); rc != kExitOk) return rc;
  const auto classes = resolve_classes(o);
  if (!classes) return usage_error("unknown class in --classes");
  const auto kinds = resolve_regions(o);
  if (!kinds) return usage_error("unknown region in --regions");

  std::ostringstream csv;
  csv << "class,target,parameter,proven_value,conjecture_value,probe_value\n";
  for (gft::ClassId cls : *classes) {
    for (gft::RegionKind kind : *kinds) {
      for (const gft::Region& region : regions_for_kind(kind, o)) {
        if (!gft::conjecture_covered(cls, region)) continue;
        const double proven = gft::formula_radius(cls, region).value;
        const double conj = gft::conjectured_radius(cls, region).value;
        const double probe = gft::conjecture_probe(cls, region);
        const auto param = gft::region_parameter(region);
        csv << gft::class_name(cls) << ',' << gft::target_name(cls, region) << ','
            << (param ? gft::format_value(*param) : "") << ','
            << gft::format_value(proven) << ',' << gft::format_value(conj) << ','
            << gft::format_value(probe) << '\n';
      }
    }
  }
  return emit(o, csv.str());
}

struct PlotOpts {
  std::string cls;
  std::string region;
  double r = 0.1;
  std::string out;
};

int cmd_plot_data(const PlotOpts& p) {
  const auto cls = gft::parse_class(p.cls);
  if (!cls) return usage_error("unknown class " + p.cls);
  const auto kind = gft::parse_region_kind(p.region);
  if (!kind) return usage_error("unknown region " + p.region);
  if (!(p.r > 0.0 && p.r < 1.0)) return usage_error("--r must be in (0, 1)");

  gft::Region region;
  switch (*kind) {
    case gft::RegionKind::HalfPlaneMin:
      region = gft::Region::half_plane_min(0.0);
      break;
    case gft::RegionKind::HalfPlaneMax:
      region = gft::Region::half_plane_max(2.0);
      break;
    case gft::RegionKind::Parabola:
      region = gft::Region::parabola();
      break;
    case gft::RegionKind::Lemniscate:
      region = gft::Region::lemniscate();
      break;
  }

  std::ostringstream os;
  os << "# functional image of |z| = " << gft::format_value(p.r)
     << " for the " << gft::class_name(*cls)
     << " extremal, plus the region boundary polyline\n";
  os << "curve,re,im\n";
  const auto extremal = gft::extremal_member(*cls);
  const int n = 512;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    const auto w = extremal.functional({p.r * std::cos(t), p.r * std::sin(t)});
    os << "image," << gft::format_value(w.real()) << ','
       << gft::format_value(w.imag()) << '\n';
  }
  switch (*kind) {
    case gft::RegionKind::Lemniscate:
      // |w^2 - 1| = 1, right half: w = sqrt(2 cos t) e^{it/2}.
      for (int i = 1; i < n; ++i) {
        const double t = -std::numbers::pi / 2 + std::numbers::pi * i / n;
        const double rho = std::sqrt(2.0 * std::cos(t));
        os << "boundary," << gft::format_value(rho * std::cos(t / 2)) << ','
           << gft::format_value(rho * std::sin(t / 2)) << '\n';
      }
      break;
    case gft::RegionKind::Parabola:
      // |w - 1| = Re w: w = (1 + t^2)/2 + i t.
      for (int i = 0; i < n; ++i) {
        const double t = -3.0 + 6.0 * i / (n - 1);
        os << "boundary," << gft::format_value((1.0 + t * t) / 2.0) << ','
           << gft::format_value(t) << '\n';
      }
      break;
    case gft::RegionKind::HalfPlaneMin:
    case gft::RegionKind::HalfPlaneMax: {
      const double x = *kind == gft::RegionKind::HalfPlaneMin ? region.alpha
                                                              : region.beta;
      for (int i = 0; i < n; ++i) {
        const double t = -3.0 + 6.0 * i / (n - 1);
        os << "boundary," << gft::format_value(x) << ',' << gft::format_value(t)
           << '\n';
      }
      break;
    }
  }

  if (p.out.empty()) {
    std::cout << os.str();
    return kExitOk;
  }
  std::ofstream fs(p.out);
  if (!fs) return usage_error("cannot open output path " + p.out);
  fs << os.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radius constants for the classes F1-F8: closed forms, "
               "independent re-derivation, and numerical certification"};
  app.require_subcommand(1);

  CommonOpts table_opts, verify_opts, sweep_opts, probe_opts;
  PlotOpts plot_opts;

  auto* table = app.add_subcommand("table", "Print the constants table");
  add_common(table, table_opts);
  auto* verify = app.add_subcommand("verify", "Run the certification suite");
  add_common(verify, verify_opts);
  auto* sweep = app.add_subcommand("sweep", "Compare formulas with the solver across parameter grids");
  add_common(sweep, sweep_opts);
  auto* probe = app.add_subcommand("probe", "Brute-force probes of the conjectured radii");
  add_common(probe, probe_opts);
  auto* plot = app.add_subcommand("plot-data", "Emit boundary/image curves as CSV");
  plot->add_option("--class", plot_opts.cls, "Class (F1..F8)")->required();
  plot->add_option("--region", plot_opts.region, "Region")->required();
  plot->add_option("--r", plot_opts.r, "Circle radius in (0, 1)")->required();
  plot->add_option("--out", plot_opts.out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitOk;  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(table_opts);
    if (verify->parsed()) return cmd_verify(verify_opts);
    if (sweep->parsed()) return cmd_sweep(sweep_opts);
    if (probe->parsed()) return cmd_probe(probe_opts);
    if (plot->parsed()) return cmd_plot_data(plot_opts);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
