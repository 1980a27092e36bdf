#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gft/certify.hpp"
#include "gft/classes.hpp"
#include "gft/radii.hpp"
#include "gft/regions.hpp"
#include "gft/report_io.hpp"

namespace py = pybind11;
using namespace gft;

namespace {

ClassId class_from_name(const std::string& name) {
  const auto id = parse_class(name);
  if (!id) throw std::invalid_argument("unknown class: " + name);
  return *id;
}

Region region_from_args(const std::string& kind, double alpha, double beta) {
  const auto k = parse_region_kind(kind);
  if (!k) throw std::invalid_argument("unknown region: " + kind);
  switch (*k) {
    case RegionKind::HalfPlaneMin:
      return Region::half_plane_min(alpha);
    case RegionKind::HalfPlaneMax:
      return Region::half_plane_max(beta);
    case RegionKind::Parabola:
      return Region::parabola();
    case RegionKind::Lemniscate:
      return Region::lemniscate();
  }
  throw std::invalid_argument("unknown region: " + kind);
}

py::dict result_dict(const RadiusResult& r) {
  py::dict d;
  d["class"] = std::string(class_name(r.cls));
  d["target"] = target_name(r.cls, r.region);
  d["value"] = r.value;
  d["sharp"] = r.sharp;
  d["provenance"] =
      r.provenance == Provenance::Theorem ? "theorem" : "conjecture";
  d["closed_form"] = r.closed_form;
  if (auto p = region_parameter(r.region)) d["parameter"] = *p;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Radius constants for the classes F1-F8";

  py::class_<Region>(m, "Region")
      .def_static("half_plane_min", &Region::half_plane_min, py::arg("alpha"))
      .def_static("half_plane_max", &Region::half_plane_max, py::arg("beta"))
      .def_static("parabola", &Region::parabola)
      .def_static("lemniscate", &Region::lemniscate)
      .def_readonly("alpha", &Region::alpha)
      .def_readonly("beta", &Region::beta);

  m.def(
      "make_region",
      [](const std::string& kind, double alpha, double beta) {
        return region_from_args(kind, alpha, beta);
      },
      py::arg("kind"), py::arg("alpha") = 0.0, py::arg("beta") = 2.0);

  m.def(
      "margin", [](const Region& r, cplx w) { return margin(r, w); },
      py::arg("region"), py::arg("w"));
  m.def(
      "contains", [](const Region& r, cplx w) { return contains(r, w); },
      py::arg("region"), py::arg("w"));
  m.def("lemniscate_disk_radius", &lemniscate_disk_radius, py::arg("a"));
  m.def("parabola_disk_radius", &parabola_disk_radius, py::arg("a"));

  m.def("class_names", [] {
    std::vector<std::string> out;
    for (ClassId id : kAllClasses) out.emplace_back(class_name(id));
    return out;
  });

  m.def(
      "disk_bound",
      [](const std::string& cls, double r) {
        const auto b = disk_bound(class_from_name(cls), r);
        py::dict d;
        d["center"] = b.center;
        d["deviation"] = b.deviation;
        if (b.lower) d["lower"] = *b.lower;
        return d;
      },
      py::arg("cls"), py::arg("r"));

  m.def(
      "covered",
      [](const std::string& cls, const Region& region) {
        return covered(class_from_name(cls), region);
      },
      py::arg("cls"), py::arg("region"));

  m.def(
      "formula_radius",
      [](const std::string& cls, const Region& region) {
        return result_dict(formula_radius(class_from_name(cls), region));
      },
      py::arg("cls"), py::arg("region"));

  m.def(
      "conjectured_radius",
      [](const std::string& cls, const Region& region) {
        return result_dict(conjectured_radius(class_from_name(cls), region));
      },
      py::arg("cls"), py::arg("region"));

  m.def(
      "solve_radius",
      [](const std::string& cls, const Region& region, double tol,
         bool use_lower_bound) {
        return solve_radius(class_from_name(cls), region, tol, use_lower_bound);
      },
      py::arg("cls"), py::arg("region"), py::arg("tol") = 1e-12,
      py::arg("use_lower_bound") = true);

  m.def(
      "functional",
      [](const std::string& cls, cplx z, std::optional<std::uint64_t> seed) {
        const ClassMember member =
            seed ? make_member(class_from_name(cls), *seed)
                 : extremal_member(class_from_name(cls));
        return member.functional(z);
      },
      py::arg("cls"), py::arg("z"), py::arg("seed") = py::none(),
      "Functional value of the extremal member (or a seeded random member).");

  m.def(
      "conjecture_probe",
      [](const std::string& cls, const Region& region) {
        return conjecture_probe(class_from_name(cls), region);
      },
      py::arg("cls"), py::arg("region"));

  m.def(
      "empirical_radius",
      [](const std::string& cls, const Region& region, int members, int grid,
         std::uint64_t seed) {
        const auto e =
            empirical_radius(class_from_name(cls), region, members, grid, seed);
        return py::make_tuple(e.lo, e.hi);
      },
      py::arg("cls"), py::arg("region"), py::arg("members") = 50,
      py::arg("grid") = 128, py::arg("seed") = 2012);

  m.def(
      "report",
      [](int members, int grid, std::uint64_t seed, double alpha, double beta,
         double tol) {
        ReportConfig config;
        config.members = members;
        config.grid = grid;
        config.seed = seed;
        config.alpha = alpha;
        config.beta = beta;
        config.tol = tol;
        py::list rows;
        for (const auto& r : build_report(config)) {
          py::dict d;
          d["class"] = std::string(class_name(r.cls));
          d["target"] = target_name(r.cls, r.region);
          d["formula_value"] = r.formula_value;
          d["solver_value"] = r.solver_value;
          d["sharp"] = r.sharp;
          d["empirical_lo"] = r.empirical.lo;
          d["empirical_hi"] = r.empirical.hi;
          d["passed"] = r.passed;
          if (!r.failure.empty()) d["failure"] = r.failure;
          if (r.probe_value) d["probe_value"] = *r.probe_value;
          rows.append(std::move(d));
        }
        return rows;
      },
      py::arg("members") = 50, py::arg("grid") = 128, py::arg("seed") = 2012,
      py::arg("alpha") = 0.0, py::arg("beta") = 2.0, py::arg("tol") = 1e-9);
}
