from ._core import (
    Region,
    class_names,
    conjecture_probe,
    conjectured_radius,
    contains,
    covered,
    disk_bound,
    empirical_radius,
    formula_radius,
    functional,
    lemniscate_disk_radius,
    make_region,
    margin,
    parabola_disk_radius,
    report,
    solve_radius,
)

__all__ = [
    "Region",
    "class_names",
    "conjecture_probe",
    "conjectured_radius",
    "contains",
    "covered",
    "disk_bound",
    "empirical_radius",
    "formula_radius",
    "functional",
    "lemniscate_disk_radius",
    "make_region",
    "margin",
    "parabola_disk_radius",
    "report",
    "solve_radius",
]
