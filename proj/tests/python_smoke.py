#!/usr/bin/env python3
"""Smoke test for the python extension module."""

import math
import sys

import _core as m

failures = []


def check(cond, what):
    if not cond:
        failures.append(what)


lem = m.Region.lemniscate()
par = m.Region.parabola()
min0 = m.Region.half_plane_min(0.0)

check(abs(m.margin(lem, 1 + 0j) - 1.0) < 1e-15, "margin(lemniscate, 1) == 1")
check(m.contains(min0, 0.5 + 0.2j), "contains half-plane")
check(not m.contains(lem, -1 + 0j), "right-half branch")
check(abs(m.lemniscate_disk_radius(1.0) - (math.sqrt(2) - 1)) < 1e-14,
      "lemniscate disk radius at a=1")
check(abs(m.parabola_disk_radius(1.0) - 0.5) < 1e-14, "parabola disk radius at a=1")

check(m.class_names() == [f"F{i}" for i in range(1, 9)], "class names")

res = m.formula_radius("F1", lem)
check(abs(res["value"] - 0.10246615122164) < 1e-12, "F1/SL frozen value")
check(res["sharp"] and res["provenance"] == "theorem", "F1/SL flags")
check(res["target"] == "SL", "F1/SL target name")

check(abs(m.solve_radius("F1", lem) - res["value"]) < 1e-9, "solver agreement")
check(m.covered("F1", lem) and not m.covered("F4", lem), "coverage")

conj = m.conjectured_radius("F2", par)
check(abs(conj["value"] - (3 - 2 * math.sqrt(2))) < 1e-12, "F2/SP conjecture")
check(abs(m.conjecture_probe("F2", par) - conj["value"]) < 1e-5, "F2/SP probe")

check(abs(m.functional("F1", 0.5 + 0j) - 11 / 3) < 1e-13, "F1 extremal functional")
w1 = m.functional("F3", 0.2 + 0.1j, seed=5)
w2 = m.functional("F3", 0.2 + 0.1j, seed=5)
check(w1 == w2, "seeded member determinism")

lo, hi = m.empirical_radius("F1", lem, members=10, grid=64, seed=3)
check(lo <= res["value"] <= hi + 1e-6, "empirical interval brackets the radius")

rows = m.report(members=5, grid=64)
check(len(rows) == 24, f"report rows: {len(rows)}")
check(all(r["passed"] for r in rows), "all report rows pass")

b = m.disk_bound("F2", 0.2)
check("lower" in b and abs(b["center"] - 1.0) < 1e-15, "F2 disk bound")

try:
    m.formula_radius("F4", lem)
    failures.append("uncovered pair should raise")
except ValueError:
    pass

if failures:
    print("FAILURES:")
    for f in failures:
        print(" -", f)
    sys.exit(1)
print("python_smoke: all checks passed")
