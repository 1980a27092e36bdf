#!/usr/bin/env python3
"""End-to-end checks for the radii command-line tool."""

import csv
import io
import json
import math
import subprocess
import sys

BIN = sys.argv[1]

failures = []


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=240)
    if proc.returncode != expect:
        failures.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
            f"stderr: {proc.stderr.strip()[:500]}"
        )
    return proc


def check(cond, what):
    if not cond:
        failures.append(what)


def parse_csv(text):
    lines = [l for l in text.splitlines() if l and not l.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


# --- table ---------------------------------------------------------------
table = run("table")
rows = parse_csv(table.stdout)
# 4 starlike classes x (1 SL + 3 M + 4 S* + 1 SP) + 4 convex x (4 C + 1 UCV)
check(len(rows) == 56, f"table: {len(rows)} rows, expected 56")

by_key = {}
for r in rows:
    by_key.setdefault((r["class"], r["target"], r["parameter"]), r)

f6_ucv = by_key.get(("F6", "UCV", ""))
check(f6_ucv is not None and abs(float(f6_ucv["value"]) - 0.101021) < 1e-5,
      "table: (F6, UCV) should be 0.101021")
f1_star = by_key.get(("F1", "S*", "0"))
check(f1_star is not None and abs(float(f1_star["value"]) - (math.sqrt(5) - 2)) < 1e-9,
      "table: (F1, S*(0)) should be sqrt(5)-2")
f5_m = by_key.get(("F5", "M", "2"))
check(f5_m is not None and abs(float(f5_m["value"]) - 1 / 3) < 1e-9,
      "table: (F5, M beta=2) should be 1/3")

json_table = run("table", "--format", "json")
doc = json.loads(json_table.stdout)
check(isinstance(doc, list) and len(doc) == 56, "table json: top-level array of 56")

filtered = parse_csv(run("table", "--classes", "F2", "--regions", "SL").stdout)
check(len(filtered) == 1 and abs(float(filtered[0]["value"]) - 0.13009304312806) < 1e-9,
      "table: single F2/SL row")

# --- verify --------------------------------------------------------------
verify = run("verify", "--classes", "F2", "--regions", "parabola",
             "--samples", "25", "--grid", "128")
vrows = parse_csv(verify.stdout)
check(len(vrows) == 1, f"verify: {len(vrows)} rows, expected 1")
if vrows:
    row = vrows[0]
    check(abs(float(row["formula_value"]) - 0.16227766) < 1e-6,
          "verify: F2/SP lower bound should be sqrt(10)-3")
    check(abs(float(row["probe_value"]) - 0.17157287) < 1e-6,
          "verify: F2/SP probe should be 3-2*sqrt(2)")
    check(row["passed"] == "true", "verify: F2/SP row should pass")

vjson = run("verify", "--classes", "F1", "--regions", "min",
            "--samples", "10", "--grid", "64", "--format", "json", "--seed", "7")
vdoc = json.loads(vjson.stdout)
check(isinstance(vdoc, list) and len(vdoc) == 1 and vdoc[0]["seed"] == 7,
      "verify json: array with embedded seed")

# --- usage errors --------------------------------------------------------
run("verify", "--tol", "-1", expect=2)
run("table", "--classes", "F9", expect=2)
run("table", "--regions", "circle", expect=2)
run("table", "--alpha", "1.5", expect=2)
run("table", "--beta", "0.5", expect=2)
run("nonsense", expect=2)
run("plot-data", "--class", "F1", "--region", "SL", "--r", "1.5", expect=2)

# --- sweep ---------------------------------------------------------------
sweep = parse_csv(run("sweep", "--classes", "F3").stdout)
check(len(sweep) == 9, f"sweep: {len(sweep)} rows, expected 9")
for r in sweep:
    check(float(r["abs_diff"]) < 1e-9, f"sweep: solver mismatch in {r}")

# --- probe ---------------------------------------------------------------
probe = parse_csv(run("probe").stdout)
# F2/SP, F3/SL, F5/SL plus F3/M and F5/M on the three default betas.
check(len(probe) == 9, f"probe: {len(probe)} rows, expected 9")
for r in probe:
    check(float(r["proven_value"]) <= float(r["probe_value"]) + 1e-9,
          f"probe: proven above probe in {r}")
    check(abs(float(r["conjecture_value"]) - float(r["probe_value"])) < 1e-5,
          f"probe: probe disagrees with the conjectured value in {r}")

# --- plot-data -----------------------------------------------------------
plot = run("plot-data", "--class", "F1", "--region", "lemniscate", "--r", "0.05")
lines = [l for l in plot.stdout.splitlines() if l and not l.startswith("#")]
image = [l for l in lines if l.startswith("image,")]
boundary = [l for l in lines if l.startswith("boundary,")]
check(len(image) == 512, f"plot-data: {len(image)} image points, expected 512")
check(len(boundary) > 100, "plot-data: boundary polyline missing")
for l in image:
    _, re_s, im_s = l.split(",")
    w = complex(float(re_s), float(im_s))
    check(abs(w * w - 1) < 1 and w.real > 0, f"plot-data: image point {w} not inside")

plot2 = run("plot-data", "--class", "F1", "--region", "lemniscate", "--r", "0.05")
check(plot.stdout == plot2.stdout, "plot-data: output must be deterministic")

# -------------------------------------------------------------------------
if failures:
    print("FAILURES:")
    for f in failures:
        print(" -", f)
    sys.exit(1)
print(f"cli_test: all checks passed")
