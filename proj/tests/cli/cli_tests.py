#!/usr/bin/env python3
"""End-to-end checks for the modbetti executable; one case per invocation."""

import argparse
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path


class Ctx:
    def __init__(self, args):
        self.binary = args.binary
        self.data = Path(args.data)
        self.fixtures = Path(args.fixtures)
        self.schema = Path(args.schema)
        self.failures = []

    def run(self, *argv, env=None):
        full_env = {k: v for k, v in os.environ.items() if k != "MODBETTI_CACHE_DIR"}
        full_env.update(env or {})
        return subprocess.run([self.binary, *map(str, argv)], capture_output=True, text=True, env=full_env, timeout=100)

    def check(self, cond, message):
        if not cond:
            self.failures.append(message)
            print("FAIL:", message)


def case_goldens(c):
    r = c.run("poincare", "--rank", 1, "--degree", 0, "--genus", 3)
    c.check(r.returncode == 0 and r.stdout == "1 - 6*v + 15*v^2 - 20*v^3 + 15*v^4 - 6*v^5 + v^6\n",
            f"poincare rank 1 genus 3: {r.returncode} {r.stdout!r}")
    r = c.run("zagier-r", "--rank", 2, "--degree", 1, "--genus", 0)
    c.check(r.returncode == 0 and r.stdout == "0\n", f"zagier-r (2,1) g=0: {r.stdout!r}")
    r = c.run("count", "--zeta", c.data / "e_f2.json", "--rank", 2, "--degree", 0, "--ext", 1)
    c.check(r.returncode == 0 and r.stdout.strip().splitlines()[-1] == "a(2,0)(F_2) = 0",
            f"count (2,0) on E/F_2: {r.stdout!r}")
    r = c.run("count", "--zeta", c.data / "e_f2.json", "-n", 1, "-d", 0, "-T", 4, "--format", "csv")
    rows = [line.split(",") for line in r.stdout.strip().splitlines()[1:]]
    c.check([row[4] for row in rows] == ["3", "9", "9", "9"], f"point counts of E/F_2: {r.stdout!r}")
    r = c.run("s-count", "--zeta", c.data / "e_f2.json", "-n", 2, "-d", 0, "-r", 2)
    c.check(r.returncode == 0 and r.stdout.strip().endswith("= 3"), f"s-count (2,0) r=2: {r.stdout!r}")
    r = c.run("poincare", "-n", 2, "-d", 1, "-g", 2, "--format", "latex")
    c.check(r.returncode == 0 and "v^{" in r.stdout, f"latex exponent braces: {r.stdout!r}")
    r = c.run("zagier-r", "-n", 2, "-d", 1, "-g", 1, "--format", "latex")
    c.check(r.returncode == 0 and r.stdout.startswith("\\frac{"), f"latex fraction: {r.stdout!r}")


def case_exit_codes(c):
    expect = [
        (0, ["--help"]),
        (0, ["poincare", "-n", 1, "-d", 0, "-g", 0]),
        (1, []),
        (1, ["poincare", "-n", 0, "-d", 0, "-g", 1]),
        (1, ["poincare", "-n", 2, "-d", 0, "-g", -1]),
        (1, ["poincare", "-n", 2, "-d", 0]),
        (1, ["poincare", "-n", "two", "-d", 0, "-g", 1]),
        (1, ["poincare", "-n", 2, "-d", 0, "-g", 1, "--format", "xml"]),
        (1, ["count", "-n", 1, "-d", 0, "--zeta", c.data / "missing.json"]),
        (1, ["count", "-n", 1, "-d", 0, "--zeta", c.fixtures / "truncated.json"]),
        (1, ["count", "-n", 1, "-d", 0, "-g", 2, "--zeta", c.data / "e_f2.json"]),
        (1, ["count", "-n", 2, "-d", 0, "-K", 1, "--zeta", c.data / "e_f2.json"]),
        (2, ["poincare", "-n", 40, "-d", 1, "-g", 2]),
        (2, ["count", "-n", 1, "-d", 0, "-T", 50, "--zeta", c.data / "e_f2.json"]),
        (2, ["count", "-n", 2, "-d", 0, "-K", 30, "--zeta", c.data / "e_f2.json"]),
        (3, ["s-count", "-n", 2, "-d", 0, "-r", 2, "--zeta", c.fixtures / "not_a_curve_g2_f2.json"]),
    ]
    for code, argv in expect:
        r = c.run(*argv)
        c.check(r.returncode == code, f"{argv}: exit {r.returncode}, expected {code}; stderr {r.stderr.strip()!r}")
        if code != 0:
            c.check(r.stdout == "", f"{argv}: no stdout on failure")


def jobs(c):
    e = c.data / "e_f2.json"
    g2 = c.data / "g2_f2.json"
    return [
        ["poincare", "-n", 3, "-d", 1, "-g", 2],
        ["poincare", "-n", 1, "-d", 0, "-g", 0],
        ["hodge", "-n", 2, "-d", 1, "-g", 2],
        ["hodge", "-n", 2, "-d", 0, "-g", 2],
        ["semistable", "-n", 2, "-d", 0, "-g", 2],
        ["zagier-r", "-n", 3, "-d", 2, "-g", 3],
        ["zagier-r", "-n", 2, "-d", 1, "-g", 0],
        ["count", "-n", 2, "-d", 1, "-T", 3, "--zeta", e],
        ["count", "-n", 3, "-d", 0, "-T", 3, "--zeta", g2],
        ["count", "-n", 1, "-d", 0, "-T", 12, "--zeta", g2],
        ["s-count", "-n", 2, "-d", 0, "-r", 2, "--zeta", e],
    ]


def case_determinism(c):
    for argv in jobs(c):
        for fmt in ("plain", "json", "latex", "csv"):
            a = c.run(*argv, "--format", fmt, "--threads", 1)
            b = c.run(*argv, "--format", fmt, "--threads", 4)
            c.check(a.returncode == 0 and a.stdout == b.stdout, f"{argv} {fmt}: reruns differ")


def case_schema(c):
    import jsonschema

    schema = json.loads(c.schema.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    kinds = set()
    for argv in jobs(c):
        r = c.run(*argv, "--format", "json")
        if r.returncode != 0:
            c.check(False, f"{argv}: exit {r.returncode}")
            continue
        doc = json.loads(r.stdout)
        errors = [e.message for e in validator.iter_errors(doc)]
        c.check(not errors, f"{argv}: schema errors {errors[:3]}")
        kinds.add(doc["result"]["kind"])
    c.check(kinds >= {"polynomial", "polynomial2", "rational_function", "count_table", "s_count"},
            f"result kinds covered: {sorted(kinds)}")
    bad = {"command": "hodge", "version": "1.0.0", "parameters": {"rank": 1, "degree": 0}, "conjectural": False,
           "result": {"kind": "s_count", "q": 2, "alpha": [1, 0], "r": 1, "s": 3}}
    c.check(not validator.is_valid(bad), "schema accepts a hodge result without the conjectural marker")


def case_cache(c):
    with tempfile.TemporaryDirectory() as d:
        env = {"MODBETTI_CACHE_DIR": d}
        argv = ["poincare", "-n", 3, "-d", 1, "-g", 2]
        first = c.run(*argv, env=env)
        files = list(Path(d).iterdir())
        c.check(first.returncode == 0 and len(files) == 1, f"one cache entry after first run: {files}")
        second = c.run(*argv, env=env)
        c.check(second.stdout == first.stdout and second.stderr == "", "cached rerun is identical and silent")
        files[0].write_text("corrupted")
        third = c.run(*argv, env=env)
        c.check(third.returncode == 0 and third.stdout == first.stdout and "corrupt" in third.stderr,
                f"corrupt entry recomputed with a warning: {third.stderr!r}")
        c.check(files[0].read_text().startswith("modbetti-cache "), "corrupt entry rewritten")
        bypass = c.run("poincare", "-n", 2, "-d", 1, "-g", 3, "--no-cache", env=env)
        c.check(bypass.returncode == 0 and len(list(Path(d).iterdir())) == 1, "--no-cache writes nothing")
        out = Path(d) / "result.txt"
        r = c.run(*argv, "--out", out, "--no-cache")
        c.check(r.returncode == 0 and r.stdout == "" and out.read_text() == first.stdout, "--out writes the result")


CASES = {name[len("case_"):]: fn for name, fn in globals().items() if name.startswith("case_")}


def main():
    p = argparse.ArgumentParser()
    p.add_argument("case", choices=sorted(CASES))
    p.add_argument("--binary", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--fixtures", required=True)
    p.add_argument("--schema", required=True)
    args = p.parse_args()
    c = Ctx(args)
    CASES[args.case](c)
    print(f"{args.case}: {'FAIL' if c.failures else 'PASS'} ({len(c.failures)} failures)")
    return 1 if c.failures else 0


if __name__ == "__main__":
    sys.exit(main())
