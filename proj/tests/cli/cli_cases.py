"""Runs the weilkit binary on a fixed command list.

Modes:
  schemas      every output validates against its schema and exit codes match
  determinism  output is byte-identical across repeated runs and WEILKIT_THREADS values
"""
import json
import os
import subprocess
import sys

import jsonschema

# (arguments, stdin, expected exit code, schema for a successful run)
CASES = [
    (["analyze", "--coeffs", "3,-1,1", "--p", "3", "--f", "1"], None, 0, "analysis-report"),
    (["analyze", "--coeffs", "3,-4,1", "--p", "3", "--f", "1"], None, 2, "analysis-report"),
    (["analyze", "--coeffs", "-", "--p", "3", "--f", "2"], "-9,0,1\n", 0, "analysis-report"),
    (["analyze", "--coeffs", "3,0,1", "--p", "3", "--f", "1"], None, 0, "analysis-report"),
    (["analyze", "--coeffs", "9,0,5,0,1", "--p", "3", "--f", "1"], None, 0, "analysis-report"),
    (["analyze", "--coeffs", "3,x,1", "--p", "3", "--f", "1"], None, 1, "error"),
    (["analyze", "--coeffs", "3,-1,2", "--p", "3", "--f", "1"], None, 1, "error"),
    (["lattices", "--n", "5"], None, 0, "lattice-list"),
    (["lattices", "--n", "6", "--oracle"], None, 0, "lattice-list"),
    (["classify", "--n", "5", "--kernel", "full"], None, 0, "decomposition-type"),
    (["classify", "--n", "5", "--kernel", "sumzero"], None, 0, "decomposition-type"),
    (["classify", "--n", "5", "--kernel", "diagonal", "--galois", "1:S5"], None, 0, "decomposition-type"),
    (["classify", "--n", "5", "--kernel", "diagonal", "--galois", "1:C5"], None, 3, "error"),
    (["classify", "--n", "5", "--kernel", "zero", "--galois", "5:S5"], None, 0, "decomposition-type"),
    (["classify", "--n", "5", "--kernel", "zero", "--galois", "2:S5"], None, 3, "error"),
    (["classify", "--n", "3", "--kernel", "zero", "--galois", "1:S3"], None, 0, "decomposition-type"),
    (["classify", "--n", "5", "--kernel", "weird"], None, 1, "error"),
    (["simulate", "--n", "5", "--h", "C5", "--k", "8", "--trials", "20000", "--seed", "11"], None, 0, "density-report"),
    (["simulate", "--n", "5", "--h", "S5", "--k", "4", "--trials", "5000", "--seed", "18446744073709551615"], None, 0, "density-report"),
    (["simulate", "--n", "3", "--h", "1,0,2", "--k", "3", "--trials", "10", "--seed", "1"], None, 2, "error"),
    (["cmsearch", "--d", "5", "--inert", "2", "--bound", "100"], None, 0, "cm-witness"),
    (["cmsearch", "--d", "1", "--inert", "", "--bound", "10"], None, 0, "cm-witness"),
    (["cmsearch", "--d", "5", "--inert", "2", "--bound", "10"], None, 3, "error"),
    (["enumerate-tables", "--n", "5"], None, 0, "decomposition-table"),
    (["no-such-command"], None, 1, "error"),
]


def run(binary, args, stdin, threads=None):
    env = dict(os.environ)
    if threads is not None:
        env["WEILKIT_THREADS"] = str(threads)
    p = subprocess.run([binary] + args, input=stdin, capture_output=True, text=True, env=env, check=False)
    return p.returncode, p.stdout


def check_schemas(binary, schema_dir):
    failures = 0
    for args, stdin, want_code, schema_name in CASES:
        code, out = run(binary, args, stdin)
        with open(os.path.join(schema_dir, schema_name + ".schema.json")) as fh:
            schema = json.load(fh)
        problems = []
        if code != want_code:
            problems.append(f"exit {code}, expected {want_code}")
        try:
            jsonschema.validate(json.loads(out), schema)
        except (json.JSONDecodeError, jsonschema.ValidationError) as exc:
            problems.append(str(exc).splitlines()[0])
        status = "ok" if not problems else "FAIL " + "; ".join(problems)
        print(f"{' '.join(args)}: {status}")
        failures += bool(problems)
    return failures


def check_determinism(binary):
    failures = 0
    for args, stdin, _, _ in CASES:
        outputs = {run(binary, args, stdin, t) for t in (1, 2, 4, 0) for _ in range(2)}
        ok = len(outputs) == 1
        print(f"{' '.join(args)}: {'ok' if ok else 'FAIL output differs'}")
        failures += not ok
    return failures


def main():
    mode, binary = sys.argv[1], sys.argv[2]
    failures = check_schemas(binary, sys.argv[3]) if mode == "schemas" else check_determinism(binary)
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
