"""Runs every command with --json and validates the output against docs/report-schema.json."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

binary, root = Path(sys.argv[1]), Path(sys.argv[2])
schema = json.loads((root / "docs" / "report-schema.json").read_text())
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["diagram", "data/small.problem"],
    ["vertices", "data/small.problem", "--order", "2,1"],
    ["hilbert", "data/small.problem", "--bound", "6"],
    ["dim", "data/small.problem"],
    ["regseq", "data/small.problem", "--seed", "4", "--trials", "3"],
    ["flat-ci", "data/maps.problem"],
    ["milnor", "data/maps.problem"],
    ["jet", "data/gap.problem", "--mu", "4..6"],
    ["sweep", "data/gap.problem", "--mu", "5..9", "--len", "12"],
    ["oracle-check", "data/small.problem", "--bound", "7"],
    ["det-example"],
]
failures = 0
for args in runs:
    out = subprocess.run([str(binary), *args, "--json"], cwd=root, capture_output=True, text=True)
    if out.returncode != 0:
        print(f"FAIL {' '.join(args)}: exit {out.returncode}: {out.stderr.strip()}")
        failures += 1
        continue
    errors = sorted(validator.iter_errors(json.loads(out.stdout)), key=lambda e: list(e.path))
    for e in errors:
        print(f"FAIL {' '.join(args)}: {list(e.path)}: {e.message}")
    failures += bool(errors)
    if not errors:
        print(f"ok   {' '.join(args)}")
sys.exit(1 if failures else 0)
