"""Run each CLI subcommand in JSON mode and validate the output against the shipped schemas."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

COMMANDS = {
    "eigenvalues": ["eigenvalues", "--p", "2", "--count", "3", "--digits", "12"],
    "eigenvector": ["eigenvector", "--p", "3", "--index", "2", "--terms", "10"],
    "spectrum": ["spectrum", "--p", "2", "--cutoff", "5"],
    "zeta": ["zeta", "--p", "2", "--s", "1,2", "--mode", "paper", "--eps", "1e-8"],
    "tree": ["tree", "--p", "3", "--depth", "2"],
    "verify": ["verify", "--p", "2", "--N", "30", "--count", "3", "--depth", "4"],
}


def main() -> int:
    tool, schema_dir = sys.argv[1], Path(sys.argv[2])
    failures = 0
    for name, args in COMMANDS.items():
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        runs = [subprocess.run([tool, *args, "--format", "json"], capture_output=True, text=True) for _ in range(2)]
        first = runs[0]
        if first.returncode != 0:
            print(f"FAIL {name}: exit {first.returncode}: {first.stderr.strip()}")
            failures += 1
            continue
        if runs[1].stdout != first.stdout:
            print(f"FAIL {name}: output differs between identical runs")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(first.stdout), schema)
        except jsonschema.ValidationError as error:
            print(f"FAIL {name}: {error.message}")
            failures += 1
            continue
        print(f"ok   {name}")
    bad = subprocess.run([tool, "eigenvalues", "--digits", "3"], capture_output=True, text=True)
    if bad.returncode != 2:
        print(f"FAIL invalid config exit status {bad.returncode}, expected 2")
        failures += 1
    else:
        print("ok   invalid config exits 2")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
