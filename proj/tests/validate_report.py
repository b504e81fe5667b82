"""Validates analyze --json output from the CLI against the report schema."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    ["analyze", "kronecker", "--alpha", "sqrt2", "--n", "200"],
    ["analyze", "ekg", "--n", "500", "--no-timing"],
    ["analyze", "comet", "--c", "0.5", "--seed", "2", "--n", "300", "--eigen", "iterative"],
    ["analyze", "signflip", "--base", "3", "--n", "100"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in CASES:
        proc = subprocess.run([binary, *args, "--json", "-"], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for err in errors:
            print(f"FAIL {' '.join(args)}: {err.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")
    bad = {"spec": "x"}
    if validator.is_valid(bad):
        print("FAIL schema accepts an incomplete report")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
