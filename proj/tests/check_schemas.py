#!/usr/bin/env python3
"""Validates every JSON-emitting command against schemas/ and checks that
repeated runs are byte-identical."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

COMMANDS = [
    ("triangle.schema.json", ["triangle", "u", "--rows", "10", "--format", "json"]),
    ("triangle.schema.json", ["triangle", "v:2", "--row", "7", "--format", "json"]),
    ("expansion.schema.json", ["expand", "--x", "4", "--n", "3", "--strategy", "v-row", "--terms", "--format", "json"]),
    ("expansion.schema.json", ["expand", "--x", "3", "--n", "9", "--strategy", "gen-binomial:3", "--format", "json"]),
    ("difftable.schema.json", ["difftable", "--n", "3", "--xmax", "10", "--depth", "3", "--format", "json"]),
    ("exp.schema.json", ["exp", "--x", "1", "--digits", "30", "--format", "json"]),
    ("exp.schema.json", ["exp", "--x", "5", "--terms", "10", "--strategy", "u-row", "--format", "json"]),
    ("compare.schema.json", ["--offline", "oeis", "check", "--id", "A287326", "--format", "json"]),
    ("fetch.schema.json", ["--offline", "oeis", "fetch", "--id", "A000124", "--mode", "offline", "--format", "json"]),
    ("audit-report.schema.json", ["audit", "--id", "E3_14", "--format", "json"]),
    ("audit-report.schema.json", ["audit", "--id", "E4_2", "--format", "json"]),
    ("audit-all.schema.json", ["audit", "--format", "json", "--jobs", "2"]),
]


def main():
    binary, schema_dir = sys.argv[1], Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())
    failures = 0
    for schema_name, args in COMMANDS:
        runs = [subprocess.run([binary, *args], capture_output=True, check=False) for _ in range(2)]
        label = " ".join(args)
        if runs[0].returncode != 0:
            print(f"FAIL {label}: exit {runs[0].returncode}: {runs[0].stderr.decode()}")
            failures += 1
            continue
        if runs[0].stdout != runs[1].stdout:
            print(f"FAIL {label}: output differs between runs")
            failures += 1
        validator = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
        errors = list(validator.iter_errors(json.loads(runs[0].stdout)))
        for e in errors[:5]:
            print(f"FAIL {label}: {e.json_path}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
