#!/usr/bin/env python3
"""Validate gridspectra JSON output against the schemas in schemas/.

usage: validate_report.py SCHEMA [FILE]   (reads stdin when FILE is omitted)
SCHEMA is a file name or one of: pipeline, stage, lines, spectrum.
"""

import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource

SCHEMA_DIR = pathlib.Path(__file__).resolve().parent.parent / "schemas"
ALIASES = {
    "pipeline": "pipeline_report.schema.json",
    "stage": "stage_result.schema.json",
    "lines": "line_structure.schema.json",
    "spectrum": "spectrum_result.schema.json",
}


def load_registry():
    resources = []
    for path in SCHEMA_DIR.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def main(argv):
    if len(argv) not in (2, 3):
        print(__doc__.strip(), file=sys.stderr)
        return 2
    name = ALIASES.get(argv[1], argv[1])
    schema = json.loads((SCHEMA_DIR / name).read_text())
    text = pathlib.Path(argv[2]).read_text() if len(argv) == 3 else sys.stdin.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        print(f"invalid JSON: {e}", file=sys.stderr)
        return 1
    validator = jsonschema.Draft202012Validator(schema, registry=load_registry())
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    for err in errors:
        print(f"{'/'.join(map(str, err.path)) or '<root>'}: {err.message}", file=sys.stderr)
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
