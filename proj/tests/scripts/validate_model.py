"""Validates model documents against docs/sydra.schema.json.

Usage: validate_model.py SCHEMA MODEL [MODEL...]
Exits 77 (skip) when the jsonschema package is unavailable.
"""

import json
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)


def main(argv):
    with open(argv[1], encoding="utf-8") as f:
        schema = json.load(f)
    validator_cls = jsonschema.validators.validator_for(schema)
    validator_cls.check_schema(schema)
    validator = validator_cls(schema)
    failed = False
    for path in argv[2:]:
        with open(path, encoding="utf-8") as f:
            doc = json.load(f)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for error in errors:
            location = "$" + "".join(
                f"[{p}]" if isinstance(p, int) else f".{p}" for p in error.path)
            print(f"{path}: {location}: {error.message}")
        if errors:
            failed = True
        else:
            print(f"{path}: valid")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
