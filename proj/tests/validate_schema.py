#!/usr/bin/env python3
# Copyright 2026 The pvlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Run the CLI in JSON mode over a set of commands and validate each document."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    (["describe", "E6[1,2]"], 0),
    (["grade", "E8[1,7]"], 0),
    (["components", "D9[2,3,5,8]"], 0),
    (["subdiagram", "D9[2,3,5,8]", "--gamma", "5,8"], 0),
    (["classify", "A3[1,3]", "--mode", "both"], 0),
    (["classify", "E6[2,3]", "--mode", "oracle", "--seed", "4"], 0),
    (["classify", "D5[2,5]", "--mode", "pattern"], 0),
    (["classify", "C6[2,5]", "--mode", "both"], 2),
    (["classify", "A3[1,"], 1),
    (["enumerate", "--types", "A,B", "--max-rank", "4", "--mode", "both"], 0),
    (["verify-model", "e6_vector_skew"], 0),
    (["verify-model", "torus_chain:p=1,q=2"], 3),
    (["verify-model", "no_such_model"], 1),
    (["decompose", "descending_chains:n=2"], 0),
    (["decompose", "E6[2,3]"], 3),
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, want in CASES:
        proc = subprocess.run([cli, "--json", *args], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != want:
            print(f"FAIL {label}: exit {proc.returncode}, expected {want}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for err in errors[:3]:
            print(f"FAIL {label}: {'/'.join(map(str, err.path))}: {err.message[:200]}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
