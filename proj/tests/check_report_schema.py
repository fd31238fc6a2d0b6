#!/usr/bin/env python3
# Copyright 2026 The Friction Authors
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

"""Validates every machine report the CLI can emit against the schema.

usage: check_report_schema.py FRICTION_BINARY SCHEMA FIXTURE_DIR
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema


def run(binary, args, expect_code=0):
    proc = subprocess.run([binary, *args, "--format", "machine"], capture_output=True, text=True)
    if proc.returncode != expect_code:
        raise AssertionError(f"{args}: exit {proc.returncode}, expected {expect_code}\n{proc.stderr}")
    return json.loads(proc.stdout)


def main():
    binary, schema_path, fixtures = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    markets = {name: os.path.join(fixtures, name + ".market") for name in ("G1", "G2", "G3")}
    with tempfile.TemporaryDirectory() as tmp:
        for seed in range(1, 6):
            text = subprocess.run([binary, "gen", "--seed", str(seed), "--states", "4", "--assets", "2"],
                                  capture_output=True, text=True, check=True).stdout
            path = os.path.join(tmp, f"gen{seed}.market")
            with open(path, "w") as f:
                f.write(text)
            markets[f"gen{seed}"] = path

        reports = []
        for name, path in markets.items():
            width = len(run(binary, ["validate", path])["market"]["states"])
            claim = ",".join(str(i % 3) for i in range(width))
            for mode in ("--exact", "--float"):
                reports.append(run(binary, ["analyze", path, mode]))
            for command in ("validate", "measures", "extend"):
                reports.append(run(binary, [command, path]))
            reports.append(run(binary, ["power", path, "--budget", "4"]))
            for command in ("price", "superhedge", "complete"):
                reports.append(run(binary, [command, path, "--claim", claim]))
        reports.append(run(binary, ["price", markets["G2"], "--claim", "2,0"]))
        reports.append(run(binary, ["validate", os.path.join(fixtures, "badnumeraire.market")], 2))
        reports.append(run(binary, ["study", "--kmax", "6"]))

    failures = 0
    for report in reports:
        for error in validator.iter_errors(report):
            failures += 1
            print(f"{report['command']}: {error.json_path}: {error.message}")
    print(f"{len(reports)} reports checked, {failures} schema violations")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
