# Copyright 2026 The logent Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validates data fixtures and live CLI reports against the JSON schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def main() -> int:
    tool, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(doc)) for name, doc in schemas.items())

    def validator(name):
        return jsonschema.Draft202012Validator(schemas[name], registry=registry)

    matrix_file = validator("matrix_file.schema.json")
    report = validator("run_report.schema.json")
    checked = 0
    for path in sorted((root / "data").glob("*.json")):
        matrix_file.validate(json.loads(path.read_text()))
        checked += 1

    data = root / "data"
    runs = [
        ["entropy", "--in", data / "mixed_qubit.json"],
        ["entropy", "--in", data / "plus.json", "--pvm", data / "computational_pvm2.json"],
        ["divergence", "--in", data / "ket0_density.json", "--in", data / "mixed_qubit.json"],
        ["relative", "--in", data / "bell.json"],
        ["postselect", "--pre", data / "plus.json", "--post", data / "plus_i.json",
         "--pvm", data / "computational_pvm2.json"],
        ["sample", "--in", data / "plus.json", "--pvm", data / "hadamard_pvm.json", "--trials", "1000"],
        ["verify", "--prop", "all", "--dims", "2", "--trials", "20"],
        ["verify", "--prop", "ssa", "--trials", "20000", "--seed", "7"],
    ]
    for args in runs:
        proc = subprocess.run([tool, *map(str, args)], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"{args[0]} exited {proc.returncode}: {proc.stderr}", file=sys.stderr)
            return 1
        doc = json.loads(proc.stdout)
        report.validate(doc)
        for prop in doc["results"].get("propositions", []):
            if "witness" in prop:
                matrix_file.validate(prop["witness"]["state"])
        checked += 1
    print(f"{checked} documents valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
