#!/usr/bin/env python3
# Copyright 2026 The Cutlab Authors.
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

"""Drives the cutlab CLI: exit codes, and every JSON output against the
published schemas.

usage: cli_test.py CLI SCHEMA_DIR DATA_DIR
"""

import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema
from referencing import Registry, Resource

CLI, SCHEMAS, DATA = None, None, None


def load_registry(schema_dir):
    resources = []
    for path in sorted(pathlib.Path(schema_dir).glob("*.schema.json")):
        contents = json.loads(path.read_text())
        resources.append((contents["$id"], Resource.from_contents(contents)))
    return Registry().with_resources(resources)


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.registry = load_registry(SCHEMAS)
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = pathlib.Path(cls.tmp.name)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def check(self, doc, name):
        schema = self.registry.contents(
            "https://cutlab.invalid/schema/" + name + ".schema.json")
        validator = jsonschema.Draft202012Validator(schema, registry=self.registry)
        errors = sorted(validator.iter_errors(doc), key=str)
        self.assertEqual(errors, [], name)

    def test_gen_every_kind_is_schema_valid_and_deterministic(self):
        for kind in ["graph", "planar", "cpmc", "tmc", "setcover", "cover",
                     "interdiction"]:
            first = run("gen", "--kind", kind, "--seed", "7", "--n", "10")
            self.assertEqual(first.returncode, 0, first.stderr)
            again = run("gen", "--kind", kind, "--seed", "7", "--n", "10")
            self.assertEqual(first.stdout, again.stdout, kind)
            self.check(json.loads(first.stdout), "instance")

    def test_solve_star_fixture(self):
        out = run("solve", "--problem", "tmnc", "--algo", "lp-rounding",
                  "--in", str(DATA / "star_tmnc.json"), "--json")
        self.assertEqual(out.returncode, 0, out.stderr)
        report = json.loads(out.stdout)
        self.check(report, "report")
        self.assertEqual(report["value"], 3)
        self.assertEqual(report["oracle"], 3)
        self.assertEqual(report["ratio"], 1.0)

    def test_solve_exit_codes(self):
        bad = self.dir / "adjacent.json"
        bad.write_text(json.dumps({
            "format_version": 1, "kind": "tmc",
            "payload": {"graph": {"nodes": 2, "edges": [[0, 1]]},
                        "client": 0, "services": [1], "threshold": 1,
                        "mode": "node"}}))
        out = run("solve", "--problem", "tmnc", "--in", str(bad), "--json")
        self.assertEqual(out.returncode, 2, out.stderr)
        self.check(json.loads(out.stdout), "report")

        out = run("solve", "--problem", "tmec", "--in", str(DATA / "star_tmnc.json"))
        self.assertEqual(out.returncode, 1)
        self.assertIn("needs edge", out.stderr)

        broken = self.dir / "broken.json"
        broken.write_text("{\n  \"kind\": \n")
        out = run("solve", "--problem", "tmnc", "--in", str(broken))
        self.assertEqual(out.returncode, 1)
        self.assertIn("ParseError", out.stderr)

        self.assertEqual(run("solve", "--problem", "nope", "--in", "x").returncode, 64)
        self.assertEqual(run("solve").returncode, 64)
        self.assertEqual(run().returncode, 64)
        self.assertEqual(run("--help").returncode, 0)

    def test_reduce_and_verify(self):
        target = self.dir / "fig2_cpmc.json"
        out = run("reduce", "--from", "setcover", "--to", "cpmec",
                  "--in", str(DATA / "fig2_setcover.json"), "--out", str(target))
        self.assertEqual(out.returncode, 0, out.stderr)
        cert_path = pathlib.Path(str(target) + ".cert.json")
        self.check(json.loads(target.read_text()), "instance")
        cert = json.loads(cert_path.read_text())
        self.check(cert, "certificate")

        solved = run("solve", "--problem", "cpmec", "--in", str(target), "--json")
        self.assertEqual(solved.returncode, 0, solved.stderr)
        report = json.loads(solved.stdout)
        self.assertEqual(report["value"], 20)

        src = self.dir / "cover.json"
        src.write_text(json.dumps({"solution": [0, 1]}))
        tgt = self.dir / "cut.json"
        tgt.write_text(json.dumps({"solution": report["members"]}))
        ok = run("verify", "--cert", str(cert_path), "--source-sol", str(src),
                 "--target-sol", str(tgt), "--optimal", "--json")
        self.assertEqual(ok.returncode, 0, ok.stdout + ok.stderr)
        verdict = json.loads(ok.stdout)
        self.check(verdict, "verdict")
        self.assertTrue(verdict["ok"])

        cert["relation"]["scale"] = 5
        corrupted = self.dir / "corrupted.cert.json"
        corrupted.write_text(json.dumps(cert))
        bad = run("verify", "--cert", str(corrupted), "--source-sol", str(src),
                  "--target-sol", str(tgt), "--json")
        self.assertEqual(bad.returncode, 1)
        verdict = json.loads(bad.stdout)
        self.check(verdict, "verdict")
        self.assertFalse(verdict["ok"])
        self.assertTrue(any("/relation/scale" in v for v in verdict["violations"]))

    def test_other_reductions(self):
        graph = self.dir / "g.json"
        graph.write_text(run("gen", "--kind", "graph", "--n", "6", "--seed", "3",
                             "--max-weight", "1").stdout)
        out = run("reduce", "--from", "bisection", "--to", "tmec", "--in", str(graph),
                  "--out", str(self.dir / "tmec.json"))
        self.assertEqual(out.returncode, 0, out.stderr)
        self.check(json.loads((self.dir / "tmec.json").read_text()), "instance")

        cover = self.dir / "c.json"
        cover.write_text(run("gen", "--kind", "cover", "--n", "5", "--k", "4").stdout)
        out = run("reduce", "--from", "maxcover", "--to", "interdiction",
                  "--in", str(cover), "--out", str(self.dir / "int.json"))
        self.assertEqual(out.returncode, 0, out.stderr)
        self.check(json.loads((self.dir / "int.json.cert.json").read_text()),
                   "certificate")

        out = run("reduce", "--from", "cover", "--to", "tmec", "--in", str(cover),
                  "--out", str(self.dir / "x.json"))
        self.assertEqual(out.returncode, 1)

    def test_bench(self):
        suite = str(DATA / "bench_suite.json")
        out = run("bench", "--suite", suite, "--json")
        self.assertEqual(out.returncode, 0, out.stderr)
        table = json.loads(out.stdout)
        self.check(table, "bench")
        self.assertGreaterEqual(len(table["rows"]), 4)

        quiet = [run("bench", "--suite", suite, "--json", "--no-timing",
                     env={"CUTLAB_THREADS": str(t), "PATH": "/usr/bin:/bin"}).stdout
                 for t in (1, 4)]
        self.assertEqual(quiet[0], quiet[1])
        text = run("bench", "--suite", suite)
        self.assertEqual(text.returncode, 0)
        self.assertIn("oracle", text.stdout)


if __name__ == "__main__":
    CLI = sys.argv[1]
    SCHEMAS = pathlib.Path(sys.argv[2])
    DATA = pathlib.Path(sys.argv[3])
    unittest.main(argv=sys.argv[:1], verbosity=2)
