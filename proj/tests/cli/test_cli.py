"""End-to-end checks of the command-line tool: every document it prints must
validate against the published output schema."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = None
SCHEMA = None


def run(*args, expect_exit=0):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=300)
    if proc.returncode != expect_exit:
        raise AssertionError(f"{args}: exit {proc.returncode}\n{proc.stdout}\n{proc.stderr}")
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, SCHEMA)
    return doc


class CliTest(unittest.TestCase):
    def test_hyperelliptic_scan(self):
        doc = run("hyperelliptic", "--max", "201")
        self.assertEqual(doc["payload"]["hyperelliptic"], [105, 165])

    def test_hyperelliptic_single(self):
        doc = run("hyperelliptic", "--n", "105")
        self.assertEqual(doc["payload"]["certificate"], {"n": 105, "S1": [105, 5], "S2": [3, 7, 15, 21, 35]})
        doc = run("hyperelliptic", "--n", "117")
        self.assertFalse(doc["payload"]["hyperelliptic"])
        self.assertEqual(doc["payload"]["filter"], "ii")

    def test_verify_from_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "f.json")
            with open(path, "w") as f:
                json.dump({"field": {"kind": "GF", "p": 11}, "g": 2, "f": [1, 0, 0, 0, 0, 1]}, f)
            doc = run("verify", "--curve", path, "--point", "(0,1)")
            self.assertEqual(doc["payload"]["cert"], {"a": 0, "v": [1]})
            doc = run("verify", "--curve", path, "--point", "(-1,0)")
            self.assertFalse(doc["payload"]["order_2g1"])

    def test_census(self):
        doc = run("census", "--p", "5", "--m", "1", "--g", "2", "--curve", "x^5+(x+1)^2", "--n", "5")
        self.assertEqual(doc["payload"]["count"], 2)
        self.assertEqual([(p["x"], p["y"]) for p in doc["payload"]["points"]], [(0, 1), (0, 4)])

    def test_construct_single(self):
        doc = run("--field", "GF:11", "construct-single", "--g", "2", "--v", "1")
        self.assertEqual(doc["payload"]["curve"]["f"], [1, 0, 0, 0, 0, 1])
        doc = run("construct-single", "--field", "GF:5", "--g", "2", "--v", "1", expect_exit=1)
        self.assertEqual(doc["error"]["code"], "certificate:multiple_roots")

    def test_rational_single(self):
        doc = run("--field", "Q", "construct-single", "--g", "1", "--a", "1/2", "--v", "3")
        self.assertEqual(doc["payload"]["point"], {"x": "1/2", "y": "3"})

    def test_pair_round(self):
        fam = run("--field", "GF:11", "find-mu", "--g", "2", "--I", "0,1")
        self.assertEqual(fam["payload"]["family"]["mu"], 2)
        cert = json.dumps(fam["payload"]["cert"])
        doc = run("--field", "GF:11", "construct-pair", "--g", "2", "--cert", cert, "--decorations", "--normalize")
        self.assertEqual(doc["payload"]["curve"], fam["payload"]["curve"])
        self.assertEqual(sum(d["matches_input"] for d in doc["payload"]["decorations"]), 1)

    def test_degenerate_mu(self):
        doc = run("--field", "GF:11", "find-mu", "--g", "2", "--I", "0,1", "--mu", "1", expect_exit=1)
        self.assertEqual(doc["error"]["code"], "certificate:q_side_degenerate")

    def test_enumerate(self):
        doc = run("--field", "GF:11", "enumerate-families", "--g", "2")
        self.assertEqual(doc["payload"]["count"], 6)
        self.assertEqual(doc["payload"]["class_count"], 3)
        doc = run("--field", "GF:3,4", "enumerate-families", "--g", "7")
        self.assertEqual(doc["payload"]["regime"], "char")
        self.assertEqual(doc["payload"]["count"], 6)

    def test_weil(self):
        doc = run("--field", "GF:11", "weil", "--g", "2", "--I", "0,1")
        self.assertEqual(doc["payload"]["closed"], 9)
        self.assertTrue(doc["payload"]["agree"])
        values = [w["e"] for w in doc["payload"]["weierstrass"]]
        self.assertEqual(len(values), 5)
        for e in values:
            # 9 embedded in the splitting field
            self.assertEqual(e if isinstance(e, int) else e[0], 9)
            if isinstance(e, list):
                self.assertEqual(e[1:], [0] * (len(e) - 1))

    def test_rational_g52(self):
        doc = run("rational-g52")
        self.assertEqual(doc["payload"]["partition"]["S1"], [105, 5])
        self.assertEqual(len(doc["payload"]["curve"]["f"]), 106)

    def test_selftest_subset(self):
        doc = run("selftest", "--criterion", "1", "--criterion", "3")
        self.assertEqual(doc["payload"]["passed"], 2)

    def test_errors(self):
        doc = run("--field", "GF:4", "enumerate-families", "--g", "2", expect_exit=1)
        self.assertEqual(doc["error"]["code"], "field")
        doc = run("--field", "Q", "enumerate-families", "--g", "2", expect_exit=1)
        self.assertEqual(doc["error"]["code"], "insufficient-field")
        doc = run("--field", "GF:11", "construct-single", "--g", "2", "--v", "x^^2", expect_exit=1)
        self.assertEqual(doc["error"]["code"], "parse")
        doc = run("--field", "GF:11", "verify", "--curve", "x^5+1", "--g", "2", "--point", "(0,2)", expect_exit=1)
        self.assertEqual(doc["error"]["code"], "invalid-argument")
        doc = run("hyperelliptic", "--bogus", expect_exit=2)
        self.assertEqual(doc["error"]["code"], "usage")


if __name__ == "__main__":
    BINARY = sys.argv.pop(1)
    with open(sys.argv.pop(1)) as f:
        SCHEMA = json.load(f)
    unittest.main()
