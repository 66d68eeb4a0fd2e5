# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).

import io
import json
import os
import tempfile
import unittest
import zipfile
from unittest import mock

from ..cli.main import main
from ..tools.config import DEFAULT_OPTIONS, config


class TestCli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.tmpdir = tempfile.TemporaryDirectory()
        cls.patcher = mock.patch.dict(
            os.environ,
            {"SEQUENCE_SCORING_RC": os.path.join(cls.tmpdir.name, "missing.cfg")},
        )
        cls.patcher.start()

    @classmethod
    def tearDownClass(cls):
        cls.patcher.stop()
        cls.tmpdir.cleanup()
        config.options = dict(DEFAULT_OPTIONS)
        super().tearDownClass()

    def tearDown(self):
        config.options = dict(DEFAULT_OPTIONS)
        super().tearDown()

    def run_cli(self, argv, text=""):
        stdout = io.StringIO()
        status = main(argv, stdin=io.StringIO(text), stdout=stdout)
        return status, stdout.getvalue().splitlines()

    def test_mss(self):
        status, lines = self.run_cli(["mss"], "5 -1 5\n\n3 -5 4 -5\n")
        self.assertEqual(status, 0)
        self.assertEqual(
            lines,
            [
                "value=9 span=[0,3) intervals=1",
                "value=0 span=[0,0) intervals=0",
                "value=4 span=[2,3) intervals=2",
            ],
        )

    def test_mss_json_and_errors(self):
        status, lines = self.run_cli(["mss", "--json"], "[3, -5, 4, -5]\n[1, 0.5]\n")
        self.assertEqual(status, 2)
        first = json.loads(lines[0])
        self.assertEqual(first["boundaries"], [[0, 2], [2, 4]])
        self.assertEqual(json.loads(lines[1])["line"], 2)
        self.assertIn("error", json.loads(lines[1]))

    def test_insert_both(self):
        text = (
            '{"seq": [5, -1, 5], "x": -4}\n'
            '{"seq": [], "x": 0}\n'
            '{"seq": [3, -5, 4, -5], "x": 6}\n'
        )
        status, lines = self.run_cli(["insert", "--mode", "both", "--json"], text)
        self.assertEqual(status, 0)
        results = [json.loads(line) for line in lines]
        self.assertEqual((results[0]["index"], results[0]["value"]), (1, 5))
        self.assertTrue(results[0]["agreement"])
        self.assertEqual((results[1]["index"], results[1]["value"]), (0, 0))
        self.assertEqual((results[2]["value"], results[2]["naive_value"]), (6, 6))

    def test_insert_plain_modes(self):
        status, lines = self.run_cli(["insert"], "x=-4;5 -1 5\n")
        self.assertEqual((status, lines), (0, ["index=1 value=5"]))
        status, lines = self.run_cli(["insert", "--mode", "naive"], "x=-4;5 -1 5\n")
        self.assertEqual((status, lines), (0, ["index=1 value=5"]))
        status, lines = self.run_cli(["insert"], "x=1;3 -5 4 -5\n")
        self.assertEqual((status, lines), (0, ["index=1 value=4"]))
        status, lines = self.run_cli(["insert"], "5 -1 5\n")
        self.assertEqual(status, 2)
        self.assertTrue(lines[0].startswith("error line=1"))

    def test_sort(self):
        status, lines = self.run_cli(["sort", "--mode", "both", "--json"], "9 -10 9 -10 10\n")
        self.assertEqual(status, 0)
        result = json.loads(lines[0])
        self.assertEqual((result["value"], result["opt"], result["L"]), (18, 10, 10))
        self.assertLessEqual(result["ratio"], 1.9)
        self.assertTrue(result["bound_ok"])
        status, lines = self.run_cli(["sort"], "1 2 3\n")
        self.assertEqual(status, 0)
        self.assertTrue(lines[0].startswith("n=3 value=6 L=6 lower_bound=6"))
        status, lines = self.run_cli(["sort", "--mode", "both"], "5 6 7 5 6 7 -18\n")
        self.assertEqual(status, 0)
        self.assertIn("opt=18", lines[0])

    def test_sort_heavy_negatives(self):
        text = "-1 -5 0 2 1 2 0 2\n4 1 4 -2 2 4 -12\n"
        status, lines = self.run_cli(["sort", "--mode", "both", "--json"], text)
        self.assertEqual(status, 0)
        results = [json.loads(line) for line in lines]
        self.assertEqual(
            [(r["lower_bound"], r["opt"], r["bound_ok"]) for r in results],
            [(3, 3, True), (7, 7, True)],
        )
        status, lines = self.run_cli(["verify"], text)
        self.assertEqual(status, 0)
        self.assertTrue(all("sort=ok" in line for line in lines))

    def test_sort_oracle_refusal(self):
        status, lines = self.run_cli(
            ["sort", "--mode", "exact", "--limit", "3"], "1 2 3 4\n1 2\n"
        )
        self.assertEqual(status, 2)
        self.assertIn("limited to 3", lines[0])
        self.assertTrue(lines[1].startswith("n=2 opt=3"))

    def test_sort_xlsx(self):
        path = os.path.join(self.tmpdir.name, "sort.xlsx")
        status, _lines = self.run_cli(
            ["sort", "--mode", "both", "--xlsx", path], "1 2 3\n9 -10 9 -10 10\n"
        )
        self.assertEqual(status, 0)
        with zipfile.ZipFile(path) as archive:
            self.assertIn("xl/worksheets/sheet1.xml", archive.namelist())

    def test_verify(self):
        status, generated = self.run_cli(
            ["gen", "random", "--n", "6", "--lo", "-5", "--hi", "5",
             "--count", "20", "--with-x", "--seed", "3"]
        )
        self.assertEqual(status, 0)
        status, lines = self.run_cli(["verify"], "\n".join(generated) + "\n")
        self.assertEqual(status, 0)
        self.assertEqual(len(lines), 20)
        self.assertTrue(all("insert=ok sort=ok" in line for line in lines))

    def test_workers_keep_order(self):
        text = "".join(f"{i} -{i + 1} {i}\n" for i in range(12))
        _status, serial = self.run_cli(["mss"], text)
        status, parallel = self.run_cli(["mss", "--workers", "2"], text)
        self.assertEqual(status, 0)
        self.assertEqual(parallel, serial)

    def test_gen(self):
        status, lines = self.run_cli(["gen", "tightness", "--x", "10", "--y", "9"])
        self.assertEqual((status, lines), (0, ["9 -10 9 -10 10"]))
        status, lines = self.run_cli(
            ["gen", "threepartition", "--items", "5,6,7,5,6,7", "--s", "18"]
        )
        self.assertEqual(lines, ["5 6 7 5 6 7 -18"])
        argv = ["gen", "random", "--n", "5", "--lo", "-3", "--hi", "3", "--seed", "42"]
        self.assertEqual(self.run_cli(argv), self.run_cli(argv))
        status, lines = self.run_cli(["gen", "kpartition", "--items", "3,1,2", "--m", "2", "--json"])
        self.assertEqual(json.loads(lines[0]), {"seq": [3, 1, 2, -7]})
        status, lines = self.run_cli(["gen", "threepartition", "--k", "2", "--s", "18"])
        self.assertEqual(len(lines[0].split()), 7)

    def test_gen_invalid(self):
        with self.assertLogs("sequence_scoring.cli.main", "ERROR"):
            status, _lines = self.run_cli(["gen", "tightness", "--x", "10", "--y", "4"])
        self.assertEqual(status, 2)
        status, _lines = self.run_cli(["gen", "tightness", "--x", "10"])
        self.assertEqual(status, 2)

    def test_bench(self):
        path = os.path.join(self.tmpdir.name, "bench.xlsx")
        status, lines = self.run_cli(
            ["bench", "--sizes", "1,8", "--reps", "2", "--xlsx", path]
        )
        self.assertEqual(status, 0)
        self.assertEqual(lines[0], "n,algo,rep,micros,checksum")
        self.assertEqual(len(lines), 9)
        rows = [line.split(",") for line in lines[1:]]
        for fast, naive in zip(rows[::2], rows[1::2]):
            self.assertEqual((fast[1], naive[1]), ("fast", "naive"))
            self.assertEqual(fast[4], naive[4])
            self.assertGreater(float(fast[3]), 0)
        self.assertTrue(os.path.exists(path))
        self.assertEqual(self.run_cli(["bench", "--sizes", "0"])[0], 2)

    def test_trace(self):
        status, lines = self.run_cli(["trace", "--json"], "+3\n-5\n+4\n-5\n")
        self.assertEqual(status, 0)
        result = json.loads(lines[0])
        self.assertEqual((result["peak_from_empty"], result["burst"]), (3, 4))
        self.assertLessEqual(result["reorder_value"], 2 * result["reorder_opt"])
        status, lines = self.run_cli(["trace"], "+9 a\n-10 b\n+9 c\n-10 d\n+10 e\n")
        self.assertIn("peak_from_empty=9 burst=10", lines[0])
        self.assertIn("reorder_opt=10", lines[0])
        status, lines = self.run_cli(["trace", "--json"], "")
        result = json.loads(lines[0])
        for key in ("events", "peak_from_empty", "burst", "reorder_value", "reorder_opt"):
            self.assertEqual(result[key], 0)
        status, _lines = self.run_cli(["trace"], "+3\nfoo\n")
        self.assertEqual(status, 2)

    def test_config_file(self):
        rcfile = os.path.join(self.tmpdir.name, "scoring.cfg")
        with open(rcfile, "w", encoding="utf-8") as f:
            f.write("[options]\nexact_sss_limit = 2\n")
        status, lines = self.run_cli(["sort", "--mode", "exact", "--config", rcfile], "1 2 3\n")
        self.assertEqual(status, 2)
        self.assertIn("limited to 2", lines[0])
        status, _lines = self.run_cli(["mss", "--config", rcfile + ".missing"], "1\n")
        self.assertEqual(status, 2)
