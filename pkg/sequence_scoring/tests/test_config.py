# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).

import os
import tempfile
import unittest
from unittest import mock

from ..exceptions import UserError
from ..tools.config import DEFAULT_OPTIONS, ConfigManager


class TestConfig(unittest.TestCase):
    def setUp(self):
        super().setUp()
        self.tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmpdir.cleanup)
        self.rcfile = os.path.join(self.tmpdir.name, "scoring.cfg")

    def write(self, text):
        with open(self.rcfile, "w", encoding="utf-8") as f:
            f.write(text)

    def test_defaults(self):
        missing = os.path.join(self.tmpdir.name, "missing.cfg")
        with mock.patch.dict(os.environ, {"SEQUENCE_SCORING_RC": missing}):
            manager = ConfigManager().load()
        self.assertEqual(manager.options, DEFAULT_OPTIONS)
        self.assertEqual(manager.scalar_bound(), 2**63 - 1)

    def test_load_from_environment(self):
        self.write("[options]\nexact_sss_limit = 6\nlog_level = debug\nextra = x\n")
        with mock.patch.dict(os.environ, {"SEQUENCE_SCORING_RC": self.rcfile}):
            manager = ConfigManager().load()
        self.assertEqual(manager["exact_sss_limit"], 6)
        self.assertEqual(manager.get("log_level"), "debug")
        self.assertEqual(manager.get("extra"), "x")
        self.assertEqual(manager["bench_reps"], 3)
        self.assertEqual(manager.rcfile, self.rcfile)

    def test_explicit_file_must_exist(self):
        with self.assertRaisesRegex(UserError, "does not exist"):
            ConfigManager().load(os.path.join(self.tmpdir.name, "missing.cfg"))

    def test_invalid_values(self):
        self.write("[options]\nscalar_bits = many\n")
        with self.assertRaisesRegex(UserError, "scalar_bits"):
            ConfigManager().load(self.rcfile)
        self.write("not an ini file\n")
        with self.assertRaises(UserError):
            ConfigManager().load(self.rcfile)

    def test_override(self):
        manager = ConfigManager()
        manager["scalar_bits"] = 16
        manager["bench_sizes"] = "10,20"
        self.assertEqual(manager["scalar_bits"], 16)
        self.assertEqual(manager.scalar_bound(), 32767)
        self.assertEqual(manager["bench_sizes"], "10,20")
