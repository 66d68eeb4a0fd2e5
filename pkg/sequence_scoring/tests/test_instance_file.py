# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).

import io
import unittest

from ..exceptions import UserError
from ..tools.instance_file import (
    TraceEvent,
    format_jsonl,
    format_plain,
    parse_plain_line,
    read_records,
    read_trace,
    write_records,
)


class TestPlainFormat(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(parse_plain_line("5 -1 5", 1), ((5, -1, 5), None))
        self.assertEqual(parse_plain_line(" 3,-5, 4 ,-5 ", 1), ((3, -5, 4, -5), None))
        self.assertEqual(parse_plain_line("", 1), ((), None))
        self.assertEqual(parse_plain_line("x=-4;5 -1 5", 1), ((5, -1, 5), -4))
        self.assertEqual(parse_plain_line("x=0;", 1), ((), 0))

    def test_errors_name_line_and_field(self):
        with self.assertRaisesRegex(UserError, "Line 3, field 2: '2.5'"):
            parse_plain_line("1 2.5", 3)
        with self.assertRaisesRegex(UserError, "Line 4, field x"):
            parse_plain_line("x=a;1", 4)
        with self.assertRaisesRegex(UserError, "x=K;"):
            parse_plain_line("1 2", 5, require_x=True)

    def test_read_records(self):
        stream = io.StringIO("# header\n5 -1 5\n\n1 b\n3,-5\n")
        with self.assertLogs("sequence_scoring.tools.instance_file", "WARNING"):
            records = read_records(stream)
        self.assertEqual([r.line for r in records], [2, 3, 4, 5])
        self.assertEqual(records[0].seq, (5, -1, 5))
        self.assertEqual(records[1].seq, ())
        self.assertIsNone(records[2].seq)
        self.assertIn("Line 4, field 2", records[2].error.message)
        self.assertEqual(records[3].seq, (3, -5))


class TestJsonlFormat(unittest.TestCase):
    def test_read_records(self):
        stream = io.StringIO(
            '{"seq": [5, -1, 5], "x": -4}\n'
            "[1, 2]\n"
            "\n"
            '{"seq": [1, true]}\n'
            '{"x": 3}\n'
            "{bad\n"
        )
        records = read_records(stream)
        self.assertEqual((records[0].seq, records[0].x), ((5, -1, 5), -4))
        self.assertEqual((records[1].seq, records[1].x), ((1, 2), None))
        self.assertEqual(len(records), 5)
        self.assertIn("Line 4, field 2", records[2].error.message)
        self.assertIn("missing 'seq'", records[3].error.message)
        self.assertIn("invalid JSON", records[4].error.message)

    def test_missing_x(self):
        records = read_records(io.StringIO('{"seq": [1]}\n'), "jsonl", require_x=True)
        self.assertIn("missing 'x'", records[0].error.message)

    def test_write_then_read(self):
        instances = [((3, -5, 4, -5), 6), ((), 0), ((-1,), -2)]
        for fmt in ("plain", "jsonl"):
            stream = io.StringIO()
            write_records(stream, instances, fmt=fmt)
            stream.seek(0)
            records = read_records(stream, fmt, require_x=True)
            self.assertEqual([(r.seq, r.x) for r in records], instances)

    def test_format(self):
        self.assertEqual(format_plain([1, -2], 3), "x=3;1 -2")
        self.assertEqual(format_plain([1, -2]), "1 -2")
        self.assertEqual(format_jsonl([1, -2]), '{"seq": [1, -2]}')


class TestTrace(unittest.TestCase):
    def test_plain(self):
        events = read_trace(io.StringIO("+3 recv a\n-5 send\n\n# note\n4\n"))
        self.assertEqual(
            events, [TraceEvent(3, "recv a"), TraceEvent(-5, "send"), TraceEvent(4)]
        )
        self.assertEqual(read_trace(io.StringIO("")), [])

    def test_jsonl(self):
        events = read_trace(io.StringIO('{"delta": 2, "label": "m1"}\n{"delta": -1}\n'))
        self.assertEqual(events, [TraceEvent(2, "m1"), TraceEvent(-1)])

    def test_errors(self):
        with self.assertRaisesRegex(UserError, "Line 2"):
            read_trace(io.StringIO("1\nabc\n"))
        with self.assertRaisesRegex(UserError, "delta"):
            read_trace(io.StringIO('{"size": 2}\n'))
