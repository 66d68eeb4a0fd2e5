# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).
"""Instance and trace files.

Plain format: one sequence per line, integers separated by spaces and/or
commas; in insertion files the line starts with ``x=K;``. An empty line is
the empty sequence, lines starting with ``#`` are skipped.

JSONL format: one JSON value per line, either an array of integers or an
object ``{"seq": [...], "x": K}``.
"""

import json
import logging
import re
from dataclasses import dataclass

from gettext import gettext as _

from ..exceptions import UserError

_logger = logging.getLogger(__name__)

FORMATS = ("auto", "plain", "jsonl")

SEPARATOR = re.compile(r"[\s,]+")
X_PREFIX = re.compile(r"^\s*x\s*=\s*([^;]*);(.*)$")


@dataclass(frozen=True)
class Record:
    line: int
    seq: tuple = None
    x: int = None
    error: UserError = None


@dataclass(frozen=True)
class TraceEvent:
    delta: int
    label: str = None


def _parse_int(token, line, field):
    if re.fullmatch(r"[+-]?\d+", token) is None:
        raise UserError(
            _("Line %(line)s, field %(field)s: '%(token)s' is not an integer.")
            % {"line": line, "field": field, "token": token}
        )
    return int(token)


def _json_int(value, line, field):
    if isinstance(value, bool) or not isinstance(value, int):
        raise UserError(
            _("Line %(line)s, field %(field)s: %(value)s is not an integer.")
            % {"line": line, "field": field, "value": json.dumps(value)}
        )
    return value


def parse_plain_line(text, line, require_x=False):
    x = None
    match = X_PREFIX.match(text)
    if match:
        x = _parse_int(match.group(1).strip(), line, "x")
        text = match.group(2)
    elif require_x:
        raise UserError(
            _("Line %(line)s: missing the 'x=K;' prefix.") % {"line": line}
        )
    tokens = [token for token in SEPARATOR.split(text.strip()) if token]
    seq = tuple(
        _parse_int(token, line, field) for field, token in enumerate(tokens, start=1)
    )
    return seq, x


def parse_jsonl_line(text, line, require_x=False):
    try:
        data = json.loads(text)
    except ValueError as e:
        raise UserError(
            _("Line %(line)s: invalid JSON (%(error)s).") % {"line": line, "error": e}
        ) from e
    x = None
    if isinstance(data, dict):
        if "seq" not in data:
            raise UserError(_("Line %(line)s: missing 'seq'.") % {"line": line})
        if "x" in data:
            x = _json_int(data["x"], line, "x")
        data = data["seq"]
    if not isinstance(data, list):
        raise UserError(
            _("Line %(line)s: expected an array of integers.") % {"line": line}
        )
    if require_x and x is None:
        raise UserError(_("Line %(line)s: missing 'x'.") % {"line": line})
    seq = tuple(
        _json_int(value, line, field) for field, value in enumerate(data, start=1)
    )
    return seq, x


def _detect(lines):
    for text in lines:
        stripped = text.strip()
        if stripped and not stripped.startswith("#"):
            return "jsonl" if stripped[0] in "[{" else "plain"
    return "plain"


def read_records(stream, fmt="auto", require_x=False):
    """Parse every instance of ``stream``.

    Errors do not stop the reading: the faulty line comes back as a
    ``Record`` carrying the ``UserError``.
    """
    lines = stream.read().splitlines()
    if fmt == "auto":
        fmt = _detect(lines)
    parse = parse_jsonl_line if fmt == "jsonl" else parse_plain_line
    records = []
    for line, text in enumerate(lines, start=1):
        if text.lstrip().startswith("#"):
            continue
        if fmt == "jsonl" and not text.strip():
            continue
        try:
            seq, x = parse(text, line, require_x=require_x)
        except UserError as e:
            _logger.warning("%s", e.message)
            records.append(Record(line, error=e))
            continue
        records.append(Record(line, seq, x))
    _logger.info("Read %s instances (%s format)", len(records), fmt)
    return records


def format_plain(seq, x=None):
    body = " ".join(str(a) for a in seq)
    if x is None:
        return body
    return f"x={x};{body}"


def format_jsonl(seq, x=None):
    data = {"seq": [int(a) for a in seq]}
    if x is not None:
        data["x"] = int(x)
    return json.dumps(data)


def write_records(stream, records, fmt="plain"):
    """Write ``(seq, x)`` pairs, one instance per line."""
    render = format_jsonl if fmt == "jsonl" else format_plain
    for seq, x in records:
        stream.write(render(seq, x) + "\n")


def read_trace(stream, fmt="auto"):
    """Events of a buffer trace: a signed delta per line and an optional
    label (``+3 recv a``), or JSON objects ``{"delta": 3, "label": "a"}``."""
    lines = stream.read().splitlines()
    if fmt == "auto":
        fmt = _detect(lines)
    events = []
    for line, text in enumerate(lines, start=1):
        stripped = text.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if fmt == "jsonl":
            try:
                data = json.loads(stripped)
            except ValueError as e:
                raise UserError(
                    _("Line %(line)s: invalid JSON (%(error)s).")
                    % {"line": line, "error": e}
                ) from e
            if not isinstance(data, dict) or "delta" not in data:
                raise UserError(
                    _("Line %(line)s: expected an object with 'delta'.")
                    % {"line": line}
                )
            label = data.get("label")
            events.append(
                TraceEvent(
                    _json_int(data["delta"], line, 1),
                    None if label is None else str(label),
                )
            )
        else:
            head, _sep, label = stripped.partition(" ")
            events.append(
                TraceEvent(_parse_int(head, line, 1), label.strip() or None)
            )
    return events
