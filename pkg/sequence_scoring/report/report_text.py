# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).
"""Rendering of command results: ``key=value`` lines, JSON lines and the
benchmark CSV."""

import csv
import json

CSV_HEADER = ("n", "algo", "rep", "micros", "checksum")

# only shown with --json
JSON_ONLY = ("line", "status", "boundaries", "witnesses", "b_values", "labels")


def format_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.4f}"
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(v) for v in value)
    return str(value)


def _jsonable(value):
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


def render_line(result, as_json=False):
    """One output line for ``result``, a dict whose insertion order is the
    column order."""
    if as_json:
        return json.dumps({key: _jsonable(value) for key, value in result.items()})
    if "error" in result:
        return f"error line={result.get('line')}: {result['error']}"
    return " ".join(
        f"{key}={format_value(value)}"
        for key, value in result.items()
        if key not in JSON_ONLY
    )


def write_lines(stream, results, as_json=False):
    for result in results:
        stream.write(render_line(result, as_json=as_json) + "\n")


def write_bench_csv(stream, records):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(
            (
                record.n,
                record.algo,
                record.rep,
                f"{record.micros:.3f}",
                record.checksum,
            )
        )
