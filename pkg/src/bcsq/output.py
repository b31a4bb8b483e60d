"""Deterministic result files.

CSV is the primary format: floats as %.11e, '.' decimal separator, '\n'
line endings, so the same inputs give byte-identical files on every
platform. Files appear atomically (temp file in the target directory,
then os.replace); a failure mid-computation leaves nothing behind.

JSON output mirrors the same header/rows as a list of records.
"""

from concurrent.futures import ThreadPoolExecutor
import json
import os
import tempfile

__all__ = ["format_value", "write_rows", "parallel_map"]


def format_value(x) -> str:
    if isinstance(x, bool):
        raise TypeError("booleans have no column format")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return f"{x:.11e}"
    if isinstance(x, str):
        return x
    raise TypeError(f"cannot format {type(x).__name__} for CSV")


def _write_atomic(path: str, data: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_rows(path: str, header: list, rows: list, fmt: str = "csv"):
    """Write header + rows as CSV or JSON records, atomically."""
    if fmt == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(format_value(x) for x in row))
        _write_atomic(path, "\n".join(lines) + "\n")
    elif fmt == "json":
        records = [dict(zip(header, row)) for row in rows]
        _write_atomic(path, json.dumps(records, indent=1) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def parallel_map(func, items, jobs: int = 1) -> list:
    """Map preserving input order, threaded when jobs > 1.

    The heavy kernels here (LAPACK, quadrature on C callables) release the
    GIL, so threads give real speedup without fork overhead.
    """
    if jobs <= 1:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items))
