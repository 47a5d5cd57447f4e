"""JSON and CSV forms of tables and reports (schema version 1)."""

import csv
import io
import json

import numpy as np

from .spectra import SpectralTable, TableKind

SCHEMA = 1


def table_to_obj(table, modulus=None):
    return {
        "schema": SCHEMA,
        "kind": table.kind.value,
        "n": table.n,
        "m": table.m,
        "modulus": modulus,
        "rows": table.data.tolist(),
    }


def table_from_obj(obj):
    if obj.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {obj.get('schema')!r}")
    data = np.array(obj["rows"], dtype=np.int64)
    return SpectralTable(TableKind(obj["kind"]), obj["n"], obj["m"], data)


def dumps(obj):
    return json.dumps(obj, indent=2) + "\n"


def table_to_csv(table):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["u", "v", "value"])
    for u, row in enumerate(table.data.tolist()):
        for v, val in enumerate(row):
            w.writerow([u, v, val])
    return buf.getvalue()


def table_from_csv(text, kind, n, m):
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != ["u", "v", "value"]:
        raise ValueError("CSV header must be u,v,value")
    data = np.zeros((1 << n, 1 << m), dtype=np.int64)
    for u, v, val in rows[1:]:
        data[int(u), int(v)] = int(val)
    return SpectralTable(TableKind(kind), n, m, data)


def table_to_pretty(table):
    width = max(len(str(x)) for x in (int(table.data.min()), int(table.data.max())))
    lines = [f"{table.kind.value} table, n={table.n}, m={table.m}"]
    for row in table.data.tolist():
        lines.append(" ".join(str(x).rjust(width) for x in row))
    return "\n".join(lines) + "\n"
