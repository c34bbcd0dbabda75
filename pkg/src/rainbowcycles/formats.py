"""Line-oriented text formats.

ECG (edge-coloured graph)::

    ecg <n> <m> <t>
    e <u> <v> <c>          (m lines)

DGR (digraph)::

    dgr <n> <m>
    a <u> <v>              (m lines)

Certificate::

    cert <length> <rainbow 0|1>
    v <id>                 (length lines, cycle order)
    eid <edge index>       (length lines, cycle order)

Fields are separated by single spaces and every line ends in a newline.
Lines starting with ``#`` are comments and may appear anywhere.
"""

from __future__ import annotations

from .errors import InvalidGraphError
from .graph import CycleCertificate, Digraph, EdgeColouredGraph


class FormatError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def _records(text: str):
    """Yield ``(line number, fields)`` for non-comment lines."""
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if raw == "" or raw.startswith("#"):
            continue
        if raw.endswith("\r"):
            raise FormatError("carriage return in line", lineno, len(raw))
        fields = raw.split(" ")
        col = 1
        for f in fields:
            if f == "":
                raise FormatError("fields must be separated by single spaces", lineno, col)
            col += len(f) + 1
        yield lineno, fields


def _ints(fields, lineno, tag, count):
    if fields[0] != tag:
        raise FormatError(f"expected {tag!r} record, got {fields[0]!r}", lineno, 1)
    if len(fields) != count + 1:
        raise FormatError(f"{tag!r} record needs {count} fields, got {len(fields) - 1}", lineno)
    out, col = [], len(fields[0]) + 2
    for f in fields[1:]:
        if not f.isdigit():
            raise FormatError(f"expected a non-negative integer, got {f!r}", lineno, col)
        out.append(int(f))
        col += len(f) + 1
    return out


def parse_ecg(text: str) -> EdgeColouredGraph:
    recs = list(_records(text))
    if not recs:
        raise FormatError("empty input")
    lineno, fields = recs[0]
    n, m, t = _ints(fields, lineno, "ecg", 3)
    body = recs[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges, found {len(body)}", lineno)
    edges = [tuple(_ints(f, ln, "e", 3)) for ln, f in body]
    try:
        return EdgeColouredGraph(n, edges, t)
    except InvalidGraphError as exc:
        line = body[exc.index][0] if exc.index is not None else lineno
        raise FormatError(str(exc), line) from exc


def write_ecg(G: EdgeColouredGraph) -> str:
    lines = [f"ecg {G.n} {G.m} {G.colours}"]
    lines += [f"e {u} {v} {c}" for u, v, c in G.edges]
    return "\n".join(lines) + "\n"


def parse_dgr(text: str) -> Digraph:
    recs = list(_records(text))
    if not recs:
        raise FormatError("empty input")
    lineno, fields = recs[0]
    n, m = _ints(fields, lineno, "dgr", 2)
    body = recs[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} arcs, found {len(body)}", lineno)
    arcs = [tuple(_ints(f, ln, "a", 2)) for ln, f in body]
    try:
        return Digraph(n, arcs)
    except InvalidGraphError as exc:
        line = body[exc.index][0] if exc.index is not None else lineno
        raise FormatError(str(exc), line) from exc


def write_dgr(D: Digraph) -> str:
    lines = [f"dgr {D.n} {len(D.arcs)}"] + [f"a {u} {v}" for u, v in D.arcs]
    return "\n".join(lines) + "\n"


def parse_cert(text: str) -> CycleCertificate:
    recs = list(_records(text))
    if not recs:
        raise FormatError("empty certificate")
    lineno, fields = recs[0]
    length, flag = _ints(fields, lineno, "cert", 2)
    if flag not in (0, 1):
        raise FormatError(f"rainbow flag must be 0 or 1, got {flag}", lineno)
    body = recs[1:]
    if len(body) != 2 * length:
        raise FormatError(f"declared length {length} needs {2 * length} records, found {len(body)}", lineno)
    vs = [_ints(f, ln, "v", 1)[0] for ln, f in body[:length]]
    es = [_ints(f, ln, "eid", 1)[0] for ln, f in body[length:]]
    return CycleCertificate(tuple(vs), tuple(es), bool(flag))


def write_cert(C: CycleCertificate, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"cert {C.length} {int(C.rainbow)}")
    lines += [f"v {v}" for v in C.vertices]
    lines += [f"eid {e}" for e in C.edge_ids]
    return "\n".join(lines) + "\n"
