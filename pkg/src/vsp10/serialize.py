"""Line-oriented text documents for instances, presentations and reports.

Every document starts with a line ``schema <kind>/<version>`` and ends with
``end``.  One record per line, with tokens separated by single spaces.

Instance (``vsp10-instance/1``)::

    schema vsp10-instance/1
    prime 10007
    seed 1
    L_S 9 15          # followed by 9 lines "row c0 ... c14"
    P_S 6 15          # followed by 6 row lines
    f <cubic in x0..x5, canonical degrevlex text>
    m_P <cubic in x0..x5>
    end

Matrices are row-major, one row per line, with Plücker coordinates in lex
order 01, 02, ..., 45.  Field elements are decimal residues; extension
elements are written (c0,c1,...) in the power basis of the stated modulus.

Presentation (``vsp10-presentation/1``)::

    schema vsp10-presentation/1
    prime 10007
    modulus c0 c1 ... 1   # monic modulus of the compositum, low degree first
    point <6 elements>    # one line per point
    lambda <element>      # one line per point, same order
    end

Report (``vsp10-report/1``)::

    schema vsp10-report/1
    command <name>
    check <status> <seconds> <name> | expected <text> | observed <text>
    overall <pass|fail>
    end

Documents may be concatenated in one file; readers locate their block by
its schema line.
"""

from __future__ import annotations

from .exactfield import ExtensionField, Field, prime_field
from .linalg import Subspace
from .multipoly import Poly

INSTANCE_SCHEMA = "vsp10-instance/1"
PRESENTATION_SCHEMA = "vsp10-presentation/1"
REPORT_SCHEMA = "vsp10-report/1"


class FormatError(ValueError):
    """A document is malformed or does not match its schema."""


def _block(text: str, schema: str) -> list[str]:
    lines = text.splitlines()
    head = f"schema {schema}"
    try:
        start = next(i for i, ln in enumerate(lines) if ln.strip() == head)
    except StopIteration:
        raise FormatError(f"no '{head}' line found") from None
    out = []
    for ln in lines[start + 1 :]:
        ln = ln.split("#", 1)[0].strip()
        if ln == "end":
            return out
        if ln:
            out.append(ln)
    raise FormatError(f"{schema} block has no 'end' line")


def _expect(lines: list[str], pos: int, key: str) -> list[str]:
    if pos >= len(lines):
        raise FormatError(f"missing '{key}' line")
    toks = lines[pos].split(" ", 1)
    if toks[0] != key:
        raise FormatError(f"expected '{key}', found {lines[pos]!r}")
    return toks[1].split() if len(toks) > 1 else []


def _read_matrix(lines, pos, key, F: Field):
    head = _expect(lines, pos, key)
    try:
        r, c = int(head[0]), int(head[1])
    except (IndexError, ValueError):
        raise FormatError(f"bad shape on '{key}' line") from None
    rows = []
    for k in range(r):
        toks = _expect(lines, pos + 1 + k, "row")
        if len(toks) != c:
            raise FormatError(f"{key} row {k} has {len(toks)} entries, expected {c}")
        try:
            rows.append([F.parse(t) for t in toks])
        except ValueError as exc:
            raise FormatError(f"{key} row {k}: {exc}") from None
    return rows, pos + 1 + r


def _write_matrix(key: str, F: Field, rows) -> list[str]:
    n = len(rows[0]) if rows else 0
    out = [f"{key} {len(rows)} {n}"]
    out.extend("row " + " ".join(F.format(c) for c in row) for row in rows)
    return out


def dump_instance(inst) -> str:
    F = inst.field
    lines = [f"schema {INSTANCE_SCHEMA}", f"prime {F.characteristic}", f"seed {inst.seed}"]
    lines += _write_matrix("L_S", F, inst.L.basis)
    lines += _write_matrix("P_S", F, inst.P.basis)
    lines.append("f " + inst.f.to_text())
    lines.append("m_P " + inst.m_P.to_text())
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_instance_fields(text: str):
    """The raw contents of an instance block: (field, seed, L rows, P rows, f, m_P)."""
    lines = _block(text, INSTANCE_SCHEMA)
    try:
        p = int(_expect(lines, 0, "prime")[0])
        F = prime_field(p)
    except (IndexError, ValueError) as exc:
        raise FormatError(f"bad prime: {exc}") from None
    seed_toks = _expect(lines, 1, "seed")
    seed = " ".join(seed_toks)
    seed = int(seed) if seed.lstrip("-").isdigit() else seed
    L, pos = _read_matrix(lines, 2, "L_S", F)
    P, pos = _read_matrix(lines, pos, "P_S", F)
    try:
        f = Poly.parse(" ".join(_expect(lines, pos, "f")), F, 6)
        m_P = Poly.parse(" ".join(_expect(lines, pos + 1, "m_P")), F, 6)
    except ValueError as exc:
        raise FormatError(f"bad cubic: {exc}") from None
    return F, seed, L, P, f, m_P


def load_instance(text: str, max_degree: int | None = None):
    """Rebuild and re-verify an instance; the stored f, m_P and P_S must match."""
    from .vsp import InstanceError, instance_from_subspace

    F, seed, L, P, f, m_P = parse_instance_fields(text)
    Ls = Subspace.span(F, 15, L)
    try:
        inst = instance_from_subspace(seed, Ls, max_degree)
    except InstanceError as exc:
        raise FormatError(f"stored L_S is not a generic instance: {exc}") from None
    if inst.P.basis != P:
        raise FormatError("stored P_S is not the annihilator basis of L_S")
    if inst.f != f or inst.m_P != m_P:
        raise FormatError("stored cubics do not match the ones recomputed from L_S")
    return inst


def dump_presentation(pres) -> str:
    T = pres.field
    lines = [f"schema {PRESENTATION_SCHEMA}", f"prime {T.characteristic}"]
    mod = getattr(T, "modulus", None)
    lines.append("modulus " + (" ".join(str(c) for c in mod) if mod is not None else "0 1"))
    for pt in pres.points:
        lines.append("point " + " ".join(T.format(c) for c in pt))
    for lam in pres.lambdas:
        lines.append("lambda " + T.format(lam))
    lines.append("end")
    return "\n".join(lines) + "\n"


def load_presentation(text: str):
    """(field, points, lambdas) from a presentation block."""
    lines = _block(text, PRESENTATION_SCHEMA)
    try:
        p = int(_expect(lines, 0, "prime")[0])
        mod = [int(c) for c in _expect(lines, 1, "modulus")]
    except (IndexError, ValueError) as exc:
        raise FormatError(f"bad field header: {exc}") from None
    T: Field = prime_field(p) if len(mod) == 2 else ExtensionField(p, mod)
    points, lambdas = [], []
    try:
        for ln in lines[2:]:
            key, _, rest = ln.partition(" ")
            if key == "point":
                points.append([T.parse(t) for t in rest.split()])
            elif key == "lambda":
                lambdas.append(T.parse(rest))
            else:
                raise FormatError(f"unexpected line {ln!r}")
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if len(points) != len(lambdas):
        raise FormatError("point and lambda counts differ")
    return T, points, lambdas


def dump_report(report) -> str:
    lines = [f"schema {REPORT_SCHEMA}", f"command {report.command}"]
    for r in report.records:
        lines.append(f"check {r.status} {r.seconds:.3f} {r.name} | expected {r.expected} | observed {r.observed}")
    lines.append(f"overall {'pass' if report.ok else 'fail'}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def report_statuses(text: str) -> dict:
    """Map check name -> status from a report block."""
    out = {}
    for ln in _block(text, REPORT_SCHEMA):
        if ln.startswith("check "):
            _, status, _, rest = ln.split(" ", 3)
            out[rest.split(" | ", 1)[0]] = status
    return out


__all__ = [
    "FormatError",
    "INSTANCE_SCHEMA",
    "PRESENTATION_SCHEMA",
    "REPORT_SCHEMA",
    "dump_instance",
    "load_instance",
    "parse_instance_fields",
    "dump_presentation",
    "load_presentation",
    "dump_report",
    "report_statuses",
]
