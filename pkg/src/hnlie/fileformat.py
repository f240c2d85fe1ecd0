"""Line-oriented ``.alg`` input files.

::

    # hc5a
    dim = 4
    bracket 1 2 = 1 e_2
    bracket 1 3 = 1/2 e_3
    bracket 3 4 = 1/2 e_2
    metric = diag(1, 1, -1, -1)
    structure = standard

Only ``i < j`` brackets are written; unlisted brackets are zero.  ``dim`` and
``metric`` are optional (4 and diag(1,1,-1,-1)).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import as_rational
from .hnstruct import Metric
from .liealg import LieAlgebra

_NUM = r"\d+(?:\s*/\s*\d+)?"
_TERM = re.compile(rf"\s*([+-])?\s*({_NUM})?\s*\*?\s*e_?(\d+)\s*")
_BRACKET = re.compile(r"^bracket\s+(\d+)\s+(\d+)\s*=\s*(.+)$")
_DIM = re.compile(r"^dim\s*=\s*(\S+)$")
_METRIC = re.compile(r"^metric\s*=\s*diag\s*\((.*)\)$")
_STRUCTURE = re.compile(r"^structure\s*=\s*(\S+)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class AlgebraFile:
    dim: int = 4
    brackets: list[tuple[int, int, list[tuple[Fraction, int]]]] = field(default_factory=list)
    metric: tuple[Fraction, ...] | None = None
    structure: str = "standard"

    def to_algebra(self) -> LieAlgebra:
        table: dict = {}
        for i, j, terms in self.brackets:
            row = table.setdefault((i, j), {})
            for coef, k in terms:
                row[k] = row.get(k, 0) + coef
        return LieAlgebra.from_brackets(table)

    def to_metric(self) -> Metric:
        return Metric.diagonal(*self.metric) if self.metric else Metric.neutral()


def _parse_terms(rhs: str, lineno: int) -> list[tuple[Fraction, int]]:
    pos, terms = 0, []
    while pos < len(rhs):
        m = _TERM.match(rhs, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse bracket value near {rhs[pos:]!r}", lineno)
        sign, num, k = m.groups()
        if terms and sign is None:
            raise ParseError("terms must be joined by '+' or '-'", lineno)
        try:
            coef = as_rational(num.replace(" ", "")) if num else Fraction(1)
        except ZeroDivisionError:
            raise ParseError("zero denominator", lineno) from None
        if sign == "-":
            coef = -coef
        k = int(k)
        if not 1 <= k <= 4:
            raise ParseError(f"basis index e_{k} out of range 1..4", lineno)
        terms.append((coef, k))
        pos = m.end()
    if not terms:
        raise ParseError("empty bracket value", lineno)
    return terms


def parse_algebra_file(text: str) -> AlgebraFile:
    out = AlgebraFile()
    seen_pairs: set[tuple[int, int]] = set()
    seen_keys: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _BRACKET.match(line):
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i <= 4 and 1 <= j <= 4):
                raise ParseError(f"bracket indices must lie in 1..4, got {i} {j}", lineno)
            if i >= j:
                raise ParseError(f"bracket {i} {j}: write brackets with i < j", lineno)
            if (i, j) in seen_pairs:
                raise ParseError(f"duplicate bracket {i} {j}", lineno)
            seen_pairs.add((i, j))
            out.brackets.append((i, j, _parse_terms(m.group(3), lineno)))
            continue
        for key, pattern in (("dim", _DIM), ("metric", _METRIC), ("structure", _STRUCTURE)):
            m = pattern.match(line)
            if m:
                break
        else:
            raise ParseError(f"unrecognised line {raw.strip()!r}", lineno)
        if key in seen_keys:
            raise ParseError(f"duplicate '{key}' line", lineno)
        seen_keys.add(key)
        if key == "dim":
            if m.group(1) != "4":
                raise ParseError(f"only dim = 4 is supported, got {m.group(1)}", lineno)
        elif key == "metric":
            try:
                diag = tuple(as_rational(x) for x in m.group(1).split(","))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad metric entry: {exc}", lineno) from None
            if len(diag) != 4:
                raise ParseError("metric needs 4 diagonal entries", lineno)
            if any(d == 0 for d in diag):
                raise ParseError("metric is degenerate", lineno)
            out.metric = diag
        else:
            if m.group(1) != "standard":
                raise ParseError(f"unsupported structure {m.group(1)!r}", lineno)
    return out


def format_algebra_file(alg: LieAlgebra, metric: Metric | None = None, title: str | None = None) -> str:
    lines = []
    if title:
        lines.append(f"# {title}")
    lines.append("dim = 4")
    for (i, j), terms in alg.brackets().items():
        parts = []
        for n, (k, c) in enumerate(terms.items()):
            mag = str(abs(c))
            if n == 0:
                parts.append(f"{'-' if c < 0 else ''}{mag} e_{k}")
            else:
                parts.append(f"{'-' if c < 0 else '+'} {mag} e_{k}")
        lines.append(f"bracket {i} {j} = {' '.join(parts)}")
    if metric is not None:
        if not metric.is_diagonal():
            raise ValueError("only diagonal metrics can be written")
        lines.append("metric = diag(" + ", ".join(map(str, metric.diagonal_entries())) + ")")
    lines.append("structure = standard")
    return "\n".join(lines) + "\n"
