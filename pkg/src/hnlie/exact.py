"""Exact rational scalars and fixed-size (dimension 4) linear containers.

Everything downstream is computed over :class:`fractions.Fraction`; floats are
rejected at the boundary so no rounding can enter a golden table.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

DIM = 4
RANGE = range(DIM)

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

_OPS: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


class DegenerateError(ArithmeticError):
    """A matrix that must be invertible is singular."""


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a reduced Fraction.

    Floats (and bools) are refused: they would silently import rounding.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise ValueError(f"not an exact rational literal: {value!r}")
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rational_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) exactly.

    Division by zero raises :class:`ZeroDivisionError`.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    a, b = as_rational(a), as_rational(b)
    if op == "div" and b == 0:
        raise ZeroDivisionError(f"{a} / 0")
    return fn(a, b)


def format_rational(q: Fraction) -> str:
    return str(q)


class Vector4(tuple):
    """Coordinates of a vector (or covector) in the fixed basis e1..e4.

    Indexing is 0-based; ``+``, ``-`` and scalar ``*`` are componentwise, not
    the tuple operations.
    """

    __slots__ = ()

    def __new__(cls, components: Iterable = (0, 0, 0, 0)):
        comps = tuple(as_rational(c) for c in components)
        if len(comps) != DIM:
            raise ValueError(f"Vector4 needs {DIM} components, got {len(comps)}")
        return super().__new__(cls, comps)

    @classmethod
    def basis(cls, i: int) -> "Vector4":
        """The basis vector e_{i+1} (0-based ``i``)."""
        return cls(1 if k == i else 0 for k in RANGE)

    @classmethod
    def zero(cls) -> "Vector4":
        return cls()

    def __add__(self, other):
        return Vector4(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return Vector4(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Vector4(-a for a in self)

    def __mul__(self, scalar):
        s = as_rational(scalar)
        return Vector4(s * a for a in self)

    __rmul__ = __mul__

    def dot(self, other) -> Fraction:
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self)

    def __repr__(self):
        return "Vector4(" + ", ".join(str(c) for c in self) + ")"


class Matrix4(tuple):
    """A 4x4 rational matrix stored as a tuple of row :class:`Vector4`.

    ``M[i][j]`` is row i, column j.  An endomorphism J is stored so that
    column j holds the coordinates of J e_{j+1}.
    """

    __slots__ = ()

    def __new__(cls, rows: Iterable[Iterable]):
        rs = tuple(Vector4(r) for r in rows)
        if len(rs) != DIM:
            raise ValueError(f"Matrix4 needs {DIM} rows, got {len(rs)}")
        return super().__new__(cls, rs)

    @classmethod
    def identity(cls) -> "Matrix4":
        return cls.diag(1, 1, 1, 1)

    @classmethod
    def zero(cls) -> "Matrix4":
        return cls([[0] * DIM for _ in RANGE])

    @classmethod
    def diag(cls, *d) -> "Matrix4":
        if len(d) != DIM:
            raise ValueError("diag needs 4 entries")
        return cls([[d[i] if i == j else 0 for j in RANGE] for i in RANGE])

    @classmethod
    def from_columns(cls, cols: Sequence[Iterable]) -> "Matrix4":
        cols = [Vector4(c) for c in cols]
        return cls([[cols[j][i] for j in RANGE] for i in RANGE])

    @classmethod
    def from_function(cls, f: Callable[[int, int], object]) -> "Matrix4":
        return cls([[f(i, j) for j in RANGE] for i in RANGE])

    @property
    def T(self) -> "Matrix4":
        return Matrix4([[self[j][i] for j in RANGE] for i in RANGE])

    def column(self, j: int) -> Vector4:
        return Vector4(self[i][j] for i in RANGE)

    def apply(self, v: Sequence) -> Vector4:
        return Vector4(row.dot(v) for row in self)

    def __matmul__(self, other):
        if isinstance(other, Matrix4):
            cols = [self.apply(other.column(j)) for j in RANGE]
            return Matrix4.from_columns(cols)
        return self.apply(other)

    def __add__(self, other):
        return Matrix4(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return Matrix4(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Matrix4(-r for r in self)

    def __mul__(self, scalar):
        return Matrix4(r * scalar for r in self)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self)

    def is_symmetric(self) -> bool:
        return self == self.T

    def is_antisymmetric(self) -> bool:
        return self == -self.T

    def trace(self) -> Fraction:
        return sum((self[i][i] for i in RANGE), Fraction(0))

    def inverse(self) -> "Matrix4":
        cols = [solve_linear(self, Vector4.basis(j)) for j in RANGE]
        return Matrix4.from_columns(cols)

    def __repr__(self):
        return "Matrix4([" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self) + "])"


class Tensor3:
    """A 4x4x4 array of rationals indexed ``t[i, j, k]`` (0-based)."""

    __slots__ = ("_data",)

    def __init__(self, data: Iterable = ()):
        flat = tuple(as_rational(x) for x in data) if data else (Fraction(0),) * DIM**3
        if len(flat) != DIM**3:
            raise ValueError(f"Tensor3 needs {DIM ** 3} entries, got {len(flat)}")
        self._data = flat

    @classmethod
    def from_function(cls, f: Callable[[int, int, int], object]) -> "Tensor3":
        return cls(f(i, j, k) for i in RANGE for j in RANGE for k in RANGE)

    @classmethod
    def from_labels(cls, entries: dict) -> "Tensor3":
        """Build from ``{(i, j, k): value}`` with 1-based basis labels."""
        t = [Fraction(0)] * DIM**3
        for (i, j, k), v in entries.items():
            t[_flat(i - 1, j - 1, k - 1)] = as_rational(v)
        return cls(t)

    def __getitem__(self, idx) -> Fraction:
        i, j, k = idx
        return self._data[_flat(i, j, k)]

    def vector(self, i: int, j: int) -> Vector4:
        """The slice ``t[i, j, :]`` as a vector."""
        base = _flat(i, j, 0)
        return Vector4(self._data[base:base + DIM])

    def __iter__(self) -> Iterator[tuple[tuple[int, int, int], Fraction]]:
        n = 0
        for i in RANGE:
            for j in RANGE:
                for k in RANGE:
                    yield (i, j, k), self._data[n]
                    n += 1

    def nonzero(self) -> dict[tuple[int, int, int], Fraction]:
        """Nonzero entries keyed by 1-based basis labels, e.g. ``(3, 1, 4)``."""
        return {(i + 1, j + 1, k + 1): v for (i, j, k), v in self if v}

    def is_zero(self) -> bool:
        return not any(self._data)

    def __eq__(self, other):
        return isinstance(other, Tensor3) and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __add__(self, other):
        return Tensor3(a + b for a, b in zip(self._data, other._data))

    def __sub__(self, other):
        return Tensor3(a - b for a, b in zip(self._data, other._data))

    def __neg__(self):
        return Tensor3(-a for a in self._data)

    def __mul__(self, scalar):
        s = as_rational(scalar)
        return Tensor3(s * a for a in self._data)

    __rmul__ = __mul__

    def __repr__(self):
        items = ", ".join(f"{''.join(map(str, k))}: {v}" for k, v in self.nonzero().items())
        return f"Tensor3({{{items}}})"


def _flat(i: int, j: int, k: int) -> int:
    if not (0 <= i < DIM and 0 <= j < DIM and 0 <= k < DIM):
        raise IndexError((i, j, k))
    return (i * DIM + j) * DIM + k


def solve_linear(A: Sequence[Sequence], b: Sequence) -> Vector4:
    """Solve ``A x = b`` exactly by Gauss-Jordan elimination.

    Raises :class:`DegenerateError` when A is singular.
    """
    m = [[as_rational(x) for x in row] + [as_rational(b[i])] for i, row in enumerate(A)]
    for col in RANGE:
        piv = next((r for r in range(col, DIM) if m[r][col] != 0), None)
        if piv is None:
            raise DegenerateError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in RANGE:
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return Vector4(m[r][DIM] for r in RANGE)


def row_echelon(vectors: Iterable[Sequence]) -> tuple[Vector4, ...]:
    """Reduced row echelon basis of the span of ``vectors``.

    Pivots are chosen left to right and normalised to 1, so the result depends
    only on the subspace, not on the spanning set.
    """
    rows = [list(Vector4(v)) for v in vectors]
    out: list[list[Fraction]] = []
    for col in RANGE:
        piv = next((r for r in rows if r[col] != 0), None)
        if piv is None:
            continue
        rows.remove(piv)
        piv = [x / piv[col] for x in piv]
        rows = [[x - r[col] * y for x, y in zip(r, piv)] for r in rows]
        out = [[x - r[col] * y for x, y in zip(r, piv)] for r in out]
        out.append(piv)
    return tuple(Vector4(r) for r in out)


def kernel(A: Sequence[Sequence]) -> tuple[Vector4, ...]:
    """Basis of the null space of a (rows x 4) matrix, in canonical echelon form."""
    ech = [list(r) for r in row_echelon(A)]
    pivots = [next(c for c in RANGE if r[c] != 0) for r in ech]
    free = [c for c in RANGE if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * DIM
        v[f] = Fraction(1)
        for r, p in zip(ech, pivots):
            v[p] = -r[f]
        basis.append(v)
    return row_echelon(basis)


def inertia(S: Matrix4) -> tuple[int, int, int]:
    """(positive, negative, zero) counts of a symmetric matrix, by congruence.

    Exact symmetric elimination; Sylvester's law makes the counts basis free.
    """
    if not S.is_symmetric():
        raise ValueError("inertia needs a symmetric matrix")
    a = [list(r) for r in S]
    n = DIM
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j gives diagonal 2 a_ij (a_ii = a_jj = 0 here)
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for r in active:
            f = a[r][piv] / p
            if f:
                for k in range(n):
                    a[r][k] -= f * a[piv][k]
                for k in range(n):
                    a[k][r] -= f * a[k][piv]
    return pos, neg, n - pos - neg
