"""Four-dimensional real Lie algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exact import (
    DIM,
    RANGE,
    Matrix4,
    Tensor3,
    Vector4,
    as_rational,
    kernel,
    row_echelon,
)


class InvalidAlgebraError(ValueError):
    """Structure constants fail antisymmetry or the Jacobi identity."""

    def __init__(self, result: "ValidationResult"):
        self.result = result
        super().__init__("; ".join(result.messages()))


class LieAlgebra:
    """Structure constants ``c[i, j, k]`` with ``[e_i, e_j] = sum_k c[i, j, k] e_k``.

    Indices are 0-based internally.  Construction does not validate; call
    :func:`validate` (user input may be broken and deserves a full report).
    """

    __slots__ = ("constants",)

    def __init__(self, constants: Tensor3):
        self.constants = constants

    @classmethod
    def from_brackets(cls, brackets: Mapping[tuple[int, int], Mapping[int, object]]) -> "LieAlgebra":
        """Build from ``{(i, j): {k: coeff}}`` with 1-based labels.

        Each listed bracket also sets ``[e_j, e_i]`` to its negative.  Listing
        both orders of one pair is an error.
        """
        c = {}
        for (i, j), terms in brackets.items():
            if i == j:
                raise ValueError(f"[e{i},e{i}] is zero by antisymmetry")
            if (j, i) in brackets:
                raise ValueError(f"bracket of e{i}, e{j} given twice")
            for k, coeff in terms.items():
                q = as_rational(coeff)
                if q:
                    c[(i, j, k)] = c.get((i, j, k), 0) + q
                    c[(j, i, k)] = c.get((j, i, k), 0) - q
        return cls(Tensor3.from_labels(c))

    @classmethod
    def abelian(cls) -> "LieAlgebra":
        return cls(Tensor3())

    def bracket(self, x: Sequence, y: Sequence) -> Vector4:
        return bracket(self, x, y)

    def ad(self, i: int) -> Matrix4:
        """Matrix of ``ad(e_i)`` (0-based); column j is ``[e_i, e_j]``."""
        return Matrix4.from_columns([self.constants.vector(i, j) for j in RANGE])

    def brackets(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        """Nonzero brackets ``[e_i, e_j]`` with i < j, 1-based labels."""
        out = {}
        for i, j in combinations(RANGE, 2):
            v = self.constants.vector(i, j)
            if not v.is_zero():
                out[(i + 1, j + 1)] = {k + 1: v[k] for k in RANGE if v[k]}
        return out

    def scaled(self, factor) -> "LieAlgebra":
        return LieAlgebra(self.constants * factor)

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.constants == other.constants

    def __hash__(self):
        return hash(self.constants)

    def __repr__(self):
        return f"LieAlgebra({self.brackets()})"


def bracket(alg: LieAlgebra, x: Sequence, y: Sequence) -> Vector4:
    """Bilinear extension of the structure constants."""
    c = alg.constants
    out = [Fraction(0)] * DIM
    for i in RANGE:
        if not x[i]:
            continue
        for j in RANGE:
            if not y[j] or i == j:
                continue
            w = x[i] * y[j]
            for k in RANGE:
                out[k] += w * c[i, j, k]
    return Vector4(out)


def change_basis(alg: LieAlgebra, A: Matrix4) -> LieAlgebra:
    """Structure constants in the basis ``f_i = sum_p A[p][i] e_p``."""
    A = Matrix4(A)
    Ainv = A.inverse()
    cols = [A.column(i) for i in RANGE]

    def entry(i, j, k):
        return Ainv.apply(bracket(alg, cols[i], cols[j]))[k]

    return LieAlgebra(Tensor3.from_function(entry))


@dataclass(frozen=True)
class ValidationResult:
    """Antisymmetry violations ``(i, j, k)`` and Jacobi residuals, 1-based."""

    antisymmetry_violations: tuple[tuple[int, int, int], ...] = ()
    jacobi_violations: tuple[tuple[tuple[int, int, int], Vector4], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.antisymmetry_violations and not self.jacobi_violations

    def __bool__(self):
        return self.ok

    def messages(self) -> list[str]:
        msgs = [
            f"antisymmetry: c[{i},{j}]^{k} != -c[{j},{i}]^{k}"
            for i, j, k in self.antisymmetry_violations
        ]
        for (i, j, k), r in self.jacobi_violations:
            res = ", ".join(str(x) for x in r)
            msgs.append(f"jacobi fails on (e{i}, e{j}, e{k}): residual ({res})")
        return msgs


def validate(alg: LieAlgebra) -> ValidationResult:
    """Check antisymmetry and the Jacobi identity on all basis triples.

    Reports every violation rather than stopping at the first.
    """
    c = alg.constants
    anti = tuple(
        (i + 1, j + 1, k + 1)
        for i in RANGE
        for j in RANGE
        if i <= j
        for k in RANGE
        if c[i, j, k] + c[j, i, k] != 0
    )
    jac = []
    # Antisymmetry reduces the identity to strictly increasing triples.
    for i, j, k in combinations(RANGE, 3):
        res = jacobi_residual(alg, i, j, k)
        if not res.is_zero():
            jac.append(((i + 1, j + 1, k + 1), res))
    return ValidationResult(anti, tuple(jac))


def jacobi_residual(alg: LieAlgebra, i: int, j: int, k: int) -> Vector4:
    e = Vector4.basis
    x, y, z = e(i), e(j), e(k)
    b = alg.bracket
    return b(b(x, y), z) + b(b(y, z), x) + b(b(z, x), y)


@dataclass(frozen=True)
class Subalgebra:
    """A subspace given by a canonical (reduced echelon) basis."""

    basis: tuple[Vector4, ...] = field(default=())

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return len(row_echelon(self.basis + (Vector4(v),))) == self.dimension


def span(vectors: Iterable[Sequence]) -> Subalgebra:
    return Subalgebra(row_echelon(vectors))


def derived_algebra(alg: LieAlgebra) -> Subalgebra:
    """The span of all ``[e_i, e_j]``."""
    return span(alg.constants.vector(i, j) for i, j in combinations(RANGE, 2))


def bracket_of(alg: LieAlgebra, a: Subalgebra, b: Subalgebra) -> Subalgebra:
    return span(alg.bracket(x, y) for x in a.basis for y in b.basis)


def is_abelian_subalgebra(alg: LieAlgebra, sub: Subalgebra) -> bool:
    return bracket_of(alg, sub, sub).dimension == 0


def is_heisenberg_subalgebra(alg: LieAlgebra, sub: Subalgebra) -> bool:
    """3-dimensional with 1-dimensional derived algebra central in ``sub``."""
    if sub.dimension != 3:
        return False
    d = bracket_of(alg, sub, sub)
    return d.dimension == 1 and bracket_of(alg, d, sub).dimension == 0


def center(alg: LieAlgebra) -> Subalgebra:
    """Kernel of ``x -> ([x, e_1], ..., [x, e_4])``."""
    # Row (j, k) of the system: sum_i x_i c[i, j, k] = 0.
    c = alg.constants
    rows = [[c[i, j, k] for i in RANGE] for j in RANGE for k in RANGE]
    return Subalgebra(kernel(rows))


def derived_series(alg: LieAlgebra) -> list[int]:
    """Dimensions of g, g', g'', ... until the series stabilises."""
    cur = span(Vector4.basis(i) for i in RANGE)
    dims = [cur.dimension]
    while True:
        nxt = bracket_of(alg, cur, cur)
        if nxt.dimension == cur.dimension:
            return dims
        dims.append(nxt.dimension)
        if nxt.dimension == 0:
            return dims
        cur = nxt


def is_solvable(alg: LieAlgebra) -> bool:
    return derived_series(alg)[-1] == 0

