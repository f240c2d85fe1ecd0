"""Almost hypercomplex structures with Hermitian-Norden metrics.

A structure is a neutral metric ``g`` together with three endomorphisms
J1, J2, J3.  J1 is an isometry of ``g`` (Hermitian) and J2, J3 are
anti-isometries (Norden), encoded by the signs ``eps = (1, -1, -1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import RANGE, DegenerateError, Matrix4, Tensor3, Vector4, inertia
from .liealg import LieAlgebra, bracket

EPS = (1, -1, -1)


class IncompatibleStructureError(ValueError):
    """The triple or the metric violates the defining identities."""


def _endomorphism(images: Sequence[tuple[int, int]]) -> Matrix4:
    """J from images ``J e_j = sign * e_k`` listed as ``(sign, k)``, 1-based k."""
    cols = []
    for sign, k in images:
        col = [0, 0, 0, 0]
        col[k - 1] = sign
        cols.append(col)
    return Matrix4.from_columns(cols)


J1_STANDARD = _endomorphism([(1, 2), (-1, 1), (-1, 4), (1, 3)])
J2_STANDARD = _endomorphism([(1, 3), (1, 4), (-1, 1), (-1, 2)])
J3_STANDARD = _endomorphism([(-1, 4), (1, 3), (-1, 2), (1, 1)])


class Metric:
    """A nondegenerate symmetric bilinear form with its exact inverse."""

    __slots__ = ("matrix", "inverse")

    def __init__(self, matrix: Matrix4):
        matrix = Matrix4(matrix)
        if not matrix.is_symmetric():
            raise ValueError("metric matrix must be symmetric")
        try:
            inv = matrix.inverse()
        except DegenerateError:
            raise DegenerateError("metric is degenerate") from None
        self.matrix = matrix
        self.inverse = inv

    @classmethod
    def diagonal(cls, *d) -> "Metric":
        return cls(Matrix4.diag(*d))

    @classmethod
    def neutral(cls) -> "Metric":
        """``x1 y1 + x2 y2 - x3 y3 - x4 y4``."""
        return cls.diagonal(1, 1, -1, -1)

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        return Vector4(x).dot(self.matrix.apply(y))

    def lower(self, v: Sequence) -> Vector4:
        return self.matrix.apply(v)

    def raise_(self, w: Sequence) -> Vector4:
        return self.inverse.apply(w)

    def signature(self) -> tuple[int, int]:
        pos, neg, _ = inertia(self.matrix)
        return pos, neg

    def is_diagonal(self) -> bool:
        return all(self.matrix[i][j] == 0 for i in RANGE for j in RANGE if i != j)

    def diagonal_entries(self) -> tuple[Fraction, ...]:
        return tuple(self.matrix[i][i] for i in RANGE)

    def __eq__(self, other):
        return isinstance(other, Metric) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        if self.is_diagonal():
            return "Metric.diagonal(" + ", ".join(map(str, self.diagonal_entries())) + ")"
        return f"Metric({self.matrix!r})"


@dataclass(frozen=True)
class HNStructure:
    J: tuple[Matrix4, Matrix4, Matrix4]
    g: Metric = field(default_factory=Metric.neutral)
    eps: tuple[int, int, int] = EPS

    def J_alpha(self, alpha: int) -> Matrix4:
        """J_alpha with the 1-based alpha used throughout the literature."""
        return self.J[alpha - 1]


def standard_structure(g: Metric | None = None) -> HNStructure:
    """The fixed triple (J1 e1 = e2, J2 e1 = e3, J3 e1 = -e4, ...) with ``g``.

    ``g`` defaults to diag(1, 1, -1, -1).
    """
    return HNStructure((J1_STANDARD, J2_STANDARD, J3_STANDARD), g or Metric.neutral())


@dataclass(frozen=True)
class CheckResult:
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def check_quaternionic(J: Sequence[Matrix4]) -> CheckResult:
    """``J_a^2 = -I`` and ``J_a = J_b J_c = -J_c J_b`` for cyclic (a, b, c)."""
    minus_id = -Matrix4.identity()
    fails = []
    for a in range(3):
        if J[a] @ J[a] != minus_id:
            fails.append(f"J{a + 1}^2 != -I")
    for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        if J[b] @ J[c] != J[a]:
            fails.append(f"J{a + 1} != J{b + 1} J{c + 1}")
        if -(J[c] @ J[b]) != J[a]:
            fails.append(f"J{a + 1} != -J{c + 1} J{b + 1}")
    return CheckResult(tuple(fails))


def check_compatibility(H: HNStructure) -> CheckResult:
    """``g(J_a x, J_a y) = eps_a g(x, y)`` on all basis pairs."""
    e = Vector4.basis
    fails = []
    for a in range(3):
        Ja, eps = H.J[a], H.eps[a]
        for i in RANGE:
            for j in range(i, 4):
                lhs = H.g(Ja.column(i), Ja.column(j))
                rhs = eps * H.g(e(i), e(j))
                if lhs != rhs:
                    fails.append(
                        f"alpha={a + 1} at (e{i + 1},e{j + 1}): "
                        f"g(J e{i + 1}, J e{j + 1}) = {lhs}, expected {rhs}"
                    )
    return CheckResult(tuple(fails))


@dataclass(frozen=True)
class AssociatedTensor:
    alpha: int
    matrix: Matrix4  # matrix[i][j] = g(J_alpha e_i, e_j)


def associated_tensors(H: HNStructure) -> tuple[AssociatedTensor, ...]:
    """``g_a(x, y) = g(J_a x, y)``; g1 is the Kaehler form, g2 and g3 are metrics."""
    out = []
    for a in range(3):
        Ja = H.J[a]
        m = Matrix4.from_function(lambda i, j: H.g(Ja.column(i), Vector4.basis(j)))
        out.append(AssociatedTensor(a + 1, m))
    return tuple(out)


def nijenhuis(alg: LieAlgebra, J: Matrix4) -> Tensor3:
    """``N(x,y) = [Jx,Jy] - J[Jx,y] - J[x,Jy] - [x,y]`` on basis pairs.

    Entry ``(i, j, k)`` is the k-th coordinate of N(e_i, e_j).  Left-invariant
    fields have constant coefficients, so field brackets are algebra brackets.
    """
    cols = [J.column(i) for i in RANGE]
    vals = {}
    for i in RANGE:
        x, Jx = Vector4.basis(i), cols[i]
        for j in RANGE:
            y, Jy = Vector4.basis(j), cols[j]
            vals[i, j] = (
                bracket(alg, Jx, Jy)
                - J.apply(bracket(alg, Jx, y))
                - J.apply(bracket(alg, x, Jy))
                - bracket(alg, x, y)
            )
    return Tensor3.from_function(lambda i, j, k: vals[i, j][k])


@dataclass(frozen=True)
class IntegrabilityResult:
    integrable: bool
    # (alpha, i, j, N_alpha(e_i, e_j)) with 1-based labels, first nonzero found
    witness: tuple[int, int, int, Vector4] | None = None

    def __bool__(self):
        return self.integrable


def is_hypercomplex(alg: LieAlgebra, H: HNStructure) -> IntegrabilityResult:
    for a in range(3):
        N = nijenhuis(alg, H.J[a])
        for i in RANGE:
            for j in RANGE:
                v = N.vector(i, j)
                if not v.is_zero():
                    return IntegrabilityResult(False, (a + 1, i + 1, j + 1, v))
    return IntegrabilityResult(True)


def is_abelian_structure(alg: LieAlgebra, H: HNStructure) -> bool:
    """``[J_a x, J_a y] = [x, y]`` for all basis pairs and every a."""
    for Ja in H.J:
        for i in RANGE:
            for j in range(i + 1, 4):
                if bracket(alg, Ja.column(i), Ja.column(j)) != alg.constants.vector(i, j):
                    return False
    return True
