"""Levi-Civita connection of a left-invariant metric and the tensors built on it.

For left-invariant fields the metric coefficients are constant, so the Koszul
formula loses its derivative terms and reads

    2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y).

Curvature uses ``R(x,y) = nabla_x nabla_y - nabla_y nabla_x - nabla_[x,y]`` and
the exterior derivative of an invariant 1-form is ``d eta(x,y) = -eta([x,y])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import RANGE, Matrix4, Tensor3, Vector4
from .hnstruct import Metric
from .liealg import LieAlgebra


@dataclass(frozen=True)
class Connection:
    """``gamma[i, j, k]`` is the k-th coordinate of nabla_{e_i} e_j."""

    gamma: Tensor3

    def covariant(self, x: Sequence, y: Sequence) -> Vector4:
        """nabla_x y for invariant fields with coordinates ``x`` and ``y``."""
        out = Vector4.zero()
        for i in RANGE:
            if not x[i]:
                continue
            for j in RANGE:
                if y[j]:
                    out = out + self.gamma.vector(i, j) * (x[i] * y[j])
        return out

    def operator(self, i: int) -> Matrix4:
        """nabla_{e_i} as a matrix; column j holds nabla_{e_i} e_j."""
        return Matrix4.from_columns([self.gamma.vector(i, j) for j in RANGE])

    def table(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        """Nonzero ``nabla_{e_i} e_j`` as ``{(i, j): {k: coeff}}``, 1-based."""
        out: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j, k), v in self.gamma.nonzero().items():
            out.setdefault((i, j), {})[k] = v
        return out


def levi_civita(alg: LieAlgebra, g: Metric) -> Connection:
    """Solve the reduced Koszul formula exactly."""
    c = alg.constants
    G = g.matrix

    def gb(i, j, k):
        # g([e_i, e_j], e_k)
        return sum((c[i, j, m] * G[m][k] for m in RANGE), Fraction(0))

    lowered = {
        (i, j, k): (gb(i, j, k) - gb(j, k, i) + gb(k, i, j)) / 2
        for i in RANGE
        for j in RANGE
        for k in RANGE
    }
    Ginv = g.inverse

    def raised(i, j, m):
        return sum((Ginv[m][k] * lowered[i, j, k] for k in RANGE), Fraction(0))

    return Connection(Tensor3.from_function(raised))


def nabla_J(conn: Connection, J: Matrix4) -> Tensor3:
    """``(nabla_{e_i} J) e_j = nabla_{e_i}(J e_j) - J nabla_{e_i} e_j``.

    Entry ``(i, j, k)`` is the k-th coordinate.
    """
    ops = [conn.operator(i) for i in RANGE]
    A = [ops[i] @ J - J @ ops[i] for i in RANGE]
    return Tensor3.from_function(lambda i, j, k: A[i][k][j])


@dataclass(frozen=True)
class StructureTensor:
    alpha: int
    F: Tensor3

    def __getitem__(self, idx) -> Fraction:
        return self.F[idx]


def structure_tensor(conn: Connection, J: Matrix4, g: Metric, alpha: int) -> StructureTensor:
    """``F(x, y, z) = g((nabla_x J) y, z)`` on all basis triples."""
    NJ = nabla_J(conn, J)
    lowered = {(i, j): g.lower(NJ.vector(i, j)) for i in RANGE for j in RANGE}
    return StructureTensor(alpha, Tensor3.from_function(lambda i, j, k: lowered[i, j][k]))


@dataclass(frozen=True)
class LeeForm:
    alpha: int
    theta: Vector4  # theta(e_i) for i = 1..4

    def __getitem__(self, i: int) -> Fraction:
        return self.theta[i]


def lee_form(F: StructureTensor, g: Metric) -> LeeForm:
    """``theta(z) = g^{ij} F(e_i, e_j, z)``."""
    Ginv = g.inverse
    theta = Vector4(
        sum((Ginv[i][j] * F.F[i, j, k] for i in RANGE for j in RANGE), Fraction(0))
        for k in RANGE
    )
    return LeeForm(F.alpha, theta)


def square_norm_nabla_J(conn: Connection, J: Matrix4, g: Metric) -> Fraction:
    """``||nabla J||^2 = g^{ij} g^{kl} g((nabla_i J) e_k, (nabla_j J) e_l)``.

    Summed as ``g^{ij} tr(G^{-1} A_i^T G A_j)`` with A_i the matrix of nabla_i J.
    """
    ops = [conn.operator(i) for i in RANGE]
    A = [ops[i] @ J - J @ ops[i] for i in RANGE]
    G, Ginv = g.matrix, g.inverse
    total = Fraction(0)
    for i in RANGE:
        for j in RANGE:
            if Ginv[i][j]:
                total += Ginv[i][j] * (Ginv @ A[i].T @ G @ A[j]).trace()
    return total


@dataclass(frozen=True)
class Curvature:
    """``operators[(i, j)]`` is R(e_i, e_j) as a matrix (0-based keys)."""

    operators: dict

    def __call__(self, i: int, j: int) -> Matrix4:
        return self.operators[i, j]

    def apply(self, i: int, j: int, k: int) -> Vector4:
        """R(e_i, e_j) e_k."""
        return self.operators[i, j].column(k)

    @property
    def is_flat(self) -> bool:
        return all(m.is_zero() for m in self.operators.values())


def curvature(conn: Connection, alg: LieAlgebra) -> Curvature:
    ops = [conn.operator(i) for i in RANGE]
    c = alg.constants
    out = {}
    for i in RANGE:
        for j in RANGE:
            R = ops[i] @ ops[j] - ops[j] @ ops[i]
            for m in RANGE:
                if c[i, j, m]:
                    R = R - ops[m] * c[i, j, m]
            out[i, j] = R
    return Curvature(out)


@dataclass(frozen=True)
class TwoForm:
    matrix: Matrix4  # matrix[i][j] = omega(e_i, e_j)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()


def exterior_derivative_1form(eta: Sequence, alg: LieAlgebra) -> TwoForm:
    """``d eta(e_i, e_j) = -eta([e_i, e_j])`` for an invariant 1-form."""
    eta = Vector4(eta)
    c = alg.constants
    return TwoForm(Matrix4.from_function(lambda i, j: -eta.dot(c.vector(i, j))))


def compose_form_with_J(eta: Sequence, J: Matrix4) -> Vector4:
    """Components of ``eta o J``: ``(eta o J)(e_i) = eta(J e_i)``."""
    return J.T.apply(eta)
